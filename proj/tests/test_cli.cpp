#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

#include "gerst/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kFixtures = GERST_FIXTURES;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gerst-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + GERST_CLI + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli("check --input " + kFixtures + "/staircase_plan.json") == 0);
  CHECK(run_cli("check --input " + kFixtures + "/staircase_gluing.json") == 0);
  CHECK(run_cli("check --input " + kFixtures + "/axis_split_n4.json") == 2);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("check") == 1);
  CHECK(run_cli("render --input " + kFixtures + "/staircase_plan.json --format png") == 1);

  const auto bad = scratch("bad.json");
  write(bad, R"({"kind": "floor-plan", "payload": {"P": [[0,0]], "h": [0]}})");
  CHECK(run_cli("check --input " + bad.string()) == 1);

  const auto invalid = scratch("invalid.json");
  write(invalid, R"({"kind": "tower", "payload": {"lambda": {"heights": [[1]]}, "columns": [{"height": 2, "base": [0,0,0]}]}})");
  CHECK(run_cli("check --input " + invalid.string()) == 1);
}

TEST_CASE("verbs write records") {
  const auto out = scratch("out.json");
  CHECK(run_cli("algebra-dim --input " + kFixtures + "/staircase_gluing.json --output " + out.string()) == 0);
  auto r = gerst::read_record(out);
  CHECK(r.results["d"] == 33);
  CHECK(r.results["algebra_dim"] == 24);

  CHECK(run_cli("scaffold --input " + kFixtures + "/corner_tower_loose.json --output " + out.string()) == 0);
  CHECK(gerst::read_record(out).instance == gerst::read_record(kFixtures + "/corner_tower_scaffolded.json").instance);

  CHECK(run_cli("floorplan --input " + kFixtures + "/corner_tower_scaffolded.json --output " + out.string()) == 0);
  CHECK(gerst::kind_of(gerst::read_record(out).instance) == "floor-plan");
  const auto plan = scratch("plan.json");
  fs::copy_file(out, plan, fs::copy_options::overwrite_existing);
  CHECK(run_cli("realize --input " + plan.string() + " --output " + out.string()) == 0);
  const auto minimal = std::get<gerst::Tower>(gerst::read_record(out).instance);
  const auto right = std::get<gerst::Tower>(gerst::read_record(kFixtures + "/corner_tower_scaffolded.json").instance);
  CHECK(minimal.lambda.is_subset_of(right.lambda));
  CHECK(minimal.columns.size() == 3);

  const auto cp = scratch("cp.json");
  write(cp, R"({"kind": "compatible-floor-plan", "payload": {"P": [[1,1],[0,2]], "Q": [[1,1],[3,0]], "h": [2,1]}})");
  CHECK(run_cli("minimize --input " + cp.string() + " --output " + out.string()) == 0);
  CHECK(run_cli("certify --input " + cp.string() + " --output " + out.string()) == 0);
  r = gerst::read_record(out);
  CHECK(r.results["certified"] == true);
  CHECK(r.results["steps"].size() > 0);

  CHECK(run_cli("render --input " + kFixtures + "/staircase_plan.json --output " + out.string()) == 0);
  CHECK(slurp(out) == "3 . . . . .\n. 2 . . . .\n. . . 5 . .\n2 . . 3 . .\n. . . 1 1 4\n");
  CHECK(run_cli("render --format svg --input " + kFixtures + "/staircase_plan.json --output " + out.string()) == 0);
  CHECK(slurp(out).rfind("<svg", 0) == 0);
  CHECK(run_cli("render --input " + kFixtures + "/axis_split_n4.json") == 1);
}

TEST_CASE("search") {
  const auto log = scratch("verify.jsonl");
  CHECK(run_cli("search --mode verify-theorem --max-r 1 --max-box 2 --max-h 1 --count 5 --output " + log.string()) == 0);
  CHECK(run_cli("search --mode verify-theorem --max-r 1 --max-box 2 --max-h 1 --count 5 --resume --output " +
              log.string()) == 0);
  CHECK(run_cli("search --mode nonsense --output " + log.string()) == 1);
  CHECK(run_cli("search --mode cross-check --count 0 --workers 0") == 1);
}
