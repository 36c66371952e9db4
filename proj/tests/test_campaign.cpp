#include <doctest.h>

#include <fstream>
#include <set>

#include "gerst/campaign.hpp"

using namespace gerst;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gerst-campaign-test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  fs::remove(witness_path_for(p));
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Down-closed subsets of {0..box}^n by filtering every subset.
long brute_down_set_count(int n, int box) {
  std::vector<Point> pts;
  Point p(static_cast<std::size_t>(n), 0);
  while (true) {
    pts.push_back(p);
    int k = 0;
    while (k < n && p[static_cast<std::size_t>(k)] == box) p[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
    ++p[static_cast<std::size_t>(k)];
  }
  long count = 0;
  for (unsigned long mask = 0; mask < (1UL << pts.size()); ++mask) {
    std::set<Point> s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (mask >> i & 1) s.insert(pts[i]);
    }
    bool closed = true;
    for (const auto& q : s) {
      for (std::size_t a = 0; a < q.size() && closed; ++a) {
        if (q[a] == 0) continue;
        Point r = q;
        --r[a];
        closed = s.count(r) > 0;
      }
    }
    count += closed ? 1 : 0;
  }
  return count;
}

CampaignConfig config(CampaignMode mode, const fs::path& out) {
  CampaignConfig c;
  c.mode = mode;
  c.output = out;
  return c;
}

}  // namespace

TEST_CASE("down sets of a box") {
  for (const auto& [n, box] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 2}, {3, 1}, {4, 1}}) {
    const auto sets = down_sets_in_box(n, box);
    CHECK(static_cast<long>(sets.size()) == brute_down_set_count(n, box));
    CHECK(std::set<YoungDiagram, bool (*)(const YoungDiagram&, const YoungDiagram&)>(
              sets.begin(), sets.end(),
              [](const YoungDiagram& a, const YoungDiagram& b) { return a.boxes().boxes() < b.boxes().boxes(); })
              .size() == sets.size());
  }
}

TEST_CASE("hunt-n4 in the unit box") {
  auto c = config(CampaignMode::HuntN4, scratch("hunt.jsonl"));
  c.bounds.box = 1;
  const auto s = run_campaign(c);
  CHECK(s.total == 168 * 168);
  CHECK(s.anomalies == 3);
  CHECK(s.min_deficiency == -1);
  REQUIRE(fs::exists(s.witness_path));
  const auto w = read_record(s.witness_path);
  const auto v = gerstenhaber_check(std::get<GluingDatum>(w.instance));
  CHECK(v.verdict == Verdict::Counterexample);
  CHECK(v.d == 4);
  CHECK(v.algebra_dim == 5);

  // Each find is two coordinate axes glued to the other two.
  for (const auto& r : read_log(c.output)) {
    const auto& g = std::get<GluingDatum>(r.instance);
    CHECK(g.lambda.size() == 3);
    CHECK(g.mu.size() == 3);
    std::set<Point> tops;
    for (const auto& comp : g.components) {
      tops.insert(comp.b);
      tops.insert(comp.c);
    }
    CHECK(tops.size() == 4);
    CHECK(replay_problem(r).empty());
  }
}

TEST_CASE("verify-theorem covers the enumeration then the random tail") {
  auto c = config(CampaignMode::VerifyTheorem, scratch("verify.jsonl"));
  c.bounds = {1, 2, 2};
  c.count = 40;
  c.seed = 5;
  const auto s = run_campaign(c);
  CHECK(s.total == static_cast<long>(enumerate_compatible_plans(c.bounds).size()) + 40);
  CHECK(s.records == s.total);
  CHECK(s.anomalies == 0);
  CHECK(s.min_deficiency >= 0);
  CHECK(s.witness_path.empty());
  const auto log = read_log(c.output);
  CHECK(static_cast<long>(log.size()) == s.total);
  for (const auto& r : log) CHECK(replay_problem(r).empty());
  CHECK(log.front().provenance["source"] == "enumeration");
  CHECK(log.back().provenance["source"] == "random");
}

TEST_CASE("cross-check records replay") {
  auto c = config(CampaignMode::CrossCheck, scratch("cross.jsonl"));
  c.count = 30;
  c.max_boxes = 20;
  c.seed = 11;
  const auto s = run_campaign(c);
  CHECK(s.anomalies == 0);
  auto log = read_log(c.output);
  CHECK(static_cast<long>(log.size()) == s.records);
  for (const auto& r : log) {
    CHECK(replay_problem(r).empty());
    CHECK(r.results["equality"] == true);
  }
  log.front().results["algebra_dim"] = log.front().results["algebra_dim"].get<long>() + 1;
  CHECK_FALSE(replay_problem(log.front()).empty());
}

TEST_CASE("worker count does not change the log") {
  for (const auto mode : {CampaignMode::CertifyCorpus, CampaignMode::CrossCheck}) {
    auto one = config(mode, scratch("one.jsonl"));
    one.count = 25;
    one.max_boxes = 15;
    one.seed = 3;
    auto many = one;
    many.output = scratch("many.jsonl");
    many.workers = 4;
    const auto a = run_campaign(one);
    const auto b = run_campaign(many);
    CHECK(slurp(one.output) == slurp(many.output));
    CHECK(a.min_deficiency == b.min_deficiency);
    CHECK(a.records == b.records);
  }
}

TEST_CASE("resume continues after the cursor") {
  auto full = config(CampaignMode::CertifyCorpus, scratch("full.jsonl"));
  full.count = 30;
  full.seed = 9;
  full.bounds = {3, 4, 2};
  run_campaign(full);
  const std::string whole = slurp(full.output);

  auto part = full;
  part.output = scratch("part.jsonl");
  part.resume = true;
  // Twelve complete lines and a torn thirteenth.
  std::size_t cut = 0;
  for (int k = 0; k < 12; ++k) cut = whole.find('\n', cut) + 1;
  {
    std::ofstream out(part.output, std::ios::binary);
    out << whole.substr(0, cut + 17);
  }
  const auto s = run_campaign(part);
  CHECK(s.skipped == 12);
  CHECK(s.processed == 18);
  CHECK(slurp(part.output) == whole);

  auto other = part;
  other.seed = 10;
  CHECK_THROWS_AS(run_campaign(other), Error);
}

TEST_CASE("config checks") {
  CampaignConfig c;
  c.bounds.box = 0;
  CHECK_THROWS_AS(check_config(c), Error);
  c = {};
  c.workers = 0;
  CHECK_THROWS_AS(check_config(c), Error);
  c = {};
  c.resume = true;
  CHECK_THROWS_AS(check_config(c), Error);
  CHECK(parse_campaign_mode("hunt-n4") == CampaignMode::HuntN4);
  CHECK_THROWS_AS(parse_campaign_mode("hunt"), Error);
}
