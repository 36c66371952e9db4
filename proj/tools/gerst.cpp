// gerst: command-line front end over the JSON record format.
// Exit codes: 0 ok, 1 usage or input error, 2 counterexample or anomaly.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gerst/campaign.hpp"
#include "gerst/descent.hpp"
#include "gerst/render.hpp"

using namespace gerst;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFound = 2;

struct Options {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::string mode = "verify-theorem";
  int max_r = 2;
  int max_box = 3;
  int max_h = 2;
  int max_boxes = 40;
  long count = 0;
  int workers = 1;
  bool resume = false;
  std::string format = "ascii";
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + o.output);
  out << text;
}

InstanceRecord load(const Options& o) {
  if (o.input.empty()) throw Error(ErrorCode::ParseError, "--input is required");
  auto r = read_record(o.input);
  r.results = Json::object();
  return r;
}

template <typename T>
const T& expect(const InstanceRecord& r, const char* wanted) {
  if (const auto* v = std::get_if<T>(&r.instance)) return *v;
  throw Error(ErrorCode::UnsupportedKind, "expected a " + std::string(wanted) + ", got a " + kind_of(r.instance));
}

Json trace_json(const DescentTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j = {{"move", s.move}};
    if (!s.note.empty()) j["note"] = s.note;
    j["after"] = payload_to_json(s.after);
    steps.push_back(std::move(j));
  }
  return steps;
}

Json verdict_json(const GerstenhaberVerdict& v) {
  return {{"d", v.d},
          {"algebra_dim", v.algebra_dim},
          {"deficiency", v.deficiency},
          {"inequalities_agree", v.inequalities_agree},
          {"equality", v.equality_holds},
          {"verdict", v.verdict == Verdict::Counterexample ? "COUNTEREXAMPLE" : "SATISFIED"}};
}

int found(const std::string& witness) {
  std::cerr << "witness: " << witness << "\n";
  return kFound;
}

int cmd_check(const Options& o) {
  auto r = load(o);
  if (const auto problem = validation_problem(r.instance); !problem.empty()) {
    std::cerr << "invalid " << kind_of(r.instance) << ": " << problem << "\n";
    return kUsage;
  }
  r.results["valid"] = true;
  bool counterexample = false;
  if (const auto* g = std::get_if<GluingDatum>(&r.instance)) {
    const auto v = gerstenhaber_check(*g);
    r.results.update(verdict_json(v));
    counterexample = v.verdict == Verdict::Counterexample;
  } else if (const auto* t = std::get_if<CompatibleTower>(&r.instance)) {
    const long d = deficiency_of_tower(*t);
    r.results["deficiency"] = d;
    counterexample = d < 0;
  } else if (const auto* p = std::get_if<CompatibleFloorPlan>(&r.instance)) {
    const long d = deficiency_of_tower(realize_compatible(*p));
    r.results["deficiency"] = d;
    counterexample = d < 0;
  }
  emit(o, serialize(r));
  return counterexample ? found(o.input) : kOk;
}

int cmd_algebra_dim(const Options& o) {
  auto r = load(o);
  const auto& g = expect<GluingDatum>(r, "gluing");
  const auto t = multiplication_matrices(build_module(g));
  r.results["d"] = t.dim;
  r.results["algebra_dim"] = static_cast<long>(algebra_dimension(t));
  emit(o, serialize(r));
  return kOk;
}

int cmd_scaffold(const Options& o) {
  auto r = load(o);
  if (const auto* t = std::get_if<Tower>(&r.instance)) {
    r.instance = scaffold(*t);
  } else {
    r.instance = scaffold(expect<CompatibleTower>(r, "tower or compatible-tower"));
  }
  emit(o, serialize(r));
  return kOk;
}

int cmd_floorplan(const Options& o) {
  auto r = load(o);
  if (const auto* t = std::get_if<Tower>(&r.instance)) {
    r.instance = floor_plan_of(*t);
  } else {
    r.instance = floor_plan_of(expect<CompatibleTower>(r, "tower or compatible-tower"));
  }
  emit(o, serialize(r));
  return kOk;
}

int cmd_realize(const Options& o) {
  auto r = load(o);
  if (const auto* p = std::get_if<FloorPlan>(&r.instance)) {
    r.results["max_score"] = max_score_table(*p).rows();
    r.instance = realize(*p);
  } else {
    r.instance = realize_compatible(expect<CompatibleFloorPlan>(r, "floor-plan or compatible-floor-plan"));
  }
  emit(o, serialize(r));
  return kOk;
}

int cmd_minimize(const Options& o) {
  auto r = load(o);
  const auto m = minimize(expect<CompatibleFloorPlan>(r, "compatible-floor-plan"));
  r.instance = m.plan;
  r.results["steps"] = trace_json(m.trace);
  emit(o, serialize(r));
  return kOk;
}

int cmd_certify(const Options& o) {
  auto r = load(o);
  const auto& plan = expect<CompatibleFloorPlan>(r, "compatible-floor-plan");
  try {
    const auto trace = certify(plan);
    r.results["deficiency"] = deficiency_of_tower(realize_compatible(plan));
    r.results["certified"] = true;
    r.results["steps"] = trace_json(trace);
    emit(o, serialize(r));
    return kOk;
  } catch (const ObligationFailure& e) {
    InstanceRecord w{e.step().before, r.provenance, {{"certified", false}, {"move", e.step().move}, {"detail", e.what()}}};
    const std::string path = o.output.empty() ? o.input + ".witness.json" : o.output;
    write_record(path, w);
    std::cerr << e.what() << "\n";
    return found(path);
  }
}

int cmd_search(const Options& o) {
  CampaignConfig c;
  c.mode = parse_campaign_mode(o.mode);
  c.bounds = {o.max_r, o.max_box, o.max_h};
  c.max_boxes = o.max_boxes;
  c.count = o.count;
  c.seed = o.seed;
  c.workers = o.workers;
  c.output = o.output.empty() ? "gerst-" + o.mode + ".jsonl" : o.output;
  c.resume = o.resume;
  const auto s = run_campaign(c);
  std::cout << s.to_json().dump(2) << "\n";
  return s.anomalies > 0 ? found(s.witness_path.string()) : kOk;
}

int cmd_render(const Options& o) {
  const auto r = load(o);
  emit(o, render(r.instance, parse_render_format(o.format)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gluing data, towers and floor plans"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&);
  const std::vector<std::tuple<std::string, std::string, Handler>> verbs = {
      {"check", "validate an instance and report its verdict", cmd_check},
      {"algebra-dim", "module dimension and generated algebra dimension of a gluing", cmd_algebra_dim},
      {"scaffold", "replace a tower by its scaffolding", cmd_scaffold},
      {"floorplan", "floor plan of a scaffolded tower", cmd_floorplan},
      {"realize", "minimal tower over a floor plan", cmd_realize},
      {"minimize", "run overlap and shrink moves to a fixed point", cmd_minimize},
      {"certify", "descent certificate for a compatible floor plan", cmd_certify},
      {"search", "run a campaign", cmd_search},
      {"render", "draw a plan, height map or 2D diagram", cmd_render},
  };
  Handler chosen = nullptr;
  for (const auto& [name, help, handler] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", o.input, "input record");
    sub->add_option("--output,-o", o.output, "output file (campaign log for search)");
    sub->add_option("--seed", o.seed, "campaign seed");
    sub->add_option("--mode", o.mode, "verify-theorem, cross-check, hunt-n4 or certify-corpus");
    sub->add_option("--max-r", o.max_r, "largest number of components")->check(CLI::PositiveNumber);
    sub->add_option("--max-box", o.max_box, "coordinate bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-h", o.max_h, "largest column height")->check(CLI::PositiveNumber);
    sub->add_option("--max-boxes", o.max_boxes, "diagram size bound for random gluings")->check(CLI::PositiveNumber);
    sub->add_option("--count", o.count, "number of random instances")->check(CLI::NonNegativeNumber);
    sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--resume", o.resume, "continue an existing campaign log");
    sub->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    sub->callback([&chosen, h = handler] { chosen = h; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return chosen(o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == ErrorCode::AnomalyFound || e.code() == ErrorCode::InconsistencyDetected) return kFound;
    return kUsage;
  }
}
