#include "gerst/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <thread>

#include "gerst/descent.hpp"

namespace gerst {

std::string_view to_string(CampaignMode mode) {
  switch (mode) {
    case CampaignMode::VerifyTheorem: return "verify-theorem";
    case CampaignMode::CrossCheck: return "cross-check";
    case CampaignMode::HuntN4: return "hunt-n4";
    case CampaignMode::CertifyCorpus: return "certify-corpus";
  }
  return "?";
}

CampaignMode parse_campaign_mode(const std::string& name) {
  for (const auto m : {CampaignMode::VerifyTheorem, CampaignMode::CrossCheck, CampaignMode::HuntN4,
                       CampaignMode::CertifyCorpus}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::ParseError, "unknown mode '" + name + "'");
}

void check_config(const CampaignConfig& c) {
  if (c.bounds.max_r < 1 || c.bounds.box < 1 || c.bounds.max_h < 1 || c.max_boxes < 1) {
    throw Error(ErrorCode::PreconditionFailed, "bounds must be positive");
  }
  if (c.workers < 1) throw Error(ErrorCode::PreconditionFailed, "worker count must be positive");
  if (c.count < 0) throw Error(ErrorCode::PreconditionFailed, "count must be nonnegative");
  if (c.resume && c.output.empty()) throw Error(ErrorCode::PreconditionFailed, "resume needs a log path");
}

Json CampaignSummary::to_json() const {
  Json j = {{"mode", to_string(mode)}, {"seed", seed},         {"total", total},
            {"processed", processed},  {"skipped", skipped},   {"records", records},
            {"anomalies", anomalies}};
  j["min_deficiency"] = min_deficiency ? Json(*min_deficiency) : Json(nullptr);
  j["wall_seconds"] = wall_seconds;
  if (!witness_path.empty()) j["witness"] = witness_path.string();
  return j;
}

std::filesystem::path witness_path_for(const std::filesystem::path& log) {
  return log.string() + ".witness.json";
}

std::vector<YoungDiagram> down_sets_in_box(int n, int box) {
  std::vector<Point> pts;
  Point p = zero_point(n);
  while (true) {
    pts.push_back(p);
    int k = n - 1;
    while (k >= 0 && p[static_cast<std::size_t>(k)] == box) p[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++p[static_cast<std::size_t>(k)];
  }
  std::vector<YoungDiagram> out;
  std::vector<Point> chosen;
  BoxSet current(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == pts.size()) {
      out.emplace_back(BoxSet(n, chosen));
      return;
    }
    self(self, i + 1);
    const Point& q = pts[i];
    for (int a = 0; a < n; ++a) {
      if (q[static_cast<std::size_t>(a)] == 0) continue;
      if (std::find(chosen.begin(), chosen.end(), q - unit_vector(n, a)) == chosen.end()) return;
    }
    chosen.push_back(q);
    self(self, i + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  return out;
}

namespace {

struct Outcome {
  std::optional<InstanceRecord> record;
  bool anomaly = false;
  std::optional<long> deficiency;
};

Rng index_rng(std::uint64_t seed, long index) {
  const auto i = static_cast<std::uint64_t>(index);
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  return Rng(s);
}

Json bounds_json(const PlanBounds& b) { return {{"max_r", b.max_r}, {"box", b.box}, {"max_h", b.max_h}}; }

Json provenance(const CampaignConfig& c, long index) {
  return {{"campaign", to_string(c.mode)}, {"seed", c.seed}, {"index", index}};
}

Json trace_json(const DescentTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"move", s.move}, {"note", s.note}, {"after", payload_to_json(s.after)}});
  }
  return steps;
}

Outcome plan_outcome(const CompatibleFloorPlan& plan, Json prov, bool archive_trace) {
  Outcome o;
  Json results = Json::object();
  try {
    const long d = deficiency_of_tower(realize_compatible(plan));
    const long pd = plan_deficiency(plan);
    o.deficiency = d;
    results["deficiency"] = d;
    const DescentTrace trace = certify(plan);
    results["steps"] = static_cast<long>(trace.steps.size());
    if (archive_trace) results["trace"] = trace_json(trace);
    o.anomaly = d < 0 || d != pd || !trace.final().empty();
    if (d != pd) results["detail"] = "plan deficiency " + std::to_string(pd);
  } catch (const ObligationFailure& e) {
    o.anomaly = true;
    results["detail"] = e.what();
    results["failed_step"] = {{"move", e.step().move}, {"before", payload_to_json(e.step().before)}};
  } catch (const Error& e) {
    o.anomaly = true;
    results["detail"] = e.what();
  }
  results["anomaly"] = o.anomaly;
  o.record = InstanceRecord{plan, std::move(prov), std::move(results)};
  return o;
}

Json verdict_json(const GerstenhaberVerdict& v) {
  return {{"d", v.d},
          {"algebra_dim", v.algebra_dim},
          {"deficiency", v.deficiency},
          {"equality", v.equality_holds},
          {"verdict", v.verdict == Verdict::Counterexample ? "COUNTEREXAMPLE" : "SATISFIED"}};
}

class Runner {
 public:
  explicit Runner(const CampaignConfig& c) : c_(c) {
    switch (c.mode) {
      case CampaignMode::VerifyTheorem:
        plans_ = enumerate_compatible_plans(c.bounds);
        total_ = static_cast<long>(plans_.size()) + c.count;
        break;
      case CampaignMode::HuntN4:
        diagrams_ = down_sets_in_box(4, c.bounds.box);
        total_ = static_cast<long>(diagrams_.size() * diagrams_.size());
        break;
      default:
        total_ = c.count;
    }
  }

  long total() const { return total_; }

  Outcome run(long i) const {
    switch (c_.mode) {
      case CampaignMode::VerifyTheorem: return verify(i);
      case CampaignMode::CrossCheck: return cross_check(i);
      case CampaignMode::HuntN4: return hunt(i);
      case CampaignMode::CertifyCorpus: {
        Rng rng = index_rng(c_.seed, i);
        Json prov = provenance(c_, i);
        prov["bounds"] = bounds_json(c_.bounds);
        return plan_outcome(random_compatible_plan(rng, c_.bounds), std::move(prov), true);
      }
    }
    return {};
  }

 private:
  Outcome verify(long i) const {
    Json prov = provenance(c_, i);
    prov["bounds"] = bounds_json(c_.bounds);
    if (i < static_cast<long>(plans_.size())) {
      prov["source"] = "enumeration";
      return plan_outcome(plans_[static_cast<std::size_t>(i)], std::move(prov), false);
    }
    prov["source"] = "random";
    Rng rng = index_rng(c_.seed, i);
    return plan_outcome(random_compatible_plan(rng, c_.bounds), std::move(prov), false);
  }

  Outcome cross_check(long i) const {
    const int n = 1 + static_cast<int>(i % 3);
    Rng rng = index_rng(c_.seed, i);
    const std::uint64_t gseed = rng();
    Json prov = provenance(c_, i);
    prov["n"] = n;
    prov["max_boxes"] = c_.max_boxes;
    prov["gluing_seed"] = gseed;
    Outcome o;
    GluingDatum g;
    try {
      g = random_gluing(n, c_.max_boxes, gseed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenerationFailed) throw;
      return o;
    }
    Json results;
    try {
      const auto v = gerstenhaber_check(g);
      results = verdict_json(v);
      o.deficiency = v.deficiency;
      o.anomaly = !v.equality_holds;
    } catch (const Error& e) {
      o.anomaly = true;
      results = {{"detail", e.what()}};
    }
    results["anomaly"] = o.anomaly;
    o.record = InstanceRecord{std::move(g), std::move(prov), std::move(results)};
    return o;
  }

  // Point components sit at maximal boxes; the i-th lex-smallest maximum of
  // lambda is glued to the i-th of mu.
  Outcome hunt(long i) const {
    const auto n = static_cast<long>(diagrams_.size());
    const long a = i / n, b = i % n;
    Outcome o;
    if (a > b) return o;  // swapping lambda and mu gives the same deficiency
    GluingDatum g;
    g.n = 4;
    g.lambda = diagrams_[static_cast<std::size_t>(a)];
    g.mu = diagrams_[static_cast<std::size_t>(b)];
    auto ml = g.lambda.maximal_boxes();
    auto mm = g.mu.maximal_boxes();
    std::sort(ml.begin(), ml.end());
    std::sort(mm.begin(), mm.end());
    const AbstractSkewShape point(BoxSet(4, {zero_point(4)}));
    for (std::size_t k = 0; k < std::min(ml.size(), mm.size()); ++k) g.components.push_back({point, ml[k], mm[k]});
    if (g.components.empty() || !validate_gluing(g).valid()) return o;
    const long d = deficiency(g);
    o.deficiency = d;
    if (d >= 0) return o;
    Json prov = provenance(c_, i);
    prov["box"] = c_.bounds.box;
    Json results;
    try {
      results = verdict_json(gerstenhaber_check(g));
    } catch (const Error& e) {
      results = {{"detail", e.what()}};
    }
    o.anomaly = true;
    results["anomaly"] = true;
    o.record = InstanceRecord{std::move(g), std::move(prov), std::move(results)};
    return o;
  }

  const CampaignConfig& c_;
  long total_ = 0;
  std::vector<CompatibleFloorPlan> plans_;
  std::vector<YoungDiagram> diagrams_;
};

void fold(CampaignSummary& s, const std::optional<long>& d) {
  if (d) s.min_deficiency = s.min_deficiency ? std::min(*s.min_deficiency, *d) : *d;
}

// Complete lines only; a torn tail from an interrupted run is cut off.
std::vector<InstanceRecord> load_and_trim(const std::filesystem::path& log) {
  std::ifstream in(log, std::ios::binary);
  if (!in) return {};
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const auto end = text.rfind('\n');
  const std::size_t keep = end == std::string::npos ? 0 : end + 1;
  if (keep != text.size()) std::filesystem::resize_file(log, keep);
  return read_log(log);
}

}  // namespace

std::vector<InstanceRecord> read_log(const std::filesystem::path& log) {
  std::ifstream in(log);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + log.string());
  std::vector<InstanceRecord> out;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t start = 0;
  long line = 1;
  while (true) {
    const auto nl = text.find('\n', start);
    if (nl == std::string::npos) break;
    const std::string_view row(text.data() + start, nl - start);
    if (!row.empty()) {
      try {
        out.push_back(deserialize(row));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, log.string() + " line " + std::to_string(line) + ": " + e.what());
      }
    }
    start = nl + 1;
    ++line;
  }
  return out;
}

std::string replay_problem(const InstanceRecord& r) {
  if (auto p = validation_problem(r.instance); !p.empty()) return p;
  const std::string mode = r.provenance.value("campaign", "");
  try {
    if (const auto* plan = std::get_if<CompatibleFloorPlan>(&r.instance)) {
      if (!r.results.contains("deficiency")) return "";
      if (deficiency_of_tower(realize_compatible(*plan)) != r.results["deficiency"].get<long>()) {
        return "deficiency differs";
      }
      if (r.results.contains("steps") &&
          static_cast<long>(certify(*plan).steps.size()) != r.results["steps"].get<long>()) {
        return "descent length differs";
      }
      return "";
    }
    if (const auto* g = std::get_if<GluingDatum>(&r.instance)) {
      if (!r.results.contains("d")) return "";
      Json again = verdict_json(gerstenhaber_check(*g));
      again["anomaly"] = r.results["anomaly"];
      return again == r.results ? "" : "verdict differs: " + again.dump();
    }
  } catch (const Error& e) {
    return e.what();
  }
  return mode.empty() ? "" : "unexpected kind " + kind_of(r.instance);
}

CampaignSummary run_campaign(const CampaignConfig& c) {
  check_config(c);
  const auto t0 = std::chrono::steady_clock::now();
  const Runner runner(c);
  CampaignSummary s;
  s.mode = c.mode;
  s.seed = c.seed;
  s.total = runner.total();

  long cursor = 0;
  if (c.resume) {
    for (auto& r : load_and_trim(c.output)) {
      if (r.provenance.value("campaign", "") != to_string(c.mode) || r.provenance.value("seed", std::uint64_t{0}) != c.seed) {
        throw Error(ErrorCode::PreconditionFailed, "log belongs to a different campaign");
      }
      cursor = std::max(cursor, r.provenance["index"].get<long>() + 1);
      if (r.results.contains("deficiency")) fold(s, r.results["deficiency"].get<long>());
      if (r.results.value("anomaly", false)) {
        ++s.anomalies;
        if (s.witnesses.empty()) s.witnesses.push_back(std::move(r));
      }
    }
    // Unlogged indices before the cursor still count toward the minimum.
    for (long i = 0; i < cursor; ++i) {
      if (c.mode == CampaignMode::HuntN4) fold(s, runner.run(i).deficiency);
    }
  }
  s.skipped = cursor;

  std::ofstream log;
  if (!c.output.empty()) {
    log.open(c.output, c.resume ? std::ios::app : std::ios::trunc);
    if (!log) throw Error(ErrorCode::ParseError, "cannot write " + c.output.string());
  }

  const long chunk = 64L * c.workers;
  std::vector<Outcome> outcomes;
  for (long lo = cursor; lo < s.total; lo += chunk) {
    const long hi = std::min(s.total, lo + chunk);
    outcomes.assign(static_cast<std::size_t>(hi - lo), {});
    auto work = [&](int w) {
      for (long i = lo + w; i < hi; i += c.workers) outcomes[static_cast<std::size_t>(i - lo)] = runner.run(i);
    };
    if (c.workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < c.workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& o : outcomes) {
      ++s.processed;
      fold(s, o.deficiency);
      if (!o.record) continue;
      if (log.is_open()) {
        log << serialize(*o.record, true) << '\n';
        ++s.records;
      }
      if (o.anomaly) {
        ++s.anomalies;
        if (s.witnesses.empty()) s.witnesses.push_back(*o.record);
      }
    }
    if (log.is_open()) log.flush();
  }

  if (!s.witnesses.empty() && !c.output.empty()) {
    s.witness_path = witness_path_for(c.output);
    write_record(s.witness_path, s.witnesses.front());
  }
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace gerst
