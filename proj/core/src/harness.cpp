#include "ptlab/harness.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/parallel.hpp"
#include "ptlab/recognizers.hpp"

namespace ptlab {

using nlohmann::json;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "?";
  return std::string(buf, end);
}

std::string CsvTable::str() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

json to_json(const TesterReport& r) {
  json cfg = {{"kind", to_string(r.config.kind)},
              {"budget", r.config.budget},
              {"seed", r.config.seed}};
  if (r.config.kind == TesterKind::Universal) {
    cfg["property"] = r.config.custom ? r.config.custom_name : std::string(to_string(r.config.property));
  }
  return {{"config", cfg},
          {"trials", r.trials},
          {"rejections", r.rejections},
          {"rejection_rate", r.rejection_rate},
          {"wilson95", {r.wilson.lo, r.wilson.hi}},
          {"queries_per_trial", r.queries_per_trial}};
}

json to_json(const WitnessPacking& p) {
  return {{"kind", to_string(p.kind)},
          {"tuples", p.tuples},
          {"host_n", p.host_n},
          {"verified", p.verified}};
}

WitnessPacking packing_from_json(const json& j) {
  try {
    WitnessPacking p;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "triangle") p.kind = PackingKind::Triangle;
    else if (kind == "inducedC5") p.kind = PackingKind::InducedC5;
    else throw ParseError("unknown packing kind '" + kind + "'", 0);
    p.tuples = j.at("tuples").get<std::vector<std::vector<Vertex>>>();
    p.host_n = j.at("host_n").get<std::size_t>();
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("packing: ") + e.what(), 0);
  }
}

json certificate_json(const GadgetBundle& b, std::uint64_t seed) {
  return {{"construction", b.provenance.value("construction", "")},
          {"params", b.provenance.value("params", json::object())},
          {"seed", seed},
          {"packing", to_json(b.certificate)},
          {"farness", b.farness}};
}

// ---------------------------------------------------------------------------

json ExperimentSpec::to_json() const {
  return {{"name", name}, {"pipeline", pipeline}, {"params", params}, {"seed", seed}, {"out", out}};
}

ExperimentSpec ExperimentSpec::from_json(const json& j) {
  try {
    ExperimentSpec s;
    s.name = j.value("name", s.name);
    s.pipeline = j.at("pipeline").get<std::string>();
    s.params = j.value("params", json::object());
    if (!s.params.is_object()) throw ParseError("spec params must be an object", 0);
    s.seed = j.value("seed", std::uint64_t{0});
    s.out = j.value("out", std::string());
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("experiment spec: ") + e.what(), 0);
  }
}

ExperimentSpec with_defaults(ExperimentSpec spec) {
  json defaults;
  if (spec.pipeline == "hardness") {
    defaults = {{"ks", {4, 6}},
                {"ds", {0, 5, 10, 15, 20, 30}},
                {"trials", 200},
                {"retries", 16},
                {"control_attempts", 200000}};
  } else if (spec.pipeline == "easy") {
    defaults = {{"n", 40}, {"flips", {0, 5, 20, 80}}, {"ts", {1, 4, 16, 64}}, {"trials", 1000}};
  } else {
    throw InvalidArgument("unknown pipeline '" + spec.pipeline + "' (hardness, easy)");
  }
  for (auto& [key, value] : defaults.items()) {
    if (!spec.params.contains(key)) spec.params[key] = value;
  }
  return spec;
}

MatchedControl matched_gnp(std::size_t n, PackingKind kind, std::size_t target, RngStream rng,
                           std::size_t c5_attempts) {
  auto attempt = [&](double p, std::uint64_t i) {
    RngStream r = rng.split(i);
    Graph g = gnp(n, p, r);
    WitnessPacking pk = kind == PackingKind::Triangle ? triangle_packing(g, PackingMode::Greedy)
                                                      : sampled_c5_packing(g, c5_attempts, r);
    return MatchedControl{std::move(g), p, std::move(pk)};
  };
  // C5 counts peak at p = 1/2; triangle counts grow up to p = 1.
  double lo = 0.0;
  double hi = kind == PackingKind::Triangle ? 1.0 : 0.5;
  MatchedControl best = attempt(hi, 0);
  if (best.packing.size() < target) {
    throw LimitExceeded("no gnp control on " + std::to_string(n) + " vertices reaches a packing of " +
                        std::to_string(target));
  }
  for (std::uint64_t i = 1; i <= 20; ++i) {
    const double mid = (lo + hi) / 2;
    MatchedControl c = attempt(mid, i);
    if (c.packing.size() >= target) {
      hi = mid;
      best = std::move(c);
    } else {
      lo = mid;
    }
  }
  std::string why;
  if (!verify_packing(best.graph, best.packing, &why)) {
    throw InvariantViolation("control packing failed verification: " + why);
  }
  return best;
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(seed ^ mix64(a ^ mix64(b ^ mix64(c))));
}

std::vector<std::size_t> sizes(const json& params, const char* key) {
  try {
    return params.at(key).get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("parameter '") + key + "': " + e.what());
  }
}

std::size_t size_param(const json& params, const char* key) {
  try {
    return params.at(key).get<std::size_t>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("parameter '") + key + "': " + e.what());
  }
}

std::vector<std::string> row(std::initializer_list<std::string> cells) { return cells; }

json summary(const std::string& name, const Graph& g) {
  return {{"name", name}, {"n", g.order()}, {"m", g.edge_count()}};
}

struct MechanismTally {
  std::size_t samples = 0;
  std::size_t triangle_free = 0;
  std::size_t triangle_free_members = 0;
  std::vector<std::string> violations;
};

// Replays the comparability samples and checks that every sample whose
// F-portion is triangle-free is ordered transitively and is a comparability
// graph.
MechanismTally audit_mechanism(const Graph& gadget, const PartLabeling& labeling, const Graph& f,
                               std::size_t d, std::uint64_t seed, std::size_t trials,
                               unsigned threads) {
  const std::size_t offset = 4 * f.order();
  std::vector<signed char> outcome(trials, -1);  // -1 F-portion has a triangle
  std::vector<std::string> witness(trials);
  const RngStream root(seed);
  parallel_for(trials, threads, [&](std::size_t i) {
    RngStream rng = root.split(i);
    const VertexSet s = sample_vertices(gadget.order(), d, rng);
    VertexSet fpart;
    for (Vertex v : s) {
      if (v >= offset) fpart.push_back(v - offset);
    }
    if (!is_triangle_free(induced_subgraph(f, fpart)).member) return;
    const Graph sub = induced_subgraph(gadget, s);
    const bool ordered = check_order_transitivity(sub, labeling.restrict_to(s)).member;
    const bool comparable = is_comparability(sub).member;
    outcome[i] = ordered && comparable ? 1 : 0;
    if (!outcome[i]) {
      std::ostringstream w;
      w << "d=" << d << " trial " << i << ": triangle-free F-portion but "
        << (ordered ? "not comparability" : "not ordered transitively") << "; sample";
      for (Vertex v : s) w << ' ' << v;
      witness[i] = w.str();
    }
  });
  MechanismTally t;
  t.samples = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    if (outcome[i] < 0) continue;
    ++t.triangle_free;
    if (outcome[i] == 1) ++t.triangle_free_members;
    else t.violations.push_back(witness[i]);
  }
  return t;
}

std::optional<std::size_t> least_detecting(const std::vector<TesterReport>& reports) {
  for (const auto& r : reports) {
    if (r.wilson.lo >= 2.0 / 3.0) return r.config.budget;
  }
  return std::nullopt;
}

}  // namespace

PipelineResult run_hardness(const ExperimentSpec& raw, unsigned threads) {
  const ExperimentSpec spec = with_defaults(raw);
  const auto ks = sizes(spec.params, "ks");
  const auto ds = sizes(spec.params, "ds");
  const std::size_t trials = size_param(spec.params, "trials");
  const std::size_t retries = size_param(spec.params, "retries");
  const std::size_t attempts = size_param(spec.params, "control_attempts");

  PipelineResult out;
  out.table.header = {"instance", "property", "k", "farness", "d", "rejection_rate", "wilson_lo",
                      "wilson_hi"};
  json instances = json::array();
  const Graph c5 = Graph::cycle(5);

  for (std::size_t k : ks) {
    const ApFreeSet s = ap3_free_set(k, k <= kExactApBound ? ApMode::Exact : ApMode::Behrend);
    const GadgetBundle rs = rs_graph(k, s);
    const RngStream base = RngStream(spec.seed).split(k);
    RngStream extract_rng = base.split(0);
    TripartiteExtract ex = random_tripartite_extract(rs.undirected(), rs.certificate, extract_rng, retries);
    const GadgetBundle gadget = build_c5_gadget(ex.f, ex.labeling, ex.retained);
    const Graph& g = gadget.undirected();
    const std::size_t n = g.order();
    const std::size_t target = std::max<std::size_t>(gadget.certificate.size(), 1);
    MatchedControl control = matched_gnp(n, PackingKind::InducedC5, target, base.split(1), attempts);
    const double control_farness = farness_lower_bound(control.packing, n);

    out.graphs.push_back(summary("rs k=" + std::to_string(k), rs.undirected()));
    out.graphs.push_back(summary("c5-gadget k=" + std::to_string(k), g));
    out.graphs.push_back(summary("gnp-control k=" + std::to_string(k), control.graph));

    const PartLabeling& labeling = gadget.labeling;
    SampleRecognizer ordered = [&labeling](const Graph& sub, std::span<const Vertex> sample) {
      return check_order_transitivity(sub, labeling.restrict_to(sample));
    };

    json reports = json::array();
    std::vector<TesterReport> gadget_c5, gadget_cmp, control_c5, control_cmp;
    json mechanism = json::array();
    for (std::size_t d : ds) {
      if (d > n) continue;
      TesterConfig c5_cfg;
      c5_cfg.kind = TesterKind::Universal;
      c5_cfg.budget = d;
      c5_cfg.property = Property::InducedHFree;
      c5_cfg.pattern = c5;
      c5_cfg.seed = derive_seed(spec.seed, k, d, 0);
      TesterConfig cmp_cfg = c5_cfg;
      cmp_cfg.pattern.reset();
      cmp_cfg.property = Property::Comparability;
      cmp_cfg.seed = derive_seed(spec.seed, k, d, 1);
      TesterConfig ordered_cfg = cmp_cfg;
      ordered_cfg.custom = ordered;
      ordered_cfg.custom_name = "comparability(order-transitivity)";

      gadget_c5.push_back(estimate_detection(g, c5_cfg, trials, threads));
      gadget_cmp.push_back(estimate_detection(g, ordered_cfg, trials, threads));
      control_c5.push_back(estimate_detection(control.graph, c5_cfg, trials, threads));
      control_cmp.push_back(estimate_detection(control.graph, cmp_cfg, trials, threads));

      const MechanismTally tally = audit_mechanism(g, labeling, ex.f, d, ordered_cfg.seed, trials, threads);
      mechanism.push_back({{"d", d},
                           {"samples", tally.samples},
                           {"triangle_free_f_portion", tally.triangle_free},
                           {"of_which_comparability", tally.triangle_free_members}});
      out.violations.insert(out.violations.end(), tally.violations.begin(), tally.violations.end());
    }

    auto emit = [&](const std::string& instance, const std::string& property, double farness,
                    const std::vector<TesterReport>& rs_) {
      for (const auto& r : rs_) {
        out.table.rows.push_back(row({instance, property, std::to_string(k), format_number(farness),
                                      std::to_string(r.config.budget), format_number(r.rejection_rate),
                                      format_number(r.wilson.lo), format_number(r.wilson.hi)}));
        json jr = to_json(r);
        jr["instance"] = instance;
        reports.push_back(std::move(jr));
      }
    };
    emit("gadget", "induced-c5-free", gadget.farness, gadget_c5);
    emit("gadget", "comparability", gadget.farness, gadget_cmp);
    emit("control", "induced-c5-free", control_farness, control_c5);
    emit("control", "comparability", control_farness, control_cmp);

    auto least = [](const std::vector<TesterReport>& r) -> json {
      auto d = least_detecting(r);
      return d ? json(*d) : json(nullptr);
    };
    instances.push_back({
        {"k", k},
        {"S", s.elements()},
        {"rs_triangles", rs.certificate.size()},
        {"retained_triangles", ex.retained.size()},
        {"gadget_n", n},
        {"gadget_farness", gadget.farness},
        {"gadget_certificate", certificate_json(gadget, spec.seed)},
        {"control_p", control.p},
        {"control_packing", control.packing.size()},
        {"control_farness", control_farness},
        {"least_detecting_d",
         {{"gadget_induced_c5_free", least(gadget_c5)},
          {"gadget_comparability", least(gadget_cmp)},
          {"control_induced_c5_free", least(control_c5)},
          {"control_comparability", least(control_cmp)}}},
        {"mechanism", mechanism},
        {"tester_reports", reports},
    });
  }
  out.results = {{"pipeline", "hardness"}, {"instances", instances}, {"violations", out.violations}};
  return out;
}

PipelineResult run_easy(const ExperimentSpec& raw, unsigned threads) {
  const ExperimentSpec spec = with_defaults(raw);
  const std::size_t n = size_param(spec.params, "n");
  const auto flips = sizes(spec.params, "flips");
  const auto ts = sizes(spec.params, "ts");
  const std::size_t trials = size_param(spec.params, "trials");
  if (n < 4) throw InvalidArgument("easy pipeline needs n >= 4");

  PipelineResult out;
  out.table.header = {"instance", "flips", "p3_density", "t", "predicted", "rejection_rate",
                      "wilson_lo", "wilson_hi"};
  json instances = json::array();
  const double quads = static_cast<double>(n) * (n - 1) * (n - 2) * (n - 3) / 24.0;
  for (std::size_t k : flips) {
    RngStream rng = RngStream(spec.seed).split(k);
    const Graph base = random_cograph(n, rng);
    const Graph g = flip_pairs(base, std::min(k, pair_count(n)), rng);
    const std::uint64_t p3 = count_induced_p3(g);
    const double p = static_cast<double>(p3) / quads;
    const std::string name = "cograph+" + std::to_string(k);
    out.graphs.push_back(summary(name, g));
    json reports = json::array();
    for (std::size_t t : ts) {
      TesterConfig cfg;
      cfg.kind = TesterKind::QuadrupleDensity;
      cfg.budget = t;
      cfg.seed = derive_seed(spec.seed, k, t, 2);
      const TesterReport r = estimate_detection(g, cfg, trials, threads);
      const double predicted = 1.0 - std::pow(1.0 - p, static_cast<double>(t));
      out.table.rows.push_back(row({name, std::to_string(k), format_number(p3 / (double(n) * n * n * n)),
                                    std::to_string(t), format_number(predicted),
                                    format_number(r.rejection_rate), format_number(r.wilson.lo),
                                    format_number(r.wilson.hi)}));
      if (p3 == 0 && r.rejections > 0) {
        out.violations.push_back(name + ": rejection on an induced-P3-free graph");
      }
      json jr = to_json(r);
      jr["predicted"] = predicted;
      reports.push_back(std::move(jr));
    }
    instances.push_back({{"name", name},
                         {"flips", k},
                         {"p3_count", p3},
                         {"quadruple_witness_probability", p},
                         {"tester_reports", reports}});
  }
  out.results = {{"pipeline", "easy"}, {"instances", instances}, {"violations", out.violations}};
  return out;
}

PipelineResult run_pipeline(const ExperimentSpec& spec, unsigned threads) {
  if (spec.pipeline == "hardness") return run_hardness(spec, threads);
  if (spec.pipeline == "easy") return run_easy(spec, threads);
  throw InvalidArgument("unknown pipeline '" + spec.pipeline + "' (hardness, easy)");
}

json make_report(const std::vector<std::string>& command_line, const json& spec, const json& graphs,
                 const json& results, const json& timings) {
  return {{"schema_version", kReportSchemaVersion},
          {"command_line", command_line},
          {"spec", spec},
          {"graphs", graphs},
          {"results", results},
          {"timings", timings}};
}

}  // namespace ptlab
