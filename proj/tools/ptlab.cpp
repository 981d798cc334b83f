// ptlab: command line front end.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage error, 3 I/O error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptlab/counting.hpp"
#include "ptlab/decomposition.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/extremal.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/graph_io.hpp"
#include "ptlab/harness.hpp"
#include "ptlab/recognizers.hpp"
#include "ptlab/testers.hpp"
#include "ptlab/verify.hpp"

using nlohmann::json;
using namespace ptlab;

namespace {

constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
  std::vector<std::string> argv;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::uint64_t env_seed() {
  const char* s = std::getenv("PTLAB_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("PTLAB_SEED is not an unsigned integer: '") + s + "'");
  }
}

void write_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw IoError("cannot write " + g.out);
  f << text;
  if (!f) throw IoError("write failed: " + g.out);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << j.dump(2) << '\n';
  if (!f) throw IoError("write failed: " + path);
}

json timings(const Globals& g) {
  const auto dt = std::chrono::steady_clock::now() - g.start;
  return {{"total_s", std::chrono::duration<double>(dt).count()}};
}

void emit_report(const Globals& g, const json& spec, const json& graphs, const json& results) {
  write_text(g, make_report(g.argv, spec, graphs, results, timings(g)).dump(2) + "\n");
}

json summary(const std::string& name, const Graph& gr) {
  return json::array({{{"name", name}, {"n", gr.order()}, {"m", gr.edge_count()}}});
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad list element '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("empty list '" + text + "'");
  return out;
}

std::optional<Graph> load_pattern(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_graph(path);
}

json result_json(const RecognitionResult& r) {
  json j = {{"member", r.member}, {"detail", r.detail}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

PartLabeling load_labeling(const std::string& path, std::size_t n) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  json j;
  try {
    f >> j;
    std::vector<Part> parts;
    for (const auto& p : j.at("parts")) {
      parts.push_back({p.at("name").get<std::string>(), p.at("vertices").get<VertexSet>()});
    }
    return PartLabeling(n, std::move(parts), true);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

PartLabeling labeling_for(const Graph& f, const std::string& labels_path) {
  if (!labels_path.empty()) return load_labeling(labels_path, f.order());
  auto l = find_tripartition(f);
  if (!l) throw InvalidArgument("input graph is not tripartite");
  return *l;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  for (int i = 0; i < argc; ++i) g.argv.emplace_back(argv[i]);

  CLI::App app{"ptlab: property-testing laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "master seed (default: $PTLAB_SEED or 0)");
  app.add_option("--threads", g.threads, "worker threads; never changes results")->check(CLI::Range(1U, 256U));
  app.add_option("--out", g.out, "output file (or directory for pipelines)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // gen ---------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph and its certificate sidecar");
  std::string gen_kind;
  std::size_t gen_n = 0, gen_k = 0;
  double gen_p = 0.5;
  std::string gen_ap = "exact", gen_from, gen_labels, gen_set;
  gen->add_option("kind", gen_kind, "gnp | cograph | rs | c5-gadget | poset-gadget")
      ->required()
      ->check(CLI::IsMember({"gnp", "cograph", "rs", "c5-gadget", "poset-gadget"}));
  gen->add_option("--n", gen_n, "order (gnp, cograph)");
  gen->add_option("--p", gen_p, "edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--k", gen_k, "rs parameter");
  gen->add_option("--ap", gen_ap, "3-AP-free set: exact | behrend")->check(CLI::IsMember({"exact", "behrend"}));
  gen->add_option("--S", gen_set, "explicit 3-AP-free set for rs, e.g. 1,2,4 (overrides --ap)");
  gen->add_option("--from", gen_from, "tripartite input graph (gadgets)");
  gen->add_option("--labels", gen_labels, "JSON part labeling of --from (default: found by search)");

  // recognize ------------------------------------------------------------------
  auto* rec = app.add_subcommand("recognize", "exact membership test with witness");
  std::string rec_prop, rec_graph, rec_h, rec_mode = "forcing";
  rec->add_option("--property", rec_prop, "triangle-free | induced-h-free | cograph | comparability | perfect | poset")
      ->required();
  rec->add_option("--pattern", rec_h, "forbidden induced subgraph (induced-h-free)");
  rec->add_option("--mode", rec_mode, "comparability mode: forcing | exhaustive")
      ->check(CLI::IsMember({"forcing", "exhaustive"}));
  rec->add_option("graph", rec_graph)->required();

  // test / curve ---------------------------------------------------------------
  struct TestArgs {
    std::string tester = "universal", property = "triangle-free", h, graph;
    std::size_t trials = 1000;
  };
  TestArgs ta;
  std::size_t test_budget = 0;
  auto* test = app.add_subcommand("test", "estimate a tester's rejection rate");
  auto* curve = app.add_subcommand("curve", "rejection rate versus budget, or least detecting budget");
  for (auto* sc : {test, curve}) {
    sc->add_option("--tester", ta.tester, "universal | triangle | induced-p3")
        ->check(CLI::IsMember({"universal", "triangle", "induced-p3"}));
    sc->add_option("--property", ta.property, "property for the universal tester");
    sc->add_option("--pattern", ta.h, "pattern for induced-h-free");
    sc->add_option("--trials", ta.trials)->check(CLI::PositiveNumber);
    sc->add_option("graph", ta.graph)->required();
  }
  test->add_option("--budget", test_budget, "d (universal) or t (density testers)")->required();
  std::string curve_budgets;
  double curve_target = 2.0 / 3.0;
  std::size_t curve_cap = 0;
  bool curve_min = false;
  std::optional<double> curve_delta;
  curve->add_option("--budgets", curve_budgets, "comma-separated budgets");
  curve->add_flag("--min-budget", curve_min, "search for the least budget reaching --target");
  curve->add_option("--target", curve_target)->check(CLI::Range(0.0, 1.0));
  curve->add_option("--cap", curve_cap, "budget cap for --min-budget");
  curve->add_option("--delta", curve_delta, "triangle density for the analytic floor");

  // decompose / distance ----------------------------------------------------------
  auto* dec = app.add_subcommand("decompose", "refine along beta-cuts");
  double dec_beta = 0.0;
  std::string dec_mode = "exact", dec_graph;
  dec->add_option("--beta", dec_beta)->check(CLI::Range(0.0, 0.5));
  dec->add_option("--mode", dec_mode)->check(CLI::IsMember({"exact", "heuristic"}));
  dec->add_option("graph", dec_graph)->required();

  auto* dist = app.add_subcommand("distance", "exact edit distance to a property (small graphs)");
  std::string dist_prop, dist_h, dist_graph;
  std::size_t dist_cap = kDistanceMaxCap;
  dist->add_option("--property", dist_prop)->required();
  dist->add_option("--pattern", dist_h);
  dist->add_option("--cap", dist_cap);
  dist->add_option("graph", dist_graph)->required();

  // search-extremal ---------------------------------------------------------------
  auto* ext = app.add_subcommand("search-extremal", "search for low induced-P3 density records");
  std::string ext_q = "c";
  std::size_t ext_n = 6, ext_effort = 100;
  double ext_param = 0.2;
  ext->add_option("--quantity", ext_q, "c (no beta-cut) or f (eps-far from cographs)")
      ->check(CLI::IsMember({"c", "f"}));
  ext->add_option("--n", ext_n);
  ext->add_option("--beta,--epsilon", ext_param, "beta for c, epsilon for f");
  ext->add_option("--effort", ext_effort, "restarts")->check(CLI::PositiveNumber);

  // verify-suite ----------------------------------------------------------------------
  auto* ver = app.add_subcommand("verify-suite", "run module invariants");
  std::string ver_name = "all";
  std::size_t ver_seeds = 200;
  ver->add_option("name", ver_name)->check(
      CLI::IsMember({"all", "recognizers", "packing", "gadgets", "testers", "decomposition"}));
  ver->add_option("--seeds", ver_seeds)->check(CLI::PositiveNumber);

  // pipelines -------------------------------------------------------------------------
  struct PipeArgs {
    std::string spec_path, ks, ds, flips, ts;
    std::optional<std::size_t> trials, n;
  };
  PipeArgs pa;
  auto* hard = app.add_subcommand("pipeline-hardness", "rs graph -> C5 gadget detection curves");
  auto* easy = app.add_subcommand("pipeline-easy", "perturbed cographs under the induced-P3 tester");
  for (auto* sc : {hard, easy}) {
    sc->add_option("--spec", pa.spec_path, "ExperimentSpec JSON (flags override its params)");
    sc->add_option("--trials", pa.trials);
  }
  hard->add_option("--ks", pa.ks, "comma-separated rs parameters");
  hard->add_option("--ds", pa.ds, "comma-separated sample sizes");
  easy->add_option("--n", pa.n);
  easy->add_option("--flips", pa.flips);
  easy->add_option("--ts", pa.ts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    g.seed = seed_flag ? *seed_flag : env_seed();
    const json base_spec = {{"seed", g.seed}};

    if (*gen) {
      RngStream rng(g.seed);
      std::optional<GadgetBundle> bundle;
      std::optional<Graph> plain;
      json params;
      if (gen_kind == "gnp" || gen_kind == "cograph") {
        if (gen_n == 0) throw InvalidArgument("--n is required and must be positive");
        plain = gen_kind == "gnp" ? gnp(gen_n, gen_p, rng) : random_cograph(gen_n, rng);
        params = {{"n", gen_n}};
        if (gen_kind == "gnp") params["p"] = gen_p;
      } else if (gen_kind == "rs") {
        if (gen_k == 0) throw InvalidArgument("--k is required and must be positive");
        bundle = rs_graph(gen_k, gen_set.empty()
                                     ? ap3_free_set(gen_k, gen_ap == "exact" ? ApMode::Exact : ApMode::Behrend)
                                     : ApFreeSet(gen_k, parse_list(gen_set)));
      } else {
        if (gen_from.empty()) throw InvalidArgument("--from is required for " + gen_kind);
        const Graph f = load_graph(gen_from);
        const PartLabeling l = labeling_for(f, gen_labels);
        if (gen_kind == "c5-gadget") {
          bundle = build_c5_gadget(f, l);
        } else {
          std::vector<Part> parts;
          const char* names[] = {"V1", "V2", "V3"};
          for (std::size_t i = 0; i < l.part_count(); ++i) parts.push_back({names[i], l.part(i).vertices});
          bundle = build_poset_gadget(f, PartLabeling(f.order(), parts, true));
        }
      }
      std::ostringstream text;
      if (plain) write_graph(text, *plain);
      else if (bundle->graph.index() == 0) write_graph(text, bundle->undirected());
      else write_digraph(text, bundle->directed());
      write_text(g, text.str());
      json sidecar;
      if (bundle) {
        sidecar = certificate_json(*bundle, g.seed);
      } else {
        sidecar = {{"construction", gen_kind},
                   {"params", params},
                   {"seed", g.seed},
                   {"packing", nullptr},
                   {"farness", 0.0}};
      }
      if (!g.out.empty()) write_json_file(g.out + ".cert.json", sidecar);
      else std::cerr << sidecar.dump() << '\n';
      return 0;
    }

    if (*rec) {
      const Property p = parse_property(rec_prop);
      RecognitionResult r;
      json graphs;
      if (p == Property::Poset) {
        const Digraph d = load_digraph(rec_graph);
        r = is_poset(d);
        graphs = json::array({{{"name", rec_graph}, {"n", d.order()}, {"m", d.arc_count()}}});
      } else {
        const Graph gr = load_graph(rec_graph);
        if (p == Property::Comparability && rec_mode == "exhaustive") {
          r = is_comparability(gr, ComparabilityMode::Exhaustive);
        } else {
          r = recognizer_for(p, load_pattern(rec_h))(gr);
        }
        graphs = summary(rec_graph, gr);
      }
      json spec = base_spec;
      spec["property"] = rec_prop;
      emit_report(g, spec, graphs, {{"recognition", result_json(r)}});
      return 0;
    }

    if (*test || *curve) {
      const Graph gr = load_graph(ta.graph);
      TesterConfig cfg;
      cfg.kind = parse_tester_kind(ta.tester);
      cfg.property = parse_property(ta.property);
      cfg.pattern = load_pattern(ta.h);
      cfg.seed = g.seed;
      json spec = base_spec;
      spec["tester"] = ta.tester;
      spec["trials"] = ta.trials;
      if (cfg.kind == TesterKind::Universal) spec["property"] = ta.property;
      if (*test) {
        cfg.budget = test_budget;
        spec["budget"] = test_budget;
        const TesterReport r = estimate_detection(gr, cfg, ta.trials, g.threads);
        emit_report(g, spec, summary(ta.graph, gr), {{"tester_reports", json::array({to_json(r)})}});
        return 0;
      }
      std::vector<TesterReport> reports;
      json extra = json::object();
      if (curve_min) {
        const std::size_t cap = curve_cap ? curve_cap : (cfg.kind == TesterKind::Universal ? gr.order() : 1u << 20);
        const BudgetSearch bs =
            min_budget_for_detection(gr, cfg, curve_target, ta.trials, cap, curve_delta, g.threads);
        reports = bs.curve;
        extra = {{"target", curve_target},
                 {"least_budget", bs.budget ? json(*bs.budget) : json(nullptr)},
                 {"cap_exceeded", bs.cap_exceeded},
                 {"analytic_floor", bs.analytic_floor ? json(*bs.analytic_floor) : json(nullptr)}};
      } else {
        if (curve_budgets.empty()) throw InvalidArgument("curve needs --budgets or --min-budget");
        for (std::size_t b : parse_list(curve_budgets)) {
          cfg.budget = b;
          reports.push_back(estimate_detection(gr, cfg, ta.trials, g.threads));
        }
      }
      if (g.format == "csv") {
        CsvTable t;
        t.header = {"budget", "queries_per_trial", "rejection_rate", "wilson_lo", "wilson_hi"};
        for (const auto& r : reports) {
          t.rows.push_back({std::to_string(r.config.budget), std::to_string(r.queries_per_trial),
                            format_number(r.rejection_rate), format_number(r.wilson.lo),
                            format_number(r.wilson.hi)});
        }
        write_text(g, t.str());
      } else {
        json jr = json::array();
        for (const auto& r : reports) jr.push_back(to_json(r));
        extra["tester_reports"] = jr;
        emit_report(g, spec, summary(ta.graph, gr), extra);
      }
      return 0;
    }

    if (*dec) {
      const Graph gr = load_graph(dec_graph);
      RngStream rng(g.seed);
      const Refinement r = refine_along_cuts(gr, dec_beta,
                                             dec_mode == "exact" ? SearchMode::Exact : SearchMode::Heuristic, rng);
      json spec = base_spec;
      spec["beta"] = dec_beta;
      spec["mode"] = dec_mode;
      emit_report(g, spec, summary(dec_graph, gr),
                  {{"refinement",
                    {{"parts", r.parts},
                     {"edited_pairs", r.edited_pairs},
                     {"cuts_used", r.cuts_used},
                     {"cut_pairs", r.cut_pairs},
                     {"certified", r.certified}}}});
      return 0;
    }

    if (*dist) {
      const Graph gr = load_graph(dist_graph);
      const Property p = parse_property(dist_prop);
      if (p == Property::Poset) throw InvalidArgument("distance is defined for undirected properties");
      const auto d = distance_to_property(gr, recognizer_for(p, load_pattern(dist_h)), dist_cap);
      json spec = base_spec;
      spec["property"] = dist_prop;
      spec["cap"] = dist_cap;
      emit_report(g, spec, summary(dist_graph, gr),
                  {{"distance", d ? json(*d) : json(nullptr)}, {"above_cap", !d.has_value()}});
      return 0;
    }

    if (*ext) {
      const RngStream rng(g.seed);
      const ExtremalRecord r = ext_q == "c" ? search_min_p3_density(ext_n, ext_param, ext_effort, rng, g.threads)
                                            : estimate_f(ext_n, ext_param, ext_effort, rng, g.threads);
      json spec = base_spec;
      spec["quantity"] = ext_q;
      spec["n"] = ext_n;
      spec[ext_q == "c" ? "beta" : "epsilon"] = ext_param;
      spec["effort"] = ext_effort;
      const json record = to_json(r);
      if (!g.out.empty()) {
        save_graph(g.out + ".el", r.graph);
        write_json_file(g.out + ".json", record);
        Globals quiet = g;
        quiet.out.clear();
        emit_report(quiet, spec, summary("record", r.graph), {{"extremal_records", json::array({record})}});
      } else {
        emit_report(g, spec, summary("record", r.graph), {{"extremal_records", json::array({record})}});
      }
      return r.bound_holds() && r.certified ? 0 : kExitInvariant;
    }

    if (*ver) {
      VerifyOptions opt;
      opt.seeds = ver_seeds;
      opt.seed = g.seed ? g.seed : 1;
      opt.threads = g.threads;
      const auto results = run_verify_suite(ver_name, opt);
      json suites = json::array();
      bool ok = true;
      for (const auto& r : results) {
        suites.push_back(to_json(r));
        ok = ok && r.passed();
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
        for (const auto& f : r.failures) std::cerr << "  " << f << '\n';
      }
      json spec = base_spec;
      spec["suite"] = ver_name;
      spec["seeds"] = ver_seeds;
      emit_report(g, spec, json::array(), {{"suites", suites}});
      return ok ? 0 : kExitInvariant;
    }

    if (*hard || *easy) {
      ExperimentSpec spec;
      if (!pa.spec_path.empty()) {
        std::ifstream f(pa.spec_path);
        if (!f) throw IoError("cannot read " + pa.spec_path);
        json j;
        try {
          f >> j;
        } catch (const json::exception& e) {
          throw ParseError(pa.spec_path + ": " + e.what(), 0);
        }
        spec = ExperimentSpec::from_json(j);
      }
      spec.pipeline = *hard ? "hardness" : "easy";
      if (seed_flag || pa.spec_path.empty()) spec.seed = g.seed;
      if (!g.out.empty()) spec.out = g.out;
      if (pa.trials) spec.params["trials"] = *pa.trials;
      if (!pa.ks.empty()) spec.params["ks"] = parse_list(pa.ks);
      if (!pa.ds.empty()) spec.params["ds"] = parse_list(pa.ds);
      if (pa.n) spec.params["n"] = *pa.n;
      if (!pa.flips.empty()) spec.params["flips"] = parse_list(pa.flips);
      if (!pa.ts.empty()) spec.params["ts"] = parse_list(pa.ts);
      spec = with_defaults(spec);

      const PipelineResult res = run_pipeline(spec, g.threads);
      const json report = make_report(g.argv, spec.to_json(), res.graphs, res.results, timings(g));
      if (!spec.out.empty()) {
        std::filesystem::create_directories(spec.out);
        write_json_file(spec.out + "/report.json", report);
        std::ofstream csv(spec.out + "/curve.csv");
        if (!csv) throw IoError("cannot write " + spec.out + "/curve.csv");
        csv << res.table.str();
      } else if (g.format == "csv") {
        std::cout << res.table.str();
      } else {
        std::cout << report.dump(2) << '\n';
      }
      for (const auto& v : res.violations) std::cerr << "violation: " << v << '\n';
      return res.violations.empty() ? 0 : kExitInvariant;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
