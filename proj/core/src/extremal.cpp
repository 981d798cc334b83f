#include "ptlab/extremal.hpp"

#include <cmath>

#include "ptlab/counting.hpp"
#include "ptlab/decomposition.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/parallel.hpp"
#include "ptlab/recognizers.hpp"

namespace ptlab {

namespace {

double density(std::uint64_t count, std::size_t n) {
  const double nn = static_cast<double>(n);
  return n == 0 ? 0.0 : static_cast<double>(count) / (nn * nn * nn * nn);
}

bool better(const Graph& a, std::uint64_t ca, const Graph& b, std::uint64_t cb) {
  if (ca != cb) return ca < cb;
  return adjacency_code(a) < adjacency_code(b);
}

struct Candidate {
  std::optional<Graph> graph;
  std::uint64_t count = 0;
};

// One restart of the constrained hill climb. `admissible` is the constraint.
template <typename Admissible>
Candidate climb(std::size_t n, RngStream rng, Admissible&& admissible) {
  Candidate out;
  std::optional<Graph> cur;
  for (int attempt = 0; attempt < 64 && !cur; ++attempt) {
    const double p = 0.2 + 0.6 * rng.uniform();
    Graph g = gnp(n, p, rng);
    if (admissible(g)) cur = std::move(g);
  }
  if (!cur) return out;
  std::uint64_t count = count_induced_p3(*cur);
  out = {cur, count};
  const std::size_t pairs = pair_count(n);
  const std::size_t steps = 4 * pairs;
  for (std::size_t step = 0; step < steps && count > 0; ++step) {
    std::size_t idx = rng.below(pairs);
    Vertex u = 0;
    while (idx >= n - 1 - u) idx -= n - 1 - u++;
    const Vertex v = u + 1 + idx;
    GraphBuilder b(*cur);
    b.toggle(u, v);
    Graph next = b.build();
    const std::uint64_t c = count_induced_p3(next);
    if (c > count || (c == count && !rng.bernoulli(0.5))) continue;
    if (!admissible(next)) continue;
    cur = std::move(next);
    count = c;
    if (better(*cur, count, *out.graph, out.count)) out = {cur, count};
  }
  return out;
}

template <typename Admissible>
Candidate best_of(std::size_t n, std::size_t effort, const RngStream& rng, unsigned threads,
                  std::size_t& successes, Admissible&& admissible) {
  std::vector<Candidate> runs(effort);
  parallel_for(effort, threads, [&](std::size_t r) { runs[r] = climb(n, rng.split(r), admissible); });
  Candidate best;
  successes = 0;
  for (auto& c : runs) {
    if (!c.graph) continue;
    ++successes;
    if (!best.graph || better(*c.graph, c.count, *best.graph, best.count)) best = std::move(c);
  }
  return best;
}

bool cut_free(const Graph& g, double beta) {
  RngStream unused(0);
  return !find_beta_cut(g, beta, SearchMode::Exact, unused).found();
}

}  // namespace

double cut_free_lower_bound(double beta) { return std::pow(beta / 100.0, 12); }
double far_lower_bound(double epsilon) { return std::pow(epsilon / 100.0, 16); }

std::string to_string(ExtremalQuantity q) { return q == ExtremalQuantity::CutFree ? "c" : "f"; }

ExtremalRecord make_p3_record(const Graph& g, double beta) {
  if (g.order() > kExactCutBound) {
    throw LimitExceeded("certified records limited to n <= " + std::to_string(kExactCutBound));
  }
  ExtremalRecord r;
  r.quantity = ExtremalQuantity::CutFree;
  r.n = g.order();
  r.parameter = beta;
  r.graph = g;
  r.p3_count = count_induced_p3(g);
  r.p3_density = density(r.p3_count, r.n);
  r.certified = g.order() >= 2 && cut_free(g, beta);
  r.lower_bound = cut_free_lower_bound(beta);
  return r;
}

ExtremalRecord search_min_p3_density(std::size_t n, double beta, std::size_t effort,
                                     const RngStream& rng, unsigned threads) {
  if (n < 2 || n > kExactCutBound) {
    throw LimitExceeded("certified search needs 2 <= n <= " + std::to_string(kExactCutBound));
  }
  if (effort == 0) throw InvalidArgument("effort must be positive");
  std::size_t ok = 0;
  Candidate best = best_of(n, effort, rng, threads, ok, [beta](const Graph& g) { return cut_free(g, beta); });
  if (!best.graph) {
    throw LimitExceeded("no graph without a " + std::to_string(beta) + "-cut found on " +
                        std::to_string(n) + " vertices");
  }
  ExtremalRecord r = make_p3_record(*best.graph, beta);
  r.restarts = effort;
  r.successful_restarts = ok;
  return r;
}

ExtremalRecord estimate_f(std::size_t n, double epsilon, std::size_t effort, const RngStream& rng,
                          unsigned threads) {
  if (n > kDistanceMaxOrder) {
    throw LimitExceeded("farness certification limited to n <= " + std::to_string(kDistanceMaxOrder));
  }
  if (!(epsilon >= 0)) throw InvalidArgument("epsilon must be non-negative");
  if (effort == 0) throw InvalidArgument("effort must be positive");
  const double raw = epsilon * static_cast<double>(n * n);
  const auto need = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  if (need > kDistanceMaxCap) {
    throw LimitExceeded("eps n^2 = " + std::to_string(raw) + " exceeds the oracle cap " +
                        std::to_string(kDistanceMaxCap));
  }
  const Recognizer cograph = recognizer_for(Property::Cograph);
  auto far = [&](const Graph& g) {
    if (need == 0) return true;
    return !distance_to_property(g, cograph, need - 1).has_value();
  };
  std::size_t ok = 0;
  Candidate best = best_of(n, effort, rng, threads, ok, far);
  if (!best.graph) {
    throw LimitExceeded("no graph at distance >= " + std::to_string(need) +
                        " from cographs found on " + std::to_string(n) + " vertices");
  }
  ExtremalRecord r;
  r.quantity = ExtremalQuantity::Far;
  r.n = n;
  r.parameter = epsilon;
  r.graph = *best.graph;
  r.p3_count = best.count;
  r.p3_density = density(best.count, n);
  const auto d = distance_to_property(r.graph, cograph, kDistanceMaxCap);
  r.distance = d ? *d : kDistanceMaxCap + 1;
  r.certified = !d || *d >= need;
  r.lower_bound = far_lower_bound(epsilon);
  r.restarts = effort;
  r.successful_restarts = ok;
  return r;
}

nlohmann::json to_json(const ExtremalRecord& r) {
  nlohmann::json j = {
      {"quantity", to_string(r.quantity)},
      {"n", r.n},
      {r.quantity == ExtremalQuantity::CutFree ? "beta" : "epsilon", r.parameter},
      {"m", r.graph.edge_count()},
      {"p3_count", r.p3_count},
      {"p3_density", r.p3_density},
      {"certified", r.certified},
      {"lower_bound", r.lower_bound},
      {"bound_holds", r.bound_holds()},
      {"restarts", r.restarts},
      {"successful_restarts", r.successful_restarts},
  };
  if (r.distance) j["distance_at_least"] = *r.distance;
  return j;
}

ExtremalRecord record_from_json(const nlohmann::json& j, const Graph& g) {
  ExtremalRecord r;
  const std::string q = j.at("quantity").get<std::string>();
  if (q != "c" && q != "f") throw ParseError("unknown extremal quantity '" + q + "'", 0);
  r.quantity = q == "c" ? ExtremalQuantity::CutFree : ExtremalQuantity::Far;
  r.n = j.at("n").get<std::size_t>();
  if (r.n != g.order()) throw InvariantViolation("record order does not match its graph");
  r.parameter = j.at(r.quantity == ExtremalQuantity::CutFree ? "beta" : "epsilon").get<double>();
  r.graph = g;
  r.p3_count = count_induced_p3(g);
  r.p3_density = density(r.p3_count, r.n);
  if (j.at("p3_count").get<std::uint64_t>() != r.p3_count) {
    throw InvariantViolation("stored P3 count disagrees with the graph");
  }
  r.certified = j.at("certified").get<bool>();
  r.lower_bound = j.at("lower_bound").get<double>();
  r.restarts = j.value("restarts", std::size_t{0});
  r.successful_restarts = j.value("successful_restarts", std::size_t{0});
  if (j.contains("distance_at_least")) r.distance = j["distance_at_least"].get<std::size_t>();
  return r;
}

}  // namespace ptlab
