#include "ptlab/testers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ptlab/counting.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/parallel.hpp"

namespace ptlab {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Uniform k-subset drawn independently per query (repeats across queries are
// allowed), ascending.
VertexSet draw(std::size_t n, std::size_t k, RngStream& rng) { return sample_vertices(n, k, rng); }

}  // namespace

Verdict universal_tester(const Graph& g, std::size_t d, const SampleRecognizer& recognizer,
                         RngStream& rng) {
  if (d > g.order()) {
    throw InvalidArgument("sample size " + std::to_string(d) + " exceeds n = " +
                          std::to_string(g.order()));
  }
  VertexSet sample = draw(g.order(), d, rng);
  const Graph sub = induced_subgraph(g, sample);
  const RecognitionResult r = recognizer(sub, sample);
  Verdict v;
  v.reject = !r.member;
  if (v.reject) {
    if (r.witness) {
      for (Vertex w : *r.witness) v.witness.push_back(sample[w]);
    } else {
      v.witness = sample;
    }
  }
  return v;
}

Verdict universal_tester(const Graph& g, std::size_t d, const Recognizer& recognizer,
                         RngStream& rng) {
  return universal_tester(
      g, d, SampleRecognizer([&](const Graph& sub, std::span<const Vertex>) { return recognizer(sub); }),
      rng);
}

Verdict triangle_tester(const Graph& g, std::size_t t, RngStream& rng) {
  if (g.order() < 3) throw InvalidArgument("triangle tester needs n >= 3");
  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet s = draw(g.order(), 3, rng);
    if (is_triangle(g, s[0], s[1], s[2])) return {true, s};
  }
  return {};
}

Verdict induced_p3_tester(const Graph& g, std::size_t t, RngStream& rng) {
  if (g.order() < 4) throw InvalidArgument("induced-P3 tester needs n >= 4");
  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet s = draw(g.order(), 4, rng);
    if (induces_p3(g, s)) return {true, s};
  }
  return {};
}

std::string to_string(TesterKind k) {
  switch (k) {
    case TesterKind::Universal: return "universal";
    case TesterKind::TripleDensity: return "triangle";
    case TesterKind::QuadrupleDensity: return "induced-p3";
  }
  return "?";
}

TesterKind parse_tester_kind(const std::string& name) {
  if (name == "universal") return TesterKind::Universal;
  if (name == "triangle") return TesterKind::TripleDensity;
  if (name == "induced-p3" || name == "p3") return TesterKind::QuadrupleDensity;
  throw InvalidArgument("unknown tester '" + name + "' (universal, triangle, induced-p3)");
}

std::size_t queries_per_trial(TesterKind kind, std::size_t budget) {
  switch (kind) {
    case TesterKind::Universal: return budget * (budget - (budget > 0 ? 1 : 0)) / 2;
    case TesterKind::TripleDensity: return 3 * budget;
    case TesterKind::QuadrupleDensity: return 6 * budget;
  }
  return 0;
}

Interval wilson95(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  if (successes > trials) throw InvalidArgument("successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = kZ95 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // The closed form hits the endpoints exactly at 0 and n successes; keep
  // rounding noise out of reports.
  return {successes == 0 ? 0.0 : std::max(0.0, centre - half),
          successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

Verdict run_tester(const Graph& g, const TesterConfig& config, RngStream& rng) {
  switch (config.kind) {
    case TesterKind::TripleDensity: return triangle_tester(g, config.budget, rng);
    case TesterKind::QuadrupleDensity: return induced_p3_tester(g, config.budget, rng);
    case TesterKind::Universal: break;
  }
  if (config.custom) return universal_tester(g, config.budget, config.custom, rng);
  return universal_tester(g, config.budget, recognizer_for(config.property, config.pattern), rng);
}

TesterReport estimate_detection(const Graph& g, const TesterConfig& config, std::size_t trials,
                                unsigned threads) {
  if (trials == 0) throw InvalidArgument("trials must be positive");
  // Build the recognizer once; std::function copies are shared read-only.
  TesterConfig cfg = config;
  if (cfg.kind == TesterKind::Universal && !cfg.custom) {
    Recognizer rec = recognizer_for(cfg.property, cfg.pattern);
    cfg.custom = [rec](const Graph& sub, std::span<const Vertex>) { return rec(sub); };
  }
  const RngStream root(config.seed);
  std::vector<char> rejected(trials, 0);
  parallel_for(trials, threads, [&](std::size_t i) {
    RngStream rng = root.split(i);
    rejected[i] = run_tester(g, cfg, rng).reject ? 1 : 0;
  });
  TesterReport rep;
  rep.config = config;
  rep.trials = trials;
  rep.rejections = static_cast<std::size_t>(std::count(rejected.begin(), rejected.end(), 1));
  rep.rejection_rate = static_cast<double>(rep.rejections) / static_cast<double>(trials);
  rep.wilson = wilson95(rep.rejections, trials);
  rep.queries_per_trial = queries_per_trial(config.kind, config.budget);
  return rep;
}

Fraction parse_fraction(const std::string& text) {
  auto digits = [&](const std::string& s) {
    if (s.empty() || s.size() > 18 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("not a positive rational: '" + text + "'");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  Fraction f;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    f = {digits(text.substr(0, slash)), digits(text.substr(slash + 1))};
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = dot == 0 ? "0" : text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    f = {digits(whole) * den + digits(frac), den};
  } else {
    f = {digits(text), 1};
  }
  if (f.num == 0 || f.den == 0) throw InvalidArgument("not a positive rational: '" + text + "'");
  const std::uint64_t g = std::gcd(f.num, f.den);
  return {f.num / g, f.den / g};
}

SampleCounts theoretical_sample_counts(const Fraction& epsilon) {
  using boost::multiprecision::cpp_int;
  if (epsilon.num == 0 || epsilon.den == 0 || epsilon.num > epsilon.den) {
    throw InvalidArgument("epsilon must lie in (0, 1]");
  }
  // 2 (100 den / num)^16, rounded up.
  cpp_int num = 2 * boost::multiprecision::pow(cpp_int(100) * epsilon.den, 16);
  cpp_int den = boost::multiprecision::pow(cpp_int(epsilon.num), 16);
  SampleCounts out;
  out.p3_t = (num + den - 1) / den;
  out.exceeds_desk_budget = out.p3_t > cpp_int(1'000'000'000'000ULL);
  out.triangle_note =
      "the triangle tester's triple count is not a closed form: it inverts the removal-lemma "
      "delta(eps), which is only known to be a tower-type function of 1/eps";
  return out;
}

double analytic_floor(double triangle_density) {
  if (!(triangle_density > 0)) throw InvalidArgument("triangle density must be positive");
  return std::pow(3.0 * triangle_density, -1.0 / 3.0);
}

BudgetSearch min_budget_for_detection(const Graph& g, const TesterConfig& base, double target,
                                      std::size_t trials, std::size_t cap,
                                      std::optional<double> triangle_density, unsigned threads) {
  if (!(target > 0 && target <= 1)) throw InvalidArgument("target must lie in (0, 1]");
  if (base.kind == TesterKind::Universal) cap = std::min(cap, g.order());
  if (cap == 0) throw InvalidArgument("budget cap must be positive");
  BudgetSearch out;
  if (triangle_density) out.analytic_floor = analytic_floor(*triangle_density);

  auto passes = [&](std::size_t b) {
    TesterConfig cfg = base;
    cfg.budget = b;
    TesterReport r = estimate_detection(g, cfg, trials, threads);
    const bool ok = r.wilson.lo >= target;
    out.curve.push_back(std::move(r));
    return ok;
  };

  std::size_t lo = 0;  // largest known failing budget
  std::size_t hi = 1;
  while (!passes(hi)) {
    lo = hi;
    if (hi == cap) {
      out.cap_exceeded = true;
      break;
    }
    hi = std::min(cap, hi * 2);
  }
  if (!out.cap_exceeded) {
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (passes(mid)) hi = mid;
      else lo = mid;
    }
    out.budget = hi;
  }
  std::sort(out.curve.begin(), out.curve.end(),
            [](const TesterReport& a, const TesterReport& b) { return a.config.budget < b.config.budget; });
  return out;
}

}  // namespace ptlab
