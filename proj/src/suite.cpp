#include "knotchar/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "knotchar/error.hpp"
#include "knotchar/reps.hpp"

namespace knotchar {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kInvarianceTol = 1e-8;
constexpr double kRoundTripTol = 1e-8;
constexpr double kNodalTangentTol = 1e-6;
constexpr std::size_t kMaxWordLength = 8;

class Accumulator {
 public:
  Accumulator(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void add(double defect) {
    ++samples_;
    if (std::isnan(defect)) defect = kInfinity;
    worst_ = std::max(worst_, defect);
  }

  CheckResult finish() const {
    return {name_, worst_ <= tolerance_, samples_, worst_, tolerance_};
  }

 private:
  std::string name_;
  double tolerance_;
  std::int64_t samples_ = 0;
  double worst_ = 0.0;
};

// Builds a pair on components[index % size] with random parameters.
RepPair sample_pair(const KnotType& kt, const std::vector<ComponentId>& components,
                    std::int64_t index, std::mt19937_64& rng) {
  const ComponentId& c = components[static_cast<std::size_t>(index) % components.size()];
  if (c.is_red()) return build_reducible(kt, random_t(rng, kt));
  return build_irreducible(kt, {c, random_r(rng)});
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(seed ^ index);
}

Complex random_t(std::mt19937_64& rng, const KnotType& kt) {
  const double bound =
      std::min(std::log(1.25), 2.0 / static_cast<double>(kt.m() * kt.n()));
  std::uniform_real_distribution<double> log_radius(-bound, bound);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double rho = std::exp(log_radius(rng));
  return std::polar(rho, angle(rng));
}

Complex random_r(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  while (true) {
    const double re = coord(rng);
    const double im = coord(rng);
    const Complex r(re, im);
    if (std::abs(r) > 0.05 && std::abs(r - 1.0) > 0.05) return r;
  }
}

Word random_word(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<int> letter(0, 3);
  Word w(length(rng));
  for (Letter& l : w) l = static_cast<Letter>(letter(rng));
  return w;
}

SuiteReport run_suite(const KnotType& kt, std::int64_t samples, std::uint64_t seed,
                      const Tolerances& tol) {
  if (samples < 1) throw Error(ErrorCode::InvalidInput, "samples must be >= 1");
  const VarietyDescription variety = enumerate_variety(kt);
  const std::vector<ComponentId>& components = variety.components;
  std::vector<ComponentId> irreducible(components.begin() + 1, components.end());

  SuiteReport report{kt, seed, {}, variety.counts};

  {
    Accumulator acc("constructor_soundness", tol.relation);
    for (std::int64_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
      acc.add(relation_defect(sample_pair(kt, components, i, rng)));
    }
    report.checks.push_back(acc.finish());
  }

  {
    // Relative to max(1, |trace|): long words have large traces.
    Accumulator acc("conjugation_invariance", kInvarianceTol);
    for (std::int64_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
      const RepPair p = sample_pair(kt, components, i, rng);
      const RepPair q = conjugate_pair(p, random_unimodular(rng));
      const Word w = random_word(rng, kMaxWordLength);
      const Complex before = character_eval(p, w);
      const Complex after = character_eval(q, w);
      acc.add(std::abs(after - before) / std::max(1.0, std::abs(before)));
    }
    report.checks.push_back(acc.finish());
  }

  {
    Accumulator acc("double_ratio_round_trip", kRoundTripTol);
    for (std::int64_t i = 0; i < samples && !irreducible.empty(); ++i) {
      auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
      const ComponentId& c = irreducible[static_cast<std::size_t>(i) % irreducible.size()];
      const Complex r = random_r(rng);
      const RepPair p = conjugate_pair(build_irreducible(kt, {c, r}), random_unimodular(rng));
      try {
        const IrredParam back = double_ratio(p, tol);
        acc.add(back.component == c ? std::abs(back.r - r) : kInfinity);
      } catch (const Error&) {
        acc.add(kInfinity);
      }
    }
    report.checks.push_back(acc.finish());
  }

  {
    Accumulator acc("endpoint_consistency", tol.membership);
    for (const IntersectionRecord& rec : variety.intersections) {
      const Complex r = rec.endpoint == Endpoint::R1 ? 1.0 : 0.0;
      const CharPoint on_line = psi_irr(kt, {rec.component, r});
      double defect = distance(on_line, psi_red(kt, root_parameter(kt, rec.index.raw)));
      // The split pair at the closure point must land on the same s.
      try {
        const Complex s = semisimplify(build_irreducible(kt, {rec.component, r}), tol);
        defect = std::max(defect, std::abs(s - rec.s));
      } catch (const Error&) {
        defect = kInfinity;
      }
      acc.add(defect);
    }
    report.checks.push_back(acc.finish());
  }

  {
    Accumulator acc("classification_round_trip", kRoundTripTol);
    for (std::int64_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
      const ComponentId& c = components[static_cast<std::size_t>(i) % components.size()];
      CharPoint q;
      Complex expected;
      if (c.is_red()) {
        const Complex t = random_t(rng, kt);
        q = psi_red(kt, t);
        expected = t + 1.0 / t;
      } else {
        expected = random_r(rng);
        q = psi_irr(kt, {c, expected});
      }
      const auto matches = classify_point(kt, q, tol);
      const auto hits = std::count_if(matches.begin(), matches.end(),
                                      [&](const PointMatch& m) { return m.component == c; });
      const auto it = std::find_if(matches.begin(), matches.end(),
                                   [&](const PointMatch& m) { return m.component == c; });
      acc.add(hits == 1 ? std::abs(it->parameter - expected) : kInfinity);
    }
    report.checks.push_back(acc.finish());
  }

  {
    // Defect counts non-transverse records.
    Accumulator acc("nodal_transversality", 0.0);
    for (const IntersectionRecord& rec : variety.intersections) {
      acc.add(nodal_check(kt, rec, kNodalTangentTol) ? 0.0 : 1.0);
    }
    report.checks.push_back(acc.finish());
  }

  {
    // Defect counts formula mismatches and repeated intersection abscissas.
    Accumulator acc("component_counts", 0.0);
    const std::int64_t expected_lines = irreducible_count(kt);
    double defect = static_cast<double>(std::llabs(variety.counts.irr_lines - expected_lines) +
                                        std::llabs(variety.counts.intersection_points -
                                                   (kt.m() - 1) * (kt.n() - 1)));
    std::vector<std::int64_t> folded;
    for (const auto& rec : variety.intersections) folded.push_back(rec.index.folded);
    std::sort(folded.begin(), folded.end());
    defect += static_cast<double>(folded.end() - std::unique(folded.begin(), folded.end()));
    acc.add(defect);
    report.checks.push_back(acc.finish());
  }

  return report;
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "verify (%lld,%lld) seed=%llu irr_lines=%lld intersections=%lld\n",
                static_cast<long long>(report.kt.m()), static_cast<long long>(report.kt.n()),
                static_cast<unsigned long long>(report.seed),
                static_cast<long long>(report.counts.irr_lines),
                static_cast<long long>(report.counts.intersection_points));
  out += line;
  for (const CheckResult& c : report.checks) {
    std::snprintf(line, sizeof line, "%-4s %-26s samples=%-6lld worst=%.3e tol=%.1e\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), static_cast<long long>(c.samples),
                  c.worst_defect, c.tolerance);
    out += line;
  }
  out += report.all_passed() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

}  // namespace knotchar
