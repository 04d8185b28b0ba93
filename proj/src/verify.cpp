#include "floorlat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "floorlat/asymptotics.hpp"
#include "floorlat/divisor_lattice.hpp"
#include "floorlat/floor_sequences.hpp"
#include "floorlat/rational.hpp"
#include "floorlat/tolerances.hpp"

namespace floorlat {

namespace {

const std::vector<Rational>& alpha_grid() {
  static const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                             Rational(1, 3)};
  return grid;
}

const std::vector<Rational>& nu_grid() {
  static const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  return grid;
}

std::string describe(std::int64_t n, const Rational& alpha, const Rational& nu) {
  return "n=" + std::to_string(n) + " alpha=" + alpha.to_string() + " nu=" + nu.to_string();
}

template <typename... Parts>
std::string concat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

CheckOutcome range_check(std::string name, std::int64_t lo, std::int64_t hi,
                         const std::function<std::optional<std::string>(std::int64_t)>& probe) {
  CheckOutcome outcome{std::move(name), true, std::max<std::int64_t>(0, hi - lo + 1), {}};
  if (auto failure = sweep(lo, hi, probe)) {
    outcome.passed = false;
    outcome.counterexample = failure->detail;
  }
  return outcome;
}

// Values of round(10^(j/10)) up to cap, deduplicated.
std::vector<std::int64_t> log_grid(std::int64_t cap) {
  std::vector<std::int64_t> grid;
  for (int j = 0;; ++j) {
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, j / 10.0)));
    if (n > cap) break;
    if (grid.empty() || grid.back() != n) grid.push_back(n);
  }
  return grid;
}

CheckOutcome list_check(std::string name, const std::vector<std::int64_t>& values,
                        const std::function<std::optional<std::string>(std::int64_t)>& probe) {
  CheckOutcome outcome{std::move(name), true, static_cast<std::int64_t>(values.size()), {}};
  for (std::int64_t v : values) {
    if (auto detail = probe(v)) {
      outcome.passed = false;
      outcome.counterexample = *detail;
      break;
    }
  }
  return outcome;
}

// ---- floor sequences -------------------------------------------------------

CheckOutcome partition_identity(std::int64_t cap) {
  return range_check("partition_identity", 1, std::min<std::int64_t>(cap, 500),
                     [](std::int64_t n) -> std::optional<std::string> {
                       for (const auto& alpha : alpha_grid()) {
                         for (const auto& nu : nu_grid()) {
                           SequenceSpec spec(n, alpha, nu);
                           for (std::int64_t m = 1; m <= 6; ++m) {
                             std::int64_t total = 0;
                             for (std::int64_t r = 1; r <= m; ++r) total += count_direct(spec, {r, m});
                             if (total != n) return concat(describe(n, alpha, nu), " m=", m, " sum=", total);
                           }
                         }
                       }
                       return std::nullopt;
                     });
}

CheckOutcome unit_modulus_identity(std::int64_t cap) {
  return range_check("m1_identity", 1, cap, [](std::int64_t n) -> std::optional<std::string> {
    for (const auto& alpha : alpha_grid()) {
      for (const auto& nu : nu_grid()) {
        const auto got = count_direct(SequenceSpec(n, alpha, nu), {1, 1});
        if (got != n) return concat(describe(n, alpha, nu), " count=", got);
      }
    }
    return std::nullopt;
  });
}

CheckOutcome floor_sums_vs_direct(std::int64_t cap) {
  return range_check("floor_sums_vs_direct", 1, std::min<std::int64_t>(cap, 300),
                     [](std::int64_t n) -> std::optional<std::string> {
                       for (const auto& alpha : alpha_grid()) {
                         for (const auto& nu : nu_grid()) {
                           SequenceSpec spec(n, alpha, nu);
                           if (!spec.admits_floor_sums()) continue;
                           for (std::int64_t m = 2; m <= 5; ++m) {
                             const auto direct = count_all_classes(spec, m);
                             for (std::int64_t r = 1; r <= m; ++r) {
                               const auto formula = count_via_floor_sums(spec, {r, m});
                               if (formula != direct[static_cast<std::size_t>(r - 1)]) {
                                 return concat(describe(n, alpha, nu), " r=", r, " m=", m, " formula=", formula,
                                               " direct=", direct[static_cast<std::size_t>(r - 1)]);
                               }
                             }
                           }
                         }
                       }
                       return std::nullopt;
                     });
}

CheckOutcome rational_alpha_vs_direct(std::int64_t cap) {
  return range_check(
      "rational_alpha_vs_direct", 1, std::min<std::int64_t>(cap, 300), [](std::int64_t n) -> std::optional<std::string> {
        for (const auto& alpha : alpha_grid()) {
          const auto p = alpha.numerator().get_si(), q = alpha.denominator().get_si();
          for (const auto& nu : nu_grid()) {
            SequenceSpec spec(n, alpha, nu);
            if (!spec.admits_floor_sums()) continue;
            for (std::int64_t m = 2; m <= 5; ++m) {
              const auto direct = count_direct(spec, {1, m});
              // Unreduced p/q must give the same answer.
              for (std::int64_t scale : {1, 3}) {
                const auto formula = count_rational_alpha(n, p * scale, q * scale, nu, m);
                if (formula != direct) {
                  return concat(describe(n, alpha, nu), " m=", m, " scale=", scale, " formula=", formula,
                                " direct=", direct);
                }
              }
            }
          }
        }
        return std::nullopt;
      });
}

CheckOutcome threshold_lemma(std::int64_t cap) {
  return range_check("threshold_count_lemma", 1, std::min<std::int64_t>(cap, 200),
                     [](std::int64_t n) -> std::optional<std::string> {
                       for (const auto& alpha : alpha_grid()) {
                         for (const auto& nu : nu_grid()) {
                           SequenceSpec spec(n, alpha, nu);
                           if (!spec.admits_floor_sums()) continue;
                           const auto terms = sequence_terms(spec);
                           for (std::int64_t k = 1; k <= n + 1; ++k) {
                             const auto direct = std::count_if(terms.begin(), terms.end(),
                                                               [&](const Integer& t) { return t >= k; });
                             const auto formula = threshold_count(spec, k);
                             if (formula != direct) {
                               return concat(describe(n, alpha, nu), " k=", k, " formula=", formula,
                                             " direct=", direct);
                             }
                           }
                         }
                       }
                       return std::nullopt;
                     });
}

std::int64_t odd_ceilings(std::int64_t n) {
  std::int64_t odd = 0;
  for (std::int64_t k = 1; k <= n; ++k) odd += ((n + k - 1) / k) % 2;
  return odd;
}

CheckOutcome sequence_formulas(std::int64_t cap) {
  return range_check("fcr_formulas_vs_direct", 1, cap, [](std::int64_t n) -> std::optional<std::string> {
    if (auto d = count_direct(SequenceSpec(n), {1, 2}); d != f_seq(n)) {
      return concat("n=", n, " f_seq=", f_seq(n), " direct=", d);
    }
    if (auto d = count_direct(SequenceSpec(n, Rational(1, 2)), {1, 2}); d != r_seq(n)) {
      return concat("n=", n, " r_seq=", r_seq(n), " direct=", d);
    }
    if (auto d = odd_ceilings(n); d != c_seq(n)) return concat("n=", n, " c_seq=", c_seq(n), " direct=", d);
    return std::nullopt;
  });
}

CheckOutcome floor_ceiling_window(std::int64_t cap) {
  return range_check("fc_duality_window", 2, cap, [](std::int64_t n) -> std::optional<std::string> {
    const auto f = f_seq(n), c = c_seq(n);
    if (odd_ceilings(n) != n - f_seq(n - 1)) return concat("n=", n, " duality");
    // |f + c - n| <= 2 sqrt(n), compared in integers.
    const auto gap = f + c - n;
    if (gap * gap > 4 * n) return concat("n=", n, " f+c-n=", gap);
    return std::nullopt;
  });
}

CheckOutcome divisor_bound(std::int64_t cap) {
  return range_check("divisor_bound", 1, cap, [](std::int64_t n) -> std::optional<std::string> {
    const auto tau = divisor_count(n);
    if (tau * tau > 4 * n) return concat("n=", n, " tau=", tau);
    return std::nullopt;
  });
}

CheckOutcome rounding_variant(std::int64_t cap) {
  return range_check("rounding_variant_bound", 1, cap, [](std::int64_t n) -> std::optional<std::string> {
    const auto gap = r_seq_round_down(n) - r_seq(n);
    if (gap * gap > 8 * n) return concat("n=", n, " gap=", gap);
    return std::nullopt;
  });
}

CheckOutcome r_step(std::int64_t cap) {
  return range_check("r_step_bound", 1, cap - 1, [](std::int64_t n) -> std::optional<std::string> {
    const auto step = r_seq(n + 1) - r_seq(n);
    if (step < -1) return concat("n=", n, " step=", step);
    const bool both_unrepresentable = r2(2 * n + 1) == 0 && r2(2 * n + 2) == 0;
    if ((step == -1) != both_unrepresentable) {
      return concat("n=", n, " step=", step, " r2(2n+1)=", r2(2 * n + 1), " r2(2n+2)=", r2(2 * n + 2));
    }
    return std::nullopt;
  });
}

CheckOutcome power_of_two_drops(std::int64_t) {
  std::vector<std::int64_t> exponents;
  for (std::int64_t k = 2; k <= 14; ++k) exponents.push_back(k);
  return list_check("power_of_two_drops", exponents, [](std::int64_t k) -> std::optional<std::string> {
    const std::int64_t n = std::int64_t{1} << k;
    const auto df = f_seq(n) - f_seq(n - 1), dc = c_seq(n) - c_seq(n - 1);
    // C drops by 1 - (F_{n-1} - F_{n-2}), which is not -(k-1) in general (k = 3 gives -1).
    const auto dc_expected = 1 - (f_seq(n - 1) - f_seq(n - 2));
    if (df != -(k - 1) || dc != dc_expected) return concat("k=", k, " dF=", df, " dC=", dc);
    return std::nullopt;
  });
}

CheckOutcome hyperbola_regions(std::int64_t cap) {
  return range_check("hyperbola_regions", 1, std::min<std::int64_t>(cap, 200),
                     [](std::int64_t n) -> std::optional<std::string> {
                       // H1: n/2 < xy <= n, H2: xy <= n/2, both with x, y >= 1.
                       std::int64_t upper = 0, lower = 0;
                       for (std::int64_t x = 1; x <= n; ++x) {
                         for (std::int64_t y = 1; x * y <= n; ++y) {
                           if (2 * x * y <= n) {
                             ++lower;
                           } else {
                             ++upper;
                           }
                         }
                       }
                       if (upper - lower != f_seq(n)) return concat("n=", n, " H1=", upper, " H2=", lower);
                       return std::nullopt;
                     });
}

CheckOutcome really_divides_summation(std::int64_t cap) {
  static const std::vector<Rational> divisors = {Rational(1),    Rational(6, 5), Rational(3, 2),
                                                 Rational(5, 3), Rational(2),    Rational(7, 3),
                                                 Rational(5, 2), Rational(3),    Rational(13, 4)};
  CheckOutcome outcome{"really_divides_summation", true, 0, {}};
  for (const auto& a : divisors) {
    // prefix[d] = #{1 <= e <= d : a real-ly divides e}
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(cap) + 1, 0);
    for (std::int64_t d = 1; d <= cap; ++d) {
      prefix[static_cast<std::size_t>(d)] =
          prefix[static_cast<std::size_t>(d - 1)] + (really_divides(a, Integer(static_cast<long>(d))) ? 1 : 0);
    }
    for (std::int64_t n = 1; n <= cap; ++n) {
      for (const auto& nu : nu_grid()) {
        ++outcome.instances;
        // Multiples ceil(ja) <= n - nu are those with ja <= floor(n - nu). That
        // matches floor((n - nu)/a) only when nu = 0 or a is an integer.
        const auto top = floor_rational(Rational(static_cast<long>(n)) - nu);
        const auto counted = prefix[static_cast<std::size_t>(top.get_si())];
        const bool ok = floor_quotient(Rational(top), a) == counted &&
                        (!(nu == Rational(0) || a.is_integer()) ||
                         floor_quotient(Rational(static_cast<long>(n)) - nu, a) == counted);
        if (!ok) {
          outcome.passed = false;
          outcome.counterexample = concat("a=", a.to_string(), " n=", n, " nu=", nu.to_string());
          return outcome;
        }
      }
    }
  }
  return outcome;
}

// ---- lattice ---------------------------------------------------------------

CheckOutcome formula_vs_oracle(LatticeFamily family, std::int64_t cap) {
  return range_check(concat(to_string(family), "_formula_vs_oracle"), 0, cap,
                     [family](std::int64_t n) -> std::optional<std::string> {
                       const auto formula = count_lattice(family, n, CountMethod::formula).count;
                       const auto oracle = count_lattice(family, n, CountMethod::oracle).count;
                       if (formula != oracle) return concat("n=", n, " formula=", formula, " oracle=", oracle);
                       return std::nullopt;
                     });
}

CheckOutcome representation_check(std::string name, QuadraticForm form, std::int64_t (*formula)(std::int64_t),
                                  std::int64_t lo, std::int64_t cap) {
  return range_check(std::move(name), lo, cap, [form, formula](std::int64_t n) -> std::optional<std::string> {
    const auto exact = enumerate_form_representations(form, n);
    const auto closed = formula(n);
    if (exact != closed) return concat("n=", n, " formula=", closed, " exhaustive=", exact);
    return std::nullopt;
  });
}

CheckOutcome circle_rseq_identity(std::int64_t cap) {
  return range_check("circle_rseq_identity", 1, cap / 2, [](std::int64_t n) -> std::optional<std::string> {
    const auto lhs = circle_count(2 * n), rhs = 4 * r_seq(n) + 4 * n + 1;
    if (lhs != rhs) return concat("n=", n, " C(2n)=", lhs, " 4R+4n+1=", rhs);
    return std::nullopt;
  });
}

CheckOutcome lattice_monotone(std::int64_t cap) {
  return range_check("lattice_monotone", 1, cap, [](std::int64_t n) -> std::optional<std::string> {
    for (auto family : {LatticeFamily::circle, LatticeFamily::eisenstein, LatticeFamily::z_sqrt_minus2}) {
      const auto now = count_lattice(family, n, CountMethod::formula).count;
      const auto before = count_lattice(family, n - 1, CountMethod::formula).count;
      if (now < before) return concat(to_string(family), " n=", n);
    }
    return std::nullopt;
  });
}

CheckOutcome summatory_hyperbola(std::int64_t cap) {
  return range_check("divisor_summatory_hyperbola", 1, cap, [](std::int64_t n) -> std::optional<std::string> {
    if (divisor_summatory(n) != divisor_summatory(n - 1) + divisor_count(n)) return concat("n=", n);
    return std::nullopt;
  });
}

CheckOutcome dirichlet_band(std::int64_t cap) {
  return list_check("dirichlet_band", log_grid(cap), [](std::int64_t n) -> std::optional<std::string> {
    const double x = static_cast<double>(n);
    const double main = x * std::log(x) + (2.0 * std::numbers::egamma - 1.0) * x;
    const double err = std::abs(static_cast<double>(divisor_summatory(n)) - main);
    if (err > tolerances::kDirichlet * std::sqrt(x)) return concat("n=", n, " |D-main|=", err);
    return std::nullopt;
  });
}

CheckOutcome gauss_band(std::int64_t cap) {
  return list_check("gauss_band", log_grid(cap), [](std::int64_t n) -> std::optional<std::string> {
    const double x = static_cast<double>(n);
    const double err = std::abs(static_cast<double>(circle_count(n)) - std::numbers::pi * x);
    if (err > tolerances::kGauss * std::sqrt(x)) return concat("n=", n, " |C-pi n|=", err);
    return std::nullopt;
  });
}

// ---- asymptotics -----------------------------------------------------------

std::vector<std::int64_t> alpha_tenths() {
  std::vector<std::int64_t> v;
  for (std::int64_t j = 0; j <= 9; ++j) v.push_back(j);
  return v;
}

CheckOutcome method_agreement(std::int64_t) {
  return list_check("series_vs_quadrature", alpha_tenths(), [](std::int64_t j) -> std::optional<std::string> {
    const double alpha = static_cast<double>(j) / 10.0;
    for (std::int64_t m = 2; m <= 6; ++m) {
      for (std::int64_t r = 2; r <= m; ++r) {
        SlopeQuery q(alpha, r, m);
        const double gap = std::abs(series_A(q).value - slope_integral(q).value);
        if (gap > tolerances::kMethodAgreement) return concat("alpha=", alpha, " r=", r, " m=", m, " gap=", gap);
      }
    }
    return std::nullopt;
  });
}

CheckOutcome row_sums(std::int64_t) {
  return list_check("slope_row_sums", alpha_tenths(), [](std::int64_t j) -> std::optional<std::string> {
    const double alpha = static_cast<double>(j) / 10.0;
    for (std::int64_t m = 1; m <= 6; ++m) {
      double total = 0.0;
      for (std::int64_t r = 1; r <= m; ++r) total += slope(SlopeQuery(alpha, r, m)).value;
      if (std::abs(total - 1.0) > tolerances::kRowSum) return concat("alpha=", alpha, " m=", m, " sum=", total);
    }
    return std::nullopt;
  });
}

CheckOutcome parity_increasing(std::int64_t) {
  CheckOutcome outcome{"parity_f_increasing", true, 1000, {}};
  double previous = parity_f(0.0);
  for (int i = 1; i < 1000; ++i) {
    const double alpha = i / 999.0;
    const double value = parity_f(alpha);
    if (!(value > previous)) {
      outcome.passed = false;
      outcome.counterexample = concat("alpha=", alpha);
      break;
    }
    previous = value;
  }
  return outcome;
}

CheckOutcome parity_two_routes(std::int64_t) {
  return list_check("parity_f_series_vs_quadrature", alpha_tenths(), [](std::int64_t j) -> std::optional<std::string> {
    const double alpha = static_cast<double>(j) / 10.0;
    const double gap = std::abs(parity_f(alpha) - parity_f_quadrature(alpha));
    if (gap > 1e-12) return concat("alpha=", alpha, " gap=", gap);
    return std::nullopt;
  });
}

struct DensityCase {
  Rational alpha;
  Rational nu;
  std::int64_t r;
  std::int64_t m;
};

const std::vector<DensityCase>& density_cases() {
  static const std::vector<DensityCase> cases = [] {
    std::vector<DensityCase> out;
    const std::vector<std::pair<Rational, Rational>> shifts = {{Rational(0), Rational(0)},
                                                               {Rational(1, 2), Rational(0)},
                                                               {Rational(1, 2), Rational(1, 2)},
                                                               {Rational(3, 4), Rational(1, 4)},
                                                               {Rational(1, 3), Rational(1, 4)}};
    const std::vector<std::pair<std::int64_t, std::int64_t>> classes = {{1, 2}, {2, 2}, {1, 3}, {2, 3},
                                                                        {3, 3}, {2, 4}, {4, 4}};
    for (const auto& [alpha, nu] : shifts) {
      for (const auto& [r, m] : classes) out.push_back({alpha, nu, r, m});
    }
    return out;
  }();
  return cases;
}

std::vector<std::int64_t> convergence_sizes(std::int64_t cap) {
  std::vector<std::int64_t> sizes;
  for (std::int64_t n : {1000, 10000, 100000}) {
    if (n <= cap) sizes.push_back(n);
  }
  if (sizes.empty() || sizes.back() != cap) sizes.push_back(cap);
  return sizes;
}

CheckOutcome convergence_to_slope(std::int64_t cap) {
  return list_check("convergence_to_slope", convergence_sizes(cap), [](std::int64_t n) -> std::optional<std::string> {
    for (const auto& c : density_cases()) {
      SequenceSpec spec(n, c.alpha, c.nu);
      if (!spec.admits_floor_sums()) continue;
      const double limit = slope(SlopeQuery(c.alpha, c.r, c.m)).value;
      const double ratio = static_cast<double>(count_direct(spec, {c.r, c.m})) / static_cast<double>(n);
      if (std::abs(ratio - limit) > tolerances::kConvergence / std::sqrt(static_cast<double>(n))) {
        return concat(describe(n, c.alpha, c.nu), " r=", c.r, " m=", c.m, " ratio=", ratio, " slope=", limit);
      }
    }
    return std::nullopt;
  });
}

CheckOutcome nu_independence(std::int64_t cap) {
  return list_check("nu_independence", convergence_sizes(cap), [](std::int64_t n) -> std::optional<std::string> {
    for (const auto& alpha : alpha_grid()) {
      for (std::int64_t m = 2; m <= 4; ++m) {
        std::vector<std::vector<std::int64_t>> per_nu;
        for (const auto& nu : nu_grid()) {
          SequenceSpec spec(n, alpha, nu);
          if (spec.admits_floor_sums()) per_nu.push_back(count_all_classes(spec, m));
        }
        for (std::size_t i = 1; i < per_nu.size(); ++i) {
          for (std::int64_t r = 0; r < m; ++r) {
            const double gap = std::abs(static_cast<double>(per_nu[i][r] - per_nu[0][r]));
            if (gap > tolerances::kNuIndependence * std::sqrt(static_cast<double>(n))) {
              return concat("n=", n, " alpha=", alpha.to_string(), " r=", r + 1, " m=", m, " gap=", gap);
            }
          }
        }
      }
    }
    return std::nullopt;
  });
}

CheckOutcome residual_growth(std::int64_t cap) {
  std::vector<std::int64_t> sizes;
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(cap, 200); ++n) sizes.push_back(n);
  for (std::int64_t n : log_grid(cap)) {
    if (n > 200) sizes.push_back(n);
  }
  return list_check("residual_growth", sizes, [](std::int64_t n) -> std::optional<std::string> {
    for (const auto& c : density_cases()) {
      if (c.r < 2) continue;
      SequenceSpec spec(n, c.alpha, c.nu);
      if (!spec.admits_floor_sums()) continue;
      const double b = residual_B(spec, {c.r, c.m});
      if (std::abs(b) > tolerances::kResidual * std::sqrt(static_cast<double>(n))) {
        return concat(describe(n, c.alpha, c.nu), " r=", c.r, " m=", c.m, " B=", b);
      }
    }
    return std::nullopt;
  });
}

template <CheckOutcome (*Fn)(std::int64_t)>
VerifyCheck make(std::string name, VerifySuite suite) {
  return {std::move(name), suite, Fn};
}

}  // namespace

VerifySuite parse_verify_suite(std::string_view name) {
  if (name == "floor_sums") return VerifySuite::floor_sums;
  if (name == "lattice") return VerifySuite::lattice;
  if (name == "asymptotics") return VerifySuite::asymptotics;
  if (name == "all") return VerifySuite::all;
  throw PreconditionError("unknown suite '" + std::string(name) +
                          "', expected floor_sums, lattice, asymptotics or all");
}

std::string_view to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::floor_sums:
      return "floor_sums";
    case VerifySuite::lattice:
      return "lattice";
    case VerifySuite::asymptotics:
      return "asymptotics";
    case VerifySuite::all:
      return "all";
  }
  return "unknown";
}

const std::vector<VerifyCheck>& builtin_checks() {
  using S = VerifySuite;
  static const std::vector<VerifyCheck> checks = {
      make<partition_identity>("partition_identity", S::floor_sums),
      make<unit_modulus_identity>("m1_identity", S::floor_sums),
      make<floor_sums_vs_direct>("floor_sums_vs_direct", S::floor_sums),
      make<rational_alpha_vs_direct>("rational_alpha_vs_direct", S::floor_sums),
      make<threshold_lemma>("threshold_count_lemma", S::floor_sums),
      make<sequence_formulas>("fcr_formulas_vs_direct", S::floor_sums),
      make<floor_ceiling_window>("fc_duality_window", S::floor_sums),
      make<divisor_bound>("divisor_bound", S::floor_sums),
      make<rounding_variant>("rounding_variant_bound", S::floor_sums),
      make<r_step>("r_step_bound", S::floor_sums),
      make<power_of_two_drops>("power_of_two_drops", S::floor_sums),
      make<hyperbola_regions>("hyperbola_regions", S::floor_sums),
      make<really_divides_summation>("really_divides_summation", S::floor_sums),
      {"r2_exhaustive", S::lattice,
       [](std::int64_t cap) {
         return representation_check("r2_exhaustive", QuadraticForm::sum_of_squares(), &r2, 0, cap);
       }},
      {"circle_formula_vs_oracle", S::lattice,
       [](std::int64_t cap) { return formula_vs_oracle(LatticeFamily::circle, cap); }},
      {"eisenstein_formula_vs_oracle", S::lattice,
       [](std::int64_t cap) { return formula_vs_oracle(LatticeFamily::eisenstein, cap); }},
      {"z2_formula_vs_oracle", S::lattice,
       [](std::int64_t cap) { return formula_vs_oracle(LatticeFamily::z_sqrt_minus2, cap); }},
      {"rep_x2_xy_y2_exhaustive", S::lattice,
       [](std::int64_t cap) {
         return representation_check("rep_x2_xy_y2_exhaustive", QuadraticForm::eisenstein(), &rep_count_x2_xy_y2, 1,
                                     cap);
       }},
      {"rep_x2_2y2_exhaustive", S::lattice,
       [](std::int64_t cap) {
         return representation_check("rep_x2_2y2_exhaustive", QuadraticForm::x2_plus_2y2(), &rep_count_x2_2y2, 1,
                                     cap);
       }},
      make<circle_rseq_identity>("circle_rseq_identity", S::lattice),
      make<lattice_monotone>("lattice_monotone", S::lattice),
      make<summatory_hyperbola>("divisor_summatory_hyperbola", S::lattice),
      make<dirichlet_band>("dirichlet_band", S::lattice),
      make<gauss_band>("gauss_band", S::lattice),
      make<method_agreement>("series_vs_quadrature", S::asymptotics),
      make<row_sums>("slope_row_sums", S::asymptotics),
      make<parity_increasing>("parity_f_increasing", S::asymptotics),
      make<parity_two_routes>("parity_f_series_vs_quadrature", S::asymptotics),
      make<convergence_to_slope>("convergence_to_slope", S::asymptotics),
      make<nu_independence>("nu_independence", S::asymptotics),
      make<residual_growth>("residual_growth", S::asymptotics),
  };
  return checks;
}

std::vector<CheckOutcome> run_verify(VerifySuite suite, std::int64_t cap, const std::vector<VerifyCheck>& extra) {
  if (cap < 10) throw PreconditionError("verify needs cap >= 10, got " + std::to_string(cap));
  std::vector<CheckOutcome> outcomes;
  auto selected = [suite](const VerifyCheck& check) { return suite == VerifySuite::all || check.suite == suite; };
  for (const auto& check : builtin_checks()) {
    if (selected(check)) outcomes.push_back(check.run(cap));
  }
  for (const auto& check : extra) {
    if (selected(check)) outcomes.push_back(check.run(cap));
  }
  return outcomes;
}

unsigned verify_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FLOORLAT_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && requested >= 1) threads = static_cast<unsigned>(std::min(requested, 256L));
  }
  return threads;
}

std::optional<SweepFailure> sweep(std::int64_t lo, std::int64_t hi,
                                  const std::function<std::optional<std::string>(std::int64_t)>& probe) {
  if (hi < lo) return std::nullopt;
  const std::int64_t span = hi - lo + 1;
  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(verify_threads(), span));
  std::optional<SweepFailure> best;
  std::mutex guard;

  auto scan = [&](std::int64_t from, std::int64_t to) {
    for (std::int64_t n = from; n <= to; ++n) {
      {
        std::lock_guard lock(guard);
        if (best && best->n < n) return;  // a smaller counterexample already exists
      }
      if (auto detail = probe(n)) {
        std::lock_guard lock(guard);
        if (!best || n < best->n) best = SweepFailure{n, std::move(*detail)};
        return;
      }
    }
  };

  if (workers <= 1) {
    scan(lo, hi);
    return best;
  }
  std::vector<std::thread> pool;
  const std::int64_t chunk = (span + workers - 1) / workers;
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t from = lo + w * chunk;
    const std::int64_t to = std::min(hi, from + chunk - 1);
    if (from > to) break;
    pool.emplace_back(scan, from, to);
  }
  for (auto& t : pool) t.join();
  return best;
}

}  // namespace floorlat
