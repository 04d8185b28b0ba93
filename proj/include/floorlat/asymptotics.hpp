#pragma once

// Limiting densities lim N_{n,alpha,nu,r,m} / n and the parity-balancing
// shift.
//
// The density has two independent evaluations: an alternating series summed
// in closed form through digamma differences, and direct quadrature of
//   integral_0^1 (1 - x) x^(r-1-alpha) / (1 - x^m) dx.
// Exact arithmetic stops at this module's boundary; everything here returns
// doubles with an error estimate.

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "floorlat/floor_sequences.hpp"
#include "floorlat/rational.hpp"

namespace floorlat {

struct SlopeQuery {
  SlopeQuery(double alpha, std::int64_t r, std::int64_t m);
  SlopeQuery(const Rational& alpha, std::int64_t r, std::int64_t m);

  double alpha;
  std::int64_t r;
  std::int64_t m;
};

enum class SlopeMethod { series, quadrature };

std::string_view to_string(SlopeMethod method);

struct SlopeResult {
  double value;
  SlopeMethod method;
  double abs_error_estimate;
};

/// psi(x) for x > 0: upward recurrence to x >= 10, then the asymptotic
/// expansion through the x^-14 term.
double digamma(double x);

/// sum_{i>=0} 1/(r+im-alpha) - 1/(r+1+im-alpha)
///   = (psi((r+1-alpha)/m) - psi((r-alpha)/m)) / m.
/// For r = 1 this is the raw series; slope() adds the -alpha/(1-alpha) term.
SlopeResult series_A(const SlopeQuery& query);

/// integral_0^1 x^(r-1-alpha) / (1 + x + ... + x^(m-1)) dx by composite
/// Gauss-Legendre, with the x = 0 endpoint mapped away by x = t^(1/(r-alpha)).
SlopeResult slope_integral(const SlopeQuery& query);

/// Limiting proportion of terms congruent to r mod m. Exactly 1 for m = 1.
SlopeResult slope(const SlopeQuery& query, SlopeMethod method = SlopeMethod::quadrature);

/// sum_{i=0}^{I} {(n-nu)/(r+im-alpha)} - {(n-nu)/(r+1+im-alpha)} with I from
/// floor_sum_last_index. Each fractional part is exact before conversion.
/// Requires m >= 2, r >= 2 and n * alpha >= nu.
double residual_B(const SequenceSpec& spec, const CongruenceClass& cls);

/// Exact partial sum of the A series over the same index range as
/// residual_B, so that (n - nu) * partial_A + B equals the floor-difference
/// sum.
Rational partial_A(const SequenceSpec& spec, const CongruenceClass& cls);

struct SlopeTableRow {
  std::int64_t r;
  std::int64_t m;
  double slope;
};

/// slope(alpha, r, m) for 1 <= r <= m <= m_max, ordered by (r, m).
std::vector<SlopeTableRow> slope_table(const Rational& alpha, std::int64_t m_max);

/// f(alpha) = integral_0^1 x^(1-alpha) / (1 + x) dx, alpha in [0, 1].
double parity_f(double alpha);

/// Same integral by quadrature; used to cross-check parity_f.
double parity_f_quadrature(double alpha);

struct Bracket {
  double lo;
  double hi;
};

/// Bisection for f(alpha) = 1/2 on [0, 1]. Stops once |f(mid) - 1/2| and the
/// bracket width are both within tolerance, or after 60 halvings. The
/// observer, when set, sees every bracket.
double find_alpha0(double tolerance, const std::function<void(const Bracket&)>& observer = {});

}  // namespace floorlat
