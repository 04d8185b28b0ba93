#include "floorlat/asymptotics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace floorlat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Estimate {
  double value;
  double error;
};

// psi with a bound on its own error: expansion truncation plus accumulated
// rounding in the recurrence.
Estimate digamma_with_error(double x) {
  if (!(x > 0.0)) throw PreconditionError("digamma needs x > 0");
  double shift = 0.0;
  double magnitude = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    magnitude += 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // B_{2k} / (2k), k = 1..7
  constexpr std::array<double, 7> kCoeff = {1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0,        -1.0 / 240.0,
                                            1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0};
  double series = 0.0;
  double power = inv2;
  for (double c : kCoeff) {
    series += c * power;
    power *= inv2;
  }
  const double value = shift + std::log(x) - 0.5 * inv - series;
  // First omitted term: B_16 / 16 = 3617 / 8160.
  const double truncation = 3617.0 / 8160.0 * power;
  const double rounding = 4.0 * kEps * (magnitude + std::abs(std::log(x)) + std::abs(value) + 1.0);
  return {value, truncation + rounding};
}

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  static constexpr int kOrder = 20;
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};

  GaussLegendre() {
    for (int i = 0; i < kOrder; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  template <typename F>
  double apply(const F& f, double a, double b) const {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return sum * half;
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel make_panel(const F& f, double a, double b) {
  const auto& rule = gauss_legendre();
  const double mid = 0.5 * (a + b);
  const double whole = rule.apply(f, a, b);
  const double halves = rule.apply(f, a, mid) + rule.apply(f, mid, b);
  return {a, b, halves, std::abs(halves - whole)};
}

// Globally adaptive: keep splitting the panel with the largest error until the
// summed error meets tol (or a few ulps of the total), with a hard cap on the
// number of panels so a hostile integrand cannot stall the caller.
template <typename F>
Estimate integrate(const F& f, double a, double b, double tol) {
  constexpr std::size_t kMaxPanels = 2000;
  std::priority_queue<Panel> panels;
  panels.push(make_panel(f, a, b));
  double value = panels.top().value, error = panels.top().error;
  while (panels.size() < kMaxPanels && error > std::max(tol, 16.0 * kEps * std::abs(value))) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;
    panels.pop();
    const Panel left = make_panel(f, worst.a, mid), right = make_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-add from the panels to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  for (; !panels.empty(); panels.pop()) {
    value += panels.top().value;
    error += panels.top().error;
  }
  return {value, error};
}

double geometric_sum(double x, std::int64_t m) {
  double p = 0.0;
  for (std::int64_t i = 0; i < m; ++i) p = p * x + 1.0;
  return p;
}

// integral_0^1 x^beta (1 + ... + x^(k-1)) / (1 + ... + x^(m-1)) dx, beta > -1.
// On [0, 1/2] the substitution t = x^(beta+1) turns x^beta dx into
// dt / (beta+1), leaving a bounded integrand; [1/2, 1] is smooth as is.
Estimate weighted_integral(double beta, std::int64_t k, std::int64_t m, double tol) {
  const double lift = beta + 1.0;
  const double gamma = 1.0 / lift;
  auto ratio = [&](double x) { return geometric_sum(x, k) / geometric_sum(x, m); };
  auto near_zero = [&](double t) { return ratio(std::pow(t, gamma)) / lift; };
  auto near_one = [&](double x) { return std::pow(x, beta) * ratio(x); };
  const double t_split = std::pow(0.5, lift);
  Estimate low = integrate(near_zero, 0.0, t_split, 0.5 * tol);
  Estimate high = integrate(near_one, 0.5, 1.0, 0.5 * tol);
  const double value = low.value + high.value;
  return {value, low.error + high.error + 8.0 * kEps * std::abs(value)};
}

Estimate density_integral(double beta, std::int64_t m, double tol) { return weighted_integral(beta, 1, m, tol); }

// For r = 1: -alpha/(1-alpha) + integral x^-alpha / g(x) dx. Writing
// 1/g = 1 - x q/g with q = 1 + ... + x^(m-2) cancels the pole analytically:
// the slope is 1 - integral x^(1-alpha) q/g dx.
Estimate first_class_slope(double alpha, std::int64_t m, double tol) {
  const Estimate tail = weighted_integral(1.0 - alpha, m - 1, m, tol);
  return {1.0 - tail.value, tail.error + kEps};
}

constexpr double kQuadratureTolerance = 1e-15;

double as_double_ratio(const Integer& num, const Integer& den) {
  mpq_class q(num, den);
  return q.get_d();
}

}  // namespace

SlopeQuery::SlopeQuery(double alpha_, std::int64_t r_, std::int64_t m_) : alpha(alpha_), r(r_), m(m_) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw PreconditionError("alpha must lie in [0,1), got " + std::to_string(alpha));
  }
  if (m < 1) throw PreconditionError("modulus m must be positive");
  if (r < 1 || r > m) {
    throw PreconditionError("r must lie in [1,m], got r=" + std::to_string(r) + ", m=" + std::to_string(m));
  }
}

SlopeQuery::SlopeQuery(const Rational& alpha_, std::int64_t r_, std::int64_t m_)
    : SlopeQuery((require_unit_interval(alpha_, "alpha"), alpha_.to_double()), r_, m_) {}

std::string_view to_string(SlopeMethod method) {
  return method == SlopeMethod::series ? "series" : "quadrature";
}

double digamma(double x) { return digamma_with_error(x).value; }

SlopeResult series_A(const SlopeQuery& query) {
  const double m = static_cast<double>(query.m);
  const double r = static_cast<double>(query.r);
  const Estimate upper = digamma_with_error((r + 1.0 - query.alpha) / m);
  const Estimate lower = digamma_with_error((r - query.alpha) / m);
  const double value = (upper.value - lower.value) / m;
  const double error = (upper.error + lower.error) / m + 2.0 * kEps * std::abs(value);
  return {value, SlopeMethod::series, error};
}

SlopeResult slope_integral(const SlopeQuery& query) {
  if (query.r == 1 && query.m >= 2) {
    // raw integral = 1/(1-alpha) - tail; only reached when asked for directly
    const Estimate first = first_class_slope(query.alpha, query.m, kQuadratureTolerance);
    const double value = first.value + query.alpha / (1.0 - query.alpha);
    return {value, SlopeMethod::quadrature, first.error + 2.0 * kEps * std::abs(value)};
  }
  const double beta = static_cast<double>(query.r) - 1.0 - query.alpha;
  const Estimate est = density_integral(beta, query.m, kQuadratureTolerance);
  return {est.value, SlopeMethod::quadrature, est.error};
}

SlopeResult slope(const SlopeQuery& query, SlopeMethod method) {
  if (query.m == 1) return {1.0, method, 0.0};
  if (query.r == 1 && method == SlopeMethod::quadrature) {
    const Estimate est = first_class_slope(query.alpha, query.m, kQuadratureTolerance);
    return {est.value, method, est.error};
  }
  SlopeResult base = method == SlopeMethod::series ? series_A(query) : slope_integral(query);
  if (query.r == 1) {
    const double correction = -query.alpha / (1.0 - query.alpha);
    base.value += correction;
    base.abs_error_estimate += 2.0 * kEps * (std::abs(correction) + std::abs(base.value));
  }
  return base;
}

double residual_B(const SequenceSpec& spec, const CongruenceClass& cls) {
  if (cls.m < 2) throw PreconditionError("residual_B needs m >= 2");
  if (cls.r < 2) throw PreconditionError("residual_B needs r >= 2; r = 1 follows from the partition identity");
  if (!spec.admits_floor_sums()) throw PreconditionError("residual_B needs n*alpha >= nu");

  const std::int64_t last = floor_sum_last_index(spec, cls);
  // (n - nu) / (j - alpha) = x / (s (j d - c)) with alpha = c/d, nu = a/s.
  const Integer& c = spec.alpha.numerator();
  const Integer& d = spec.alpha.denominator();
  const Integer x = (Integer(static_cast<long>(spec.n)) * spec.nu.denominator() - spec.nu.numerator()) * d;
  const Integer& s = spec.nu.denominator();

  auto frac = [&](std::int64_t j) {
    Integer den = s * (Integer(static_cast<long>(j)) * d - c);
    Integer rem;
    mpz_fdiv_r(rem.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
    return as_double_ratio(rem, den);
  };

  // Neumaier summation of the alternating terms.
  double sum = 0.0, carry = 0.0;
  auto add = [&](double v) {
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };
  for (std::int64_t i = 0; i <= last; ++i) {
    const std::int64_t j = cls.r + i * cls.m;
    add(frac(j));
    add(-frac(j + 1));
  }
  return sum + carry;
}

Rational partial_A(const SequenceSpec& spec, const CongruenceClass& cls) {
  const std::int64_t last = floor_sum_last_index(spec, cls);
  Rational total;
  for (std::int64_t i = 0; i <= last; ++i) {
    const Rational j(static_cast<long>(cls.r + i * cls.m));
    total += Rational(1) / (j - spec.alpha) - Rational(1) / (j + Rational(1) - spec.alpha);
  }
  return total;
}

std::vector<SlopeTableRow> slope_table(const Rational& alpha, std::int64_t m_max) {
  if (m_max < 1) throw PreconditionError("m_max must be positive");
  require_unit_interval(alpha, "alpha");
  std::vector<SlopeTableRow> rows;
  for (std::int64_t r = 1; r <= m_max; ++r) {
    for (std::int64_t m = r; m <= m_max; ++m) {
      rows.push_back({r, m, slope(SlopeQuery(alpha, r, m)).value});
    }
  }
  return rows;
}

double parity_f(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw PreconditionError("parity_f needs alpha in [0,1]");
  // sum_k (-1)^k / (k + 2 - alpha), paired into a digamma difference.
  const double c = 2.0 - alpha;
  return 0.5 * (digamma(0.5 * (c + 1.0)) - digamma(0.5 * c));
}

double parity_f_quadrature(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw PreconditionError("parity_f needs alpha in [0,1]");
  return density_integral(1.0 - alpha, 2, kQuadratureTolerance).value;
}

double find_alpha0(double tolerance, const std::function<void(const Bracket&)>& observer) {
  if (!(tolerance >= 1e-13)) throw PreconditionError("find_alpha0 needs tolerance >= 1e-13");
  Bracket bracket{0.0, 1.0};
  // f is increasing with f(0) < 1/2 < f(1); the bracket keeps that order.
  double mid = 0.5;
  for (int iter = 0; iter < 60; ++iter) {
    if (observer) observer(bracket);
    mid = 0.5 * (bracket.lo + bracket.hi);
    const double excess = parity_f(mid) - 0.5;
    if (std::abs(excess) <= tolerance && bracket.hi - bracket.lo <= tolerance / 64.0) break;
    if (mid <= bracket.lo || mid >= bracket.hi) break;
    if (excess < 0.0) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
  }
  return mid;
}

}  // namespace floorlat
