#include "floorlat/floor_sequences.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace floorlat {

namespace {

// Anything below this bound leaves headroom for one more addition in int64.
const Integer kNativeLimit = Integer(1) << 62;

bool fits_native(const Integer& v) { return v >= 0 && v < kNativeLimit; }

std::int64_t to_i64(const Integer& v) { return static_cast<std::int64_t>(v.get_si()); }

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Terms of the sequence written as floor((N + C k) / (D k)) with
//   N = (n b - a) d,  C = c b,  D = b d
// for nu = a/b and alpha = c/d. All three are non-negative and N > 0.
struct TermKernel {
  Integer base;    // N
  Integer slope;   // C
  Integer scale;   // D
  std::int64_t n;

  explicit TermKernel(const SequenceSpec& spec) : n(spec.n) {
    const Integer& a = spec.nu.numerator();
    const Integer& b = spec.nu.denominator();
    const Integer& c = spec.alpha.numerator();
    const Integer& d = spec.alpha.denominator();
    base = (big(spec.n) * b - a) * d;
    slope = c * b;
    scale = b * d;
  }

  bool native() const {
    return fits_native(base + slope * big(n)) && fits_native(scale * big(n));
  }

  // Calls visit(k, term) for k = 1..n, term as int64 or Integer.
  template <typename Visit>
  void for_each(Visit&& visit) const {
    if (native()) {
      const std::int64_t N = to_i64(base), C = to_i64(slope), D = to_i64(scale);
      for (std::int64_t k = 1; k <= n; ++k) visit(k, (N + C * k) / (D * k));
    } else {
      Integer num, den, q;
      for (std::int64_t k = 1; k <= n; ++k) {
        num = base + slope * big(k);
        den = scale * big(k);
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        visit(k, q);
      }
    }
  }
};

std::int64_t residue(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t residue(const Integer& v, std::int64_t m) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

// Sum over i = 0..last of
//   floor(X / (s (u + i v))) - floor(X / (s (u + w + i v)))
// with X, s, u, v, w all positive.
class AlternatingFloorSum {
 public:
  AlternatingFloorSum(Integer x, Integer s, Integer u, Integer v, Integer w)
      : x_(std::move(x)), s_(std::move(s)), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}

  // Last i with s (u + i v) <= X, clamped at 0.
  std::int64_t last_index() const {
    Integer span = floor_div(x_, s_) - u_;
    if (span < 0) return 0;
    return to_i64(floor_div(span, v_));
  }

  std::int64_t evaluate() const {
    const std::int64_t last = last_index();
    if (fits_native(x_) && fits_native(s_ * (u_ + w_ + v_ * big(last)))) {
      const std::int64_t X = to_i64(x_), S = to_i64(s_), U = to_i64(u_), V = to_i64(v_),
                         W = to_i64(w_);
      std::int64_t total = 0;
      for (std::int64_t i = 0; i <= last; ++i) {
        const std::int64_t lo = U + i * V;
        total += X / (S * lo) - X / (S * (lo + W));
      }
      return total;
    }
    Integer total = 0, den, q;
    for (std::int64_t i = 0; i <= last; ++i) {
      den = s_ * (u_ + v_ * big(i));
      mpz_fdiv_q(q.get_mpz_t(), x_.get_mpz_t(), den.get_mpz_t());
      total += q;
      den += s_ * w_;
      mpz_fdiv_q(q.get_mpz_t(), x_.get_mpz_t(), den.get_mpz_t());
      total -= q;
    }
    return to_i64(total);
  }

 private:
  Integer x_, s_, u_, v_, w_;
};

void require_floor_sum_hypothesis(const SequenceSpec& spec) {
  if (!spec.admits_floor_sums()) {
    throw PreconditionError("floor-sum formulas need n*alpha >= nu (n=" + std::to_string(spec.n) +
                            ", alpha=" + spec.alpha.to_string() + ", nu=" + spec.nu.to_string() +
                            ")");
  }
}

void require_positive_n(std::int64_t n) {
  if (n < 1) throw PreconditionError("n must be positive, got " + std::to_string(n));
}

// (n - nu) * d as one integer when alpha = c/d; exact since nu's
// denominator b is folded into the divisor instead.
struct OffsetNumerator {
  Integer x;  // (n b - a) d
  Integer s;  // b
};

OffsetNumerator offset_numerator(std::int64_t n, const Rational& nu, const Integer& d) {
  return {(big(n) * nu.denominator() - nu.numerator()) * d, nu.denominator()};
}

}  // namespace

SequenceSpec::SequenceSpec(std::int64_t n_, Rational alpha_, Rational nu_)
    : n(n_), alpha(std::move(alpha_)), nu(std::move(nu_)) {
  require_positive_n(n);
  require_unit_interval(alpha, "alpha");
  require_unit_interval(nu, "nu");
}

bool SequenceSpec::admits_floor_sums() const {
  return Rational(static_cast<long>(n)) * alpha >= nu;
}

CongruenceClass::CongruenceClass(std::int64_t r_, std::int64_t m_) : r(r_), m(m_) {
  if (m < 1) throw PreconditionError("modulus m must be positive, got " + std::to_string(m));
  r = residue(r, m);
  if (r == 0) r = m;
}

bool CongruenceClass::contains(const Integer& value) const {
  return residue(value, m) == r % m;
}

std::vector<Integer> sequence_terms(const SequenceSpec& spec) {
  std::vector<Integer> terms;
  terms.reserve(static_cast<std::size_t>(spec.n));
  TermKernel(spec).for_each([&](std::int64_t, const auto& term) { terms.emplace_back(term); });
  return terms;
}

std::vector<std::int64_t> count_all_classes(const SequenceSpec& spec, std::int64_t m) {
  if (m < 1) throw PreconditionError("modulus m must be positive, got " + std::to_string(m));
  std::vector<std::int64_t> by_residue(static_cast<std::size_t>(m), 0);
  TermKernel(spec).for_each(
      [&](std::int64_t, const auto& term) { ++by_residue[static_cast<std::size_t>(residue(term, m))]; });
  // Residue 0 is class m; shift so index r-1 holds class r.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m));
  for (std::int64_t r = 1; r <= m; ++r) {
    counts[static_cast<std::size_t>(r - 1)] = by_residue[static_cast<std::size_t>(r % m)];
  }
  return counts;
}

std::int64_t count_direct(const SequenceSpec& spec, const CongruenceClass& cls) {
  std::int64_t count = 0;
  const std::int64_t target = cls.r % cls.m;
  TermKernel(spec).for_each([&](std::int64_t, const auto& term) {
    if (residue(term, cls.m) == target) ++count;
  });
  return count;
}

std::int64_t f_seq(std::int64_t n) {
  if (n < 0) throw PreconditionError("f_seq needs n >= 0");
  if (n > (std::int64_t{1} << 61)) throw PreconditionError("f_seq: n too large");
  // Blocks of d sharing the quotient n / d; the alternating sign over 1..x sums to x & 1.
  std::int64_t total = 0;
  for (std::int64_t lo = 1; lo <= n;) {
    const std::int64_t q = n / lo, hi = n / q;
    total += q * ((hi & 1) - ((lo - 1) & 1));
    lo = hi + 1;
  }
  return total;
}

std::int64_t c_seq(std::int64_t n) {
  require_positive_n(n);
  return n - f_seq(n - 1);
}

std::int64_t r_seq(std::int64_t n) {
  require_positive_n(n);
  if (n > (std::int64_t{1} << 60)) throw PreconditionError("r_seq: n too large");
  std::int64_t total = -n;
  for (std::int64_t lo = 1; lo <= n;) {
    const std::int64_t q = (2 * n) / (2 * lo - 1);
    const std::int64_t hi = std::min(n, ((2 * n) / q + 1) / 2);
    total += q * ((hi & 1) - ((lo - 1) & 1));
    lo = hi + 1;
  }
  return total;
}

std::int64_t r_seq_round_down(std::int64_t n) {
  require_positive_n(n);
  if (n > (std::int64_t{1} << 60)) throw PreconditionError("r_seq_round_down: n too large");
  // Halves rounded down: ceil(n/k - 1/2) = ceil((2n - k) / (2k)).
  std::int64_t odd = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t num = 2 * n - k, den = 2 * k;
    const std::int64_t term = (num + den - 1) / den;  // num >= 0 here
    if (term % 2 == 1) ++odd;
  }
  return odd;
}

std::int64_t threshold_count(const SequenceSpec& spec, std::int64_t k) {
  if (k < 1) throw PreconditionError("threshold k must be positive");
  require_floor_sum_hypothesis(spec);
  if (k == 1) return spec.n;
  return to_i64(floor_quotient(Rational(static_cast<long>(spec.n)) - spec.nu,
                               Rational(static_cast<long>(k)) - spec.alpha));
}

std::int64_t floor_sum_last_index(const SequenceSpec& spec, const CongruenceClass& cls) {
  // i <= (n - nu - r + alpha) / m
  Rational span = Rational(static_cast<long>(spec.n)) - spec.nu -
                  Rational(static_cast<long>(cls.r)) + spec.alpha;
  if (span.sign() < 0) return 0;
  return to_i64(floor_quotient(span, Rational(static_cast<long>(cls.m))));
}

std::int64_t count_via_floor_sums(const SequenceSpec& spec, const CongruenceClass& cls) {
  if (cls.m < 2) throw PreconditionError("count_via_floor_sums needs m >= 2");
  require_floor_sum_hypothesis(spec);

  const Integer& c = spec.alpha.numerator();
  const Integer& d = spec.alpha.denominator();
  auto [x, s] = offset_numerator(spec.n, spec.nu, d);

  // floor((n-nu)/(j - alpha)) = floor(x / (s (j d - c)))
  AlternatingFloorSum sum(x, s, big(cls.r) * d - c, big(cls.m) * d, d);
  std::int64_t total = sum.evaluate();
  if (cls.r == 1) {
    total += spec.n - to_i64(floor_div(x, s * (d - c)));
  }
  return total;
}

std::int64_t count_rational_alpha(std::int64_t n, std::int64_t p, std::int64_t q,
                                  const Rational& nu, std::int64_t m) {
  require_positive_n(n);
  if (q < 1) throw PreconditionError("q must be positive");
  if (p < 0 || p >= q) {
    throw PreconditionError("need 0 <= p < q, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  if (m < 1) throw PreconditionError("modulus m must be positive");
  require_unit_interval(nu, "nu");
  if (Rational(big(n) * big(p), big(q)) < nu) {
    throw PreconditionError("count_rational_alpha needs n*p/q >= nu");
  }

  // (n - nu) q is an exact rational X; each quotient is floor(X / integer).
  Rational scaled = (Rational(static_cast<long>(n)) - nu) * Rational(static_cast<long>(q));
  const Integer& x = scaled.numerator();
  const Integer& s = scaled.denominator();
  const Integer Q = big(q), P = big(p);

  AlternatingFloorSum sum(x, s, Q - P, Q * big(m), Q);
  return n - to_i64(floor_div(x, s * (Q - P))) + sum.evaluate();
}

}  // namespace floorlat
