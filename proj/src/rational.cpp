#include "floorlat/rational.hpp"

#include <cctype>
#include <ostream>

namespace floorlat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_digits(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto fail = [&]() -> Rational {
    throw PreconditionError("cannot parse rational '" + std::string(text) +
                            "': expected p, p/q or a decimal");
  };

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash);
    auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return fail();
    Integer den = parse_digits(q);
    if (den == 0) throw PreconditionError("rational '" + std::string(text) + "' has zero denominator");
    value = Rational(parse_digits(p), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = whole.empty() ? Integer(0) : parse_digits(whole);
    num *= scale;
    if (!frac.empty()) num += parse_digits(frac);
    value = Rational(num, scale);
  } else {
    if (!all_digits(body)) return fail();
    value = Rational(parse_digits(body));
  }
  return negative ? -value : value;
}

std::string Rational::to_string() const {
  return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  Integer n = num_ * rhs.den_;
  Integer d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_rational(const Rational& x) {
  return floor_div(x.numerator(), x.denominator());
}

Integer ceil_rational(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return q;
}

Rational fractional_part(const Rational& x) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(r, x.denominator());
}

Integer floor_quotient(const Rational& x, const Rational& y) {
  if (y.sign() == 0) throw std::domain_error("floor_quotient by zero");
  return floor_div(x.numerator() * y.denominator(), x.denominator() * y.numerator());
}

void require_unit_interval(const Rational& x, std::string_view name) {
  if (x.sign() < 0 || x >= Rational(1)) {
    throw PreconditionError(std::string(name) + " must lie in [0,1), got " + x.to_string());
  }
}

Integer shifted_floor_term(std::int64_t n, std::int64_t k, const Rational& alpha,
                           const Rational& nu) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (k < 1 || k > n) {
    throw PreconditionError("k must lie in [1,n], got k=" + std::to_string(k) +
                            " with n=" + std::to_string(n));
  }
  require_unit_interval(alpha, "alpha");
  require_unit_interval(nu, "nu");
  // (n - nu)/k + alpha as one fraction, then a single floor.
  Rational arg = (Rational(static_cast<long>(n)) - nu) / Rational(static_cast<long>(k)) + alpha;
  return floor_rational(arg);
}

bool really_divides(const Rational& a, const Integer& b) {
  if (a.sign() <= 0) throw PreconditionError("really_divides requires a > 0, got " + a.to_string());
  if (b < 1) throw PreconditionError("really_divides requires b >= 1");
  // ceil(d a) = b  <=>  (b - 1)/a < d <= b/a, and d >= 1 follows from b >= 1.
  Integer upper = floor_quotient(Rational(b), a);
  Integer below = floor_quotient(Rational(Integer(b - 1)), a);
  return upper > below;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw PreconditionError("isqrt of a negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  // Binary digit-by-digit method; exact for the full 64-bit range.
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

}  // namespace floorlat
