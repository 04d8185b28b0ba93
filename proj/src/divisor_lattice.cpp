#include "floorlat/divisor_lattice.hpp"

#include <string>

#include "floorlat/floor_sequences.hpp"
#include "floorlat/rational.hpp"

namespace floorlat {

namespace {

void require_non_negative(std::int64_t n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + " needs n >= 0, got " + std::to_string(n));
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw PreconditionError(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

std::int64_t isqrt_i128(__int128 v) {
  // v fits comfortably below 2^126 for every caller; reduce through uint64
  // when possible, otherwise fall back to GMP.
  if (v < 0) throw PreconditionError("isqrt of a negative value");
  if (v <= static_cast<__int128>(UINT64_MAX)) {
    return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(v)));
  }
  Integer hi = Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  Integer big = (hi << 64) + Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return isqrt(big).get_si();
}

std::int64_t floor_div_i64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Largest |y| for which the row y can contain a point with Q <= n.
std::int64_t row_bound(const QuadraticForm& form, std::int64_t n) {
  const __int128 neg_disc = -static_cast<__int128>(form.discriminant());
  const __int128 scaled = 4 * static_cast<__int128>(form.a) * n / neg_disc;
  return isqrt_i128(scaled);
}

struct RowSpan {
  std::int64_t lo;
  std::int64_t hi;  // empty when lo > hi
};

// Integers x with Q(x, y) <= n.
RowSpan feasible_row(const QuadraticForm& form, std::int64_t y, std::int64_t n) {
  const __int128 disc = static_cast<__int128>(form.discriminant()) * y * y +
                        4 * static_cast<__int128>(form.a) * n;
  if (disc < 0) return {1, 0};
  const std::int64_t s = isqrt_i128(disc);
  const std::int64_t by = form.b * y;
  const std::int64_t two_a = 2 * form.a;
  // Inner estimate of the real root interval; it only ever undershoots.
  std::int64_t lo = -floor_div_i64(by + s, two_a);
  std::int64_t hi = floor_div_i64(-by + s, two_a);
  auto inside = [&](std::int64_t x) { return form(x, y) <= n; };
  if (lo > hi || !inside(lo) || !inside(hi)) {
    const std::int64_t vertex = floor_div_i64(-by, two_a);
    if (inside(vertex)) {
      lo = hi = vertex;
    } else if (inside(vertex + 1)) {
      lo = hi = vertex + 1;
    } else {
      return {1, 0};
    }
  }
  while (inside(lo - 1)) --lo;
  while (inside(hi + 1)) ++hi;
  return {lo, hi};
}

}  // namespace

QuadraticForm::QuadraticForm(std::int64_t a_, std::int64_t b_, std::int64_t c_) : a(a_), b(b_), c(c_) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 30;
  if (a <= -kLimit || a >= kLimit || b <= -kLimit || b >= kLimit || c <= -kLimit || c >= kLimit) {
    throw PreconditionError("form coefficients must have magnitude below 2^30");
  }
  if (a <= 0 || discriminant() >= 0) {
    throw PreconditionError("form (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ") is not positive definite");
  }
}

__int128 QuadraticForm::operator()(std::int64_t x, std::int64_t y) const {
  const __int128 X = x, Y = y;
  return a * X * X + b * X * Y + c * Y * Y;
}

std::string_view to_string(CountMethod method) {
  return method == CountMethod::oracle ? "oracle" : "formula";
}

std::string_view to_string(LatticeFamily family) {
  switch (family) {
    case LatticeFamily::circle:
      return "circle";
    case LatticeFamily::eisenstein:
      return "eisenstein";
    case LatticeFamily::z_sqrt_minus2:
      return "z2";
  }
  return "unknown";
}

LatticeFamily parse_lattice_family(std::string_view name) {
  if (name == "circle") return LatticeFamily::circle;
  if (name == "eisenstein") return LatticeFamily::eisenstein;
  if (name == "z2") return LatticeFamily::z_sqrt_minus2;
  throw PreconditionError("unknown form '" + std::string(name) + "', expected circle, eisenstein or z2");
}

QuadraticForm form_of(LatticeFamily family) {
  switch (family) {
    case LatticeFamily::circle:
      return QuadraticForm::sum_of_squares();
    case LatticeFamily::eisenstein:
      return QuadraticForm::eisenstein();
    case LatticeFamily::z_sqrt_minus2:
      return QuadraticForm::x2_plus_2y2();
  }
  throw PreconditionError("unknown lattice family");
}

std::int64_t divisor_count_mod(std::int64_t n, std::int64_t r, std::int64_t m) {
  require_positive(n, "divisor_count_mod");
  if (m < 1) throw PreconditionError("divisor_count_mod needs m >= 1");
  std::int64_t target = r % m;
  if (target < 0) target += m;
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    const std::int64_t e = n / d;
    if (d % m == target) ++count;
    if (e != d && e % m == target) ++count;
  }
  return count;
}

std::int64_t divisor_count(std::int64_t n) { return divisor_count_mod(n, 0, 1); }

std::int64_t divisor_summatory(std::int64_t n) {
  require_non_negative(n, "divisor_summatory");
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n)));
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= s; ++d) total += n / d;
  return 2 * total - s * s;
}

std::int64_t r2(std::int64_t n) {
  require_non_negative(n, "r2");
  if (n == 0) return 1;
  return 4 * (divisor_count_mod(n, 1, 4) - divisor_count_mod(n, 3, 4));
}

std::int64_t enumerate_form_count(const QuadraticForm& form, std::int64_t n) {
  require_non_negative(n, "enumerate_form_count");
  const std::int64_t rows = row_bound(form, n);
  std::int64_t total = 0;
  for (std::int64_t y = -rows; y <= rows; ++y) {
    const RowSpan span = feasible_row(form, y, n);
    if (span.lo <= span.hi) total += span.hi - span.lo + 1;
  }
  return total;
}

std::int64_t enumerate_form_representations(const QuadraticForm& form, std::int64_t n) {
  require_non_negative(n, "enumerate_form_representations");
  const std::int64_t rows = row_bound(form, n);
  const std::int64_t two_a = 2 * form.a;
  std::int64_t total = 0;
  for (std::int64_t y = -rows; y <= rows; ++y) {
    // a x^2 + (b y) x + (c y^2 - n) = 0 has integer roots only when the
    // discriminant is a perfect square.
    const __int128 disc = static_cast<__int128>(form.discriminant()) * y * y +
                          4 * static_cast<__int128>(form.a) * n;
    if (disc < 0) continue;
    const std::int64_t s = isqrt_i128(disc);
    if (static_cast<__int128>(s) * s != disc) continue;
    const std::int64_t by = form.b * y;
    for (std::int64_t num : {-by - s, -by + s}) {
      if (num % two_a == 0) ++total;
      if (s == 0) break;
    }
  }
  return total;
}

std::int64_t circle_count(std::int64_t n) {
  require_non_negative(n, "circle_count");
  if (n == 0) return 1;
  const std::int64_t half_up = (n + 1) / 2;
  const Rational nu(n % 2, 2);
  return 4 * count_rational_alpha(half_up, 1, 2, nu, 2) + 4 * (n / 2) + 1;
}

std::int64_t eisenstein_count(std::int64_t n) {
  require_non_negative(n, "eisenstein_count");
  if (n == 0) return 1;
  return 6 * count_via_floor_sums(SequenceSpec(n), CongruenceClass(1, 3)) + 1;
}

std::int64_t rep_count_x2_xy_y2(std::int64_t n) {
  require_positive(n, "rep_count_x2_xy_y2");
  return 6 * (divisor_count_mod(n, 1, 3) - divisor_count_mod(n, 2, 3));
}

std::int64_t rep_count_x2_2y2(std::int64_t n) {
  require_positive(n, "rep_count_x2_2y2");
  return 2 * (divisor_count_mod(n, 1, 8) + divisor_count_mod(n, 3, 8) -
              divisor_count_mod(n, 5, 8) - divisor_count_mod(n, 7, 8));
}

std::int64_t z_sqrt_minus2_count(std::int64_t n) {
  require_non_negative(n, "z_sqrt_minus2_count");
  // The shifted-sequence identity needs ceil(n/4) >= 4 ceil(n/4) - n, which
  // fails exactly at n = 1, 2, 5.
  switch (n) {
    case 0:
      return 1;
    case 1:
      return 3;
    case 2:
      return 5;
    case 5:
      return 11;
    default:
      break;
  }
  const std::int64_t quarter_up = (n + 3) / 4;
  const Rational nu(4 * quarter_up - n, 4);  // {-n/4}
  return 1 + 2 * count_rational_alpha(quarter_up, 3, 4, nu, 2) +
         2 * count_rational_alpha(quarter_up, 1, 4, nu, 2) + 2 * n + 2 * (n / 3) - 4 * quarter_up;
}

LatticeCount count_lattice(LatticeFamily family, std::int64_t n, CountMethod method) {
  if (method == CountMethod::oracle) {
    return {n, enumerate_form_count(form_of(family), n), method};
  }
  switch (family) {
    case LatticeFamily::circle:
      return {n, circle_count(n), method};
    case LatticeFamily::eisenstein:
      return {n, eisenstein_count(n), method};
    case LatticeFamily::z_sqrt_minus2:
      return {n, z_sqrt_minus2_count(n), method};
  }
  throw PreconditionError("unknown lattice family");
}

}  // namespace floorlat
