#pragma once

// Divisor-class functions, representation counts of binary quadratic forms,
// and lattice-point counts for the regions x^2+y^2 <= n, x^2+xy+y^2 <= n and
// x^2+2y^2 <= n.
//
// Every closed-form count here has a brute-force counterpart
// (enumerate_form_count / enumerate_form_representations) that scans the
// region directly in exact integer arithmetic.

#include <cstdint>
#include <string_view>

namespace floorlat {

/// ax^2 + bxy + cy^2 with a > 0 and b^2 - 4ac < 0.
struct QuadraticForm {
  QuadraticForm(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  __int128 operator()(std::int64_t x, std::int64_t y) const;

  static QuadraticForm sum_of_squares() { return {1, 0, 1}; }
  static QuadraticForm eisenstein() { return {1, 1, 1}; }
  static QuadraticForm x2_plus_2y2() { return {1, 0, 2}; }
};

enum class CountMethod { oracle, formula };

/// The three families that have a closed-form count.
enum class LatticeFamily { circle, eisenstein, z_sqrt_minus2 };

struct LatticeCount {
  std::int64_t n;
  std::int64_t count;
  CountMethod method;
};

std::string_view to_string(CountMethod method);
std::string_view to_string(LatticeFamily family);
LatticeFamily parse_lattice_family(std::string_view name);

/// Positive divisors of n congruent to r mod m. Trial division up to sqrt(n).
std::int64_t divisor_count_mod(std::int64_t n, std::int64_t r, std::int64_t m);

/// Number of positive divisors of n.
std::int64_t divisor_count(std::int64_t n);

/// D(n) = sum_{d<=n} floor(n/d), evaluated with the hyperbola identity
/// 2 sum_{d<=s} floor(n/d) - s^2, s = isqrt(n). D(0) = 0.
std::int64_t divisor_summatory(std::int64_t n);

/// Ordered pairs (a, b) with a^2 + b^2 = n, as 4(d_{1,4}(n) - d_{3,4}(n)).
/// r2(0) = 1.
std::int64_t r2(std::int64_t n);

/// #{(x,y) : Q(x,y) <= n}, scanning each admissible row y and bracketing
/// x with integer square roots.
std::int64_t enumerate_form_count(const QuadraticForm& form, std::int64_t n);

/// #{(x,y) : Q(x,y) == n} by the same row scan.
std::int64_t enumerate_form_representations(const QuadraticForm& form, std::int64_t n);

/// Lattice points in x^2 + y^2 <= n, from the 1/2-shifted sequence of
/// length ceil(n/2) offset by {n/2}.
std::int64_t circle_count(std::int64_t n);

/// Lattice points in x^2 + xy + y^2 <= n, as 6 N_{n,0,0,1,3} + 1.
std::int64_t eisenstein_count(std::int64_t n);

/// Representations n = x^2 + xy + y^2, as 6(d_{1,3}(n) - d_{2,3}(n)).
std::int64_t rep_count_x2_xy_y2(std::int64_t n);

/// Representations n = x^2 + 2y^2, as 2(d_{1,8} + d_{3,8} - d_{5,8} - d_{7,8}).
std::int64_t rep_count_x2_2y2(std::int64_t n);

/// Lattice points in x^2 + 2y^2 <= n. n in {0, 1, 2, 5} are tabulated; the
/// shifted-sequence identity covers the rest.
std::int64_t z_sqrt_minus2_count(std::int64_t n);

/// Count for a family by the chosen method.
LatticeCount count_lattice(LatticeFamily family, std::int64_t n, CountMethod method);

QuadraticForm form_of(LatticeFamily family);

}  // namespace floorlat
