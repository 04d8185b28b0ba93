#pragma once

// Congruence-class counts in shifted, offset floor sequences.
//
// The sequence for (n, alpha, nu) has k-th term floor((n - nu)/k + alpha),
// k = 1..n. count_direct walks it term by term and is the reference every
// closed-form route is checked against.
//
// The floor-sum routes (threshold_count, count_via_floor_sums,
// count_rational_alpha) need n * alpha >= nu and reject anything else. In
// particular alpha = 0 with nu > 0 never qualifies; only count_direct covers
// that regime.

#include <cstdint>
#include <vector>

#include "floorlat/rational.hpp"

namespace floorlat {

/// One sequence: length n, shift alpha and offset nu, both in [0, 1).
struct SequenceSpec {
  SequenceSpec(std::int64_t n, Rational alpha = Rational(0), Rational nu = Rational(0));

  std::int64_t n;
  Rational alpha;
  Rational nu;

  /// n * alpha >= nu, the hypothesis under which the floor-sum formulas hold.
  bool admits_floor_sums() const;
};

/// Residue class r mod m with the representative taken in [1, m].
struct CongruenceClass {
  /// Any integer r is accepted and reduced into [1, m]; m must be positive.
  CongruenceClass(std::int64_t r, std::int64_t m);

  std::int64_t r;
  std::int64_t m;

  bool contains(const Integer& value) const;
};

/// The n terms of the sequence, in order k = 1..n.
std::vector<Integer> sequence_terms(const SequenceSpec& spec);

/// Number of k in [1, n] whose term lies in the class.
std::int64_t count_direct(const SequenceSpec& spec, const CongruenceClass& cls);

/// Counts for every class mod m in one pass; element r-1 holds class r.
std::vector<std::int64_t> count_all_classes(const SequenceSpec& spec, std::int64_t m);

/// Odd terms among floor(n/k), via the alternating divisor sum. f_seq(0) = 0.
std::int64_t f_seq(std::int64_t n);

/// Odd terms among ceil(n/k), as n - f_seq(n-1).
std::int64_t c_seq(std::int64_t n);

/// Odd terms among n/k rounded to nearest with halves rounded up.
std::int64_t r_seq(std::int64_t n);

/// Same as r_seq but halves round down. Evaluated term by term.
std::int64_t r_seq_round_down(std::int64_t n);

/// Number of terms >= k. Requires n * alpha >= nu.
std::int64_t threshold_count(const SequenceSpec& spec, std::int64_t k);

/// Largest i for which floor((n - nu)/(r + i m - alpha)) can be non-zero,
/// clamped below at 0. Every floor-sum loop runs i = 0..this index.
std::int64_t floor_sum_last_index(const SequenceSpec& spec, const CongruenceClass& cls);

/// Class count from the alternating sum of floor differences. Requires m >= 2
/// and n * alpha >= nu.
std::int64_t count_via_floor_sums(const SequenceSpec& spec, const CongruenceClass& cls);

/// Count of terms congruent to 1 mod m when alpha = p/q, with every quotient
/// scaled through by q. Requires 0 <= p < q, nu in [0, 1) and n p / q >= nu.
std::int64_t count_rational_alpha(std::int64_t n, std::int64_t p, std::int64_t q,
                                  const Rational& nu, std::int64_t m);

}  // namespace floorlat
