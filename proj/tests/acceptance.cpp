// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "floorlat/asymptotics.hpp"
#include "floorlat/divisor_lattice.hpp"
#include "floorlat/floor_sequences.hpp"
#include "floorlat/tolerances.hpp"
#include "floorlat/verify.hpp"

using namespace floorlat;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

template <typename... Parts>
std::string str(const Parts&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  return os.str();
}

Verdict first_twenty() {
  const std::vector<std::int64_t> F = {1, 1, 3, 2, 4, 4, 6, 4, 7, 7, 9, 7, 9, 9, 13, 10, 12, 12, 14, 12};
  const std::vector<std::int64_t> C = {1, 1, 2, 1, 3, 2, 3, 2, 5, 3, 4, 3, 6, 5, 6, 3, 7, 6, 7, 6};
  const std::vector<std::int64_t> R = {1, 1, 2, 2, 4, 3, 4, 4, 6, 7, 6, 5, 9, 8, 9, 9, 10, 10, 11, 12};
  Verdict v;
  int matched = 0;
  for (std::int64_t n = 1; n <= 20; ++n) {
    v.require(f_seq(n) == F[n - 1], str("F_", n));
    v.require(c_seq(n) == C[n - 1], str("C_", n));
    v.require(r_seq(n) == R[n - 1], str("R_", n));
    matched += (f_seq(n) == F[n - 1]) + (c_seq(n) == C[n - 1]) + (r_seq(n) == R[n - 1]);
  }
  if (v.ok) v.note = str(matched, "/60 values");
  return v;
}

Verdict worked_examples() {
  Verdict v;
  v.require(f_seq(17) == 12, "F_17");
  v.require(count_direct(SequenceSpec(7, Rational(1, 2), Rational(1, 2)), {1, 2}) == 5, "N_{7,1/2,1/2,1,2}");
  v.require(circle_count(13) == 45, "C(13)");
  v.require(circle_count(36) == 113, "C(36)");
  v.require(eisenstein_count(30) == 109, "eisenstein(30)");
  v.require(count_direct(SequenceSpec(30), {1, 3}) == 18, "N_{30,0,0,1,3}");
  v.require(z_sqrt_minus2_count(29) == 65, "z2(29)");
  v.require(count_direct(SequenceSpec(8, Rational(3, 4), Rational(3, 4)), {1, 2}) == 4, "N_{8,3/4,3/4,1,2}");
  v.require(count_direct(SequenceSpec(8, Rational(1, 4), Rational(3, 4)), {1, 2}) == 6, "N_{8,1/4,3/4,1,2}");
  const std::vector<std::pair<std::int64_t, std::int64_t>> small = {{0, 1}, {1, 3}, {2, 5}, {4, 11}, {5, 11}};
  for (auto [n, expected] : small) v.require(z_sqrt_minus2_count(n) == expected, str("z2(", n, ")"));
  return v;
}

Verdict oracle_sweeps() {
  Verdict v;
  std::int64_t instances = 0;
  const std::vector<Rational> alphas = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1, 3)};
  const std::vector<Rational> nus = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::int64_t n = 1; n <= 300 && v.ok; ++n) {
    for (const auto& a : alphas) {
      for (const auto& nu : nus) {
        SequenceSpec spec(n, a, nu);
        if (!spec.admits_floor_sums()) continue;
        for (std::int64_t m = 2; m <= 5; ++m) {
          const auto direct = count_all_classes(spec, m);
          for (std::int64_t r = 1; r <= m; ++r, ++instances) {
            v.require(count_via_floor_sums(spec, {r, m}) == direct[r - 1],
                      str("floor sums n=", n, " alpha=", a, " nu=", nu, " r=", r, " m=", m));
          }
        }
      }
    }
  }
  for (std::int64_t n = 0; n <= 5000 && v.ok; ++n) {
    for (auto family : {LatticeFamily::circle, LatticeFamily::eisenstein, LatticeFamily::z_sqrt_minus2}) {
      v.require(count_lattice(family, n, CountMethod::formula).count == enumerate_form_count(form_of(family), n),
                str(to_string(family), " n=", n));
      ++instances;
    }
    v.require(r2(n) == enumerate_form_representations(QuadraticForm::sum_of_squares(), n), str("r2 n=", n));
    if (n >= 1) {
      v.require(rep_count_x2_xy_y2(n) == enumerate_form_representations(QuadraticForm::eisenstein(), n),
                str("x2+xy+y2 reps n=", n));
      v.require(rep_count_x2_2y2(n) == enumerate_form_representations(QuadraticForm::x2_plus_2y2(), n),
                str("x2+2y2 reps n=", n));
    }
    instances += 3;
  }
  if (v.ok) v.note = str(instances, " comparisons");
  return v;
}

Verdict slope_tables() {
  const std::vector<double> shift0 = {1.000000, 0.693147, 0.604600, 0.565986, 0.306853,
                                      0.247006, 0.219412, 0.148394, 0.127161, 0.087441};
  const std::vector<double> shift_half = {1.000000, 0.570796, 0.456206, 0.408623, 0.429204,
                                          0.357594, 0.325323, 0.186201, 0.162173, 0.103881};
  Verdict v;
  double worst = 0;
  const auto t0 = slope_table(Rational(0), 4), th = slope_table(Rational(1, 2), 4);
  v.require(t0.size() == 10 && th.size() == 10, "table size");
  for (std::size_t i = 0; v.ok && i < 10; ++i) {
    worst = std::max({worst, std::abs(t0[i].slope - shift0[i]), std::abs(th[i].slope - shift_half[i])});
    v.require(std::abs(t0[i].slope - shift0[i]) <= tolerances::kSixDecimals, str("alpha=0 r=", t0[i].r, " m=", t0[i].m));
    v.require(std::abs(th[i].slope - shift_half[i]) <= tolerances::kSixDecimals,
              str("alpha=1/2 r=", th[i].r, " m=", th[i].m));
  }
  if (v.ok) v.note = str("20 entries, max deviation ", worst);
  return v;
}

Verdict sequence_limits() {
  Verdict v;
  double worst = 0;
  for (std::int64_t n : {10000, 100000, 1000000}) {
    const double x = static_cast<double>(n), band = tolerances::kSequenceLimit / std::sqrt(x);
    const double ef = std::abs(f_seq(n) / x - std::numbers::ln2);
    const double ec = std::abs(c_seq(n) / x - (1 - std::numbers::ln2));
    const double er = std::abs(r_seq(n) / x - (std::numbers::pi / 2 - 1));
    worst = std::max({worst, ef * std::sqrt(x), ec * std::sqrt(x), er * std::sqrt(x)});
    v.require(ef <= band, str("F n=", n));
    v.require(ec <= band, str("C n=", n));
    v.require(er <= band, str("R n=", n));
  }
  if (v.ok) v.note = str("max |error| * sqrt(n) = ", worst);
  return v;
}

Verdict balanced_shift() {
  Verdict v;
  Bracket last{0, 1};
  const double a0 = find_alpha0(1e-11, [&](const Bracket& b) { last = b; });
  v.require(a0 >= 0.682379227335 && a0 <= 0.682379227345, str("alpha0=", a0));
  v.require(parity_f(last.lo) < 0.5 && parity_f(last.hi) > 0.5, "bracket does not straddle 1/2");
  if (v.ok) v.note = str("alpha0=", a0, " bracket [", last.lo, ", ", last.hi, "]");
  return v;
}

Verdict random_table_rows() {
  Verdict v;
  for (const char* text : {"0.68237922734", "0.68237933734", "0.68237933634"}) {
    const auto alpha = Rational::parse(text);
    if (count_via_floor_sums(SequenceSpec(7015, alpha), {2, 2}) == 3503 &&
        count_via_floor_sums(SequenceSpec(179220, alpha), {2, 2}) == 89632) {
      v.note = str("reproduced with alpha=", text);
      return v;
    }
  }
  v.require(false, "no alpha string reproduces the table");
  return v;
}

Verdict property_suite() {
  Verdict v;
  const auto outcomes = run_verify(VerifySuite::all, 1000);
  for (const auto& o : outcomes) v.require(o.passed, str(o.name, ": ", o.counterexample));
  // The drop for C at n = 2^k is stated as -(k-1), the same as for F. Check it
  // as stated.
  for (std::int64_t k = 2; k <= 14; ++k) {
    const std::int64_t n = std::int64_t{1} << k;
    v.require(f_seq(n) - f_seq(n - 1) == -(k - 1), str("F drop at 2^", k));
    v.require(c_seq(n) - c_seq(n - 1) == -(k - 1),
              str("C drop at 2^", k, " is ", c_seq(n) - c_seq(n - 1), ", stated -(k-1) = ", -(k - 1)));
  }
  if (v.ok) v.note = str(outcomes.size(), " checks");
  return v;
}

Verdict big_count_bands() {
  Verdict v;
  double worst_d = 0, worst_c = 0;
  for (int j = 0; j <= 60; ++j) {
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, j / 10.0)));
    const double x = static_cast<double>(n), root = std::sqrt(x);
    const double dd = std::abs(divisor_summatory(n) - (x * std::log(x) + (2 * std::numbers::egamma - 1) * x)) / root;
    const double dc = std::abs(circle_count(n) - std::numbers::pi * x) / root;
    worst_d = std::max(worst_d, dd);
    worst_c = std::max(worst_c, dc);
    v.require(dd <= tolerances::kDirichlet, str("D n=", n));
    v.require(dc <= tolerances::kGauss, str("C n=", n));
  }
  if (v.ok) v.note = str("max |D-main|/sqrt(n) = ", worst_d, ", max |C-pi n|/sqrt(n) = ", worst_c);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "first-20 table", 1, first_twenty},
      {2, "worked examples", 1, worked_examples},
      {3, "oracle equivalence sweeps", 120, oracle_sweeps},
      {4, "slope tables", 1, slope_tables},
      {5, "F/C/R limits", 60, sequence_limits},
      {6, "alpha0", 1, balanced_shift},
      {7, "random-alpha table rows", 5, random_table_rows},
      {8, "property suite", 120, property_suite},
      {9, "D(n) and C(n) bands", 120, big_count_bands},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = str("exception: ", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > c.budget_s) {
      v.ok = false;
      v.note = str("took ", secs, " s, budget ", c.budget_s, " s");
    }
    failures += !v.ok;
    std::printf("criterion %d %s: %s (%.3f s) %s\n", c.id, v.ok ? "PASS" : "FAIL", c.title, secs, v.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
