#pragma once

// Formula-vs-oracle sweeps behind the `verify` subcommand.
//
// Each check scans its instances in ascending order and reports the
// smallest one that fails. Range checks are sharded across worker threads
// (FLOORLAT_THREADS sets the count); the reported counterexample does not
// depend on the sharding.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace floorlat {

enum class VerifySuite { floor_sums, lattice, asymptotics, all };

VerifySuite parse_verify_suite(std::string_view name);
std::string_view to_string(VerifySuite suite);

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::int64_t instances = 0;
  std::string counterexample;  // empty when passed
};

struct VerifyCheck {
  std::string name;
  VerifySuite suite;
  std::function<CheckOutcome(std::int64_t cap)> run;
};

/// Every built-in check, grouped by suite in a fixed order.
const std::vector<VerifyCheck>& builtin_checks();

/// Runs the checks of `suite` (all of them for VerifySuite::all) plus any
/// extra checks whose suite matches. cap must be at least 10.
std::vector<CheckOutcome> run_verify(VerifySuite suite, std::int64_t cap,
                                     const std::vector<VerifyCheck>& extra = {});

/// Worker count: FLOORLAT_THREADS when set (at most 256), else the hardware
/// concurrency.
unsigned verify_threads();

struct SweepFailure {
  std::int64_t n;
  std::string detail;
};

/// Evaluates probe(n) for n in [lo, hi]; probe returns a description when n
/// is a counterexample. Returns the smallest one, if any.
std::optional<SweepFailure> sweep(std::int64_t lo, std::int64_t hi,
                                  const std::function<std::optional<std::string>(std::int64_t)>& probe);

}  // namespace floorlat
