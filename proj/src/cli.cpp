#include "floorlat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "floorlat/asymptotics.hpp"
#include "floorlat/divisor_lattice.hpp"
#include "floorlat/floor_sequences.hpp"
#include "floorlat/output.hpp"
#include "floorlat/rational.hpp"

namespace floorlat {

namespace {

struct Params {
  std::int64_t n = 0;
  std::int64_t n_max = 0;
  std::string alpha = "0";
  std::string nu = "0";
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::string form;
  std::int64_t a = 0, b = 0, c = 0;
  double tol = 1e-11;
  std::string suite = "all";
  std::int64_t cap = 1000;
  std::string format = "csv";
  std::string out_path;
};

struct Outcome {
  OutputRecord record;
  int exit_code = kExitOk;
};

std::string num(std::int64_t v) { return std::to_string(v); }

Outcome run_seq(const Params& p) {
  SequenceSpec spec(p.n, Rational::parse(p.alpha), Rational::parse(p.nu));
  Outcome o;
  o.record.inputs = {{"n", num(spec.n)}, {"alpha", spec.alpha.to_string()}, {"nu", spec.nu.to_string()}};
  o.record.columns = {"k", "term"};
  const auto terms = sequence_terms(spec);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    o.record.rows.push_back({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(terms[i].get_si())});
  }
  return o;
}

Outcome run_count(const Params& p) {
  SequenceSpec spec(p.n, Rational::parse(p.alpha), Rational::parse(p.nu));
  CongruenceClass cls(p.r, p.m);
  const auto count = (cls.m >= 2 && spec.admits_floor_sums()) ? count_via_floor_sums(spec, cls)
                                                              : count_direct(spec, cls);
  Outcome o;
  o.record.inputs = {{"n", num(spec.n)},
                     {"alpha", spec.alpha.to_string()},
                     {"nu", spec.nu.to_string()},
                     {"r", num(cls.r)},
                     {"m", num(cls.m)}};
  o.record.columns = {"n", "r", "m", "count"};
  o.record.rows.push_back({spec.n, cls.r, cls.m, count});
  return o;
}

Outcome run_fcr(const Params& p) {
  if (p.n_max < 1) throw PreconditionError("n_max must be >= 1, got " + num(p.n_max));
  Outcome o;
  o.record.inputs = {{"n_max", num(p.n_max)}};
  o.record.columns = {"n", "F", "C", "R"};
  for (std::int64_t n = 1; n <= p.n_max; ++n) o.record.rows.push_back({n, f_seq(n), c_seq(n), r_seq(n)});
  return o;
}

Outcome run_slope(const Params& p) {
  const auto alpha = Rational::parse(p.alpha);
  require_unit_interval(alpha, "alpha");
  SlopeQuery query(alpha, p.r, p.m);
  const auto quad = slope(query, SlopeMethod::quadrature);
  const auto series = slope(query, SlopeMethod::series);
  Outcome o;
  o.record.inputs = {{"alpha", alpha.to_string()}, {"r", num(p.r)}, {"m", num(p.m)}};
  o.record.columns = {"r", "m", "slope", "slope_series", "abs_error_estimate"};
  o.record.rows.push_back({p.r, p.m, quad.value, series.value, quad.abs_error_estimate});
  return o;
}

Outcome run_table(const Params& p) {
  const auto alpha = Rational::parse(p.alpha);
  require_unit_interval(alpha, "alpha");
  if (p.m < 1) throw PreconditionError("m must be >= 1, got " + num(p.m));
  Outcome o;
  o.record.inputs = {{"alpha", alpha.to_string()}, {"m_max", num(p.m)}};
  o.record.columns = {"r", "m", "slope"};
  for (const auto& row : slope_table(alpha, p.m)) o.record.rows.push_back({row.r, row.m, row.slope});
  return o;
}

Outcome run_alpha0(const Params& p) {
  Bracket last{0.0, 1.0};
  std::int64_t steps = 0;
  const double alpha0 = find_alpha0(p.tol, [&](const Bracket& b) {
    last = b;
    ++steps;
  });
  Outcome o;
  o.record.inputs = {{"tol", format_number(p.tol)}};
  o.record.columns = {"alpha0", "f_alpha0", "lo", "hi", "f_lo", "f_hi", "steps"};
  o.record.rows.push_back(
      {alpha0, parity_f(alpha0), last.lo, last.hi, parity_f(last.lo), parity_f(last.hi), steps});
  return o;
}

Outcome run_lattice(const Params& p, bool have_form, bool have_abc, bool have_n, bool have_n_max) {
  if (have_form == have_abc) throw PreconditionError("lattice needs either --form or all of --a --b --c");
  if (have_n == have_n_max) throw PreconditionError("lattice needs exactly one of --n or --n-max");
  const std::int64_t lo = have_n ? p.n : 0;
  const std::int64_t hi = have_n ? p.n : p.n_max;
  if (lo < 0 || hi < 0) throw PreconditionError("n must be >= 0");

  Outcome o;
  o.record.columns = {"n", "count"};
  if (have_form) {
    const auto family = parse_lattice_family(p.form);
    o.record.inputs = {{"form", std::string(to_string(family))}, {"method", "formula"}};
    for (std::int64_t n = lo; n <= hi; ++n) {
      o.record.rows.push_back({n, count_lattice(family, n, CountMethod::formula).count});
    }
  } else {
    QuadraticForm form(p.a, p.b, p.c);
    o.record.inputs = {{"a", num(form.a)}, {"b", num(form.b)}, {"c", num(form.c)}, {"method", "oracle"}};
    for (std::int64_t n = lo; n <= hi; ++n) o.record.rows.push_back({n, enumerate_form_count(form, n)});
  }
  o.record.inputs.emplace_back(have_n ? "n" : "n_max", num(hi));
  return o;
}

Outcome run_verify_cmd(const Params& p, const CliHooks& hooks, std::ostream& err) {
  const auto suite = parse_verify_suite(p.suite);
  const auto outcomes = run_verify(suite, p.cap, hooks.extra_checks);
  Outcome o;
  o.record.inputs = {{"suite", std::string(to_string(suite))}, {"cap", num(p.cap)}};
  o.record.columns = {"check", "passed", "instances"};
  for (const auto& outcome : outcomes) {
    o.record.rows.push_back({outcome.name, std::int64_t{outcome.passed ? 1 : 0}, outcome.instances});
    if (!outcome.passed) {
      err << "FAIL " << outcome.name << ": " << outcome.counterexample << '\n';
      o.exit_code = kExitVerifyFailed;
    }
  }
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"Congruence counts in shifted floor sequences and lattice-point counts", "floorlat"};
  app.require_subcommand(1);
  Params p;

  auto common = [&p](CLI::App* sub) {
    sub->add_option("--format", p.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", p.out_path, "write output here instead of stdout");
  };
  auto shift_options = [&p](CLI::App* sub) {
    sub->add_option("--alpha", p.alpha, "shift, as p/q or an exact decimal");
    sub->add_option("--nu", p.nu, "offset, as p/q or an exact decimal");
  };

  auto* seq = app.add_subcommand("seq", "terms floor((n-nu)/k + alpha), k = 1..n");
  seq->add_option("--n", p.n, "sequence length")->required();
  shift_options(seq);
  common(seq);

  auto* count = app.add_subcommand("count", "terms congruent to r mod m");
  count->add_option("--n", p.n, "sequence length")->required();
  shift_options(count);
  count->add_option("--r", p.r, "residue")->required();
  count->add_option("--m", p.m, "modulus")->required();
  common(count);

  auto* fcr = app.add_subcommand("fcr", "F_n, C_n, R_n for n = 1..n_max");
  fcr->add_option("--n-max", p.n_max)->required();
  common(fcr);

  auto* slope_cmd = app.add_subcommand("slope", "limiting density of class r mod m");
  slope_cmd->add_option("--alpha", p.alpha);
  slope_cmd->add_option("--r", p.r)->required();
  slope_cmd->add_option("--m", p.m)->required();
  common(slope_cmd);

  auto* table = app.add_subcommand("table", "densities for 1 <= r <= m <= m_max");
  table->add_option("--alpha", p.alpha);
  table->add_option("--m", p.m, "largest modulus")->required();
  common(table);

  auto* alpha0 = app.add_subcommand("alpha0", "shift that balances odd and even terms");
  alpha0->add_option("--tol", p.tol)->check(CLI::PositiveNumber);
  common(alpha0);

  auto* lattice = app.add_subcommand("lattice", "lattice points with Q(x, y) <= n");
  auto* form_opt = lattice->add_option("--form", p.form, "circle, eisenstein or z2");
  auto* a_opt = lattice->add_option("--a", p.a);
  auto* b_opt = lattice->add_option("--b", p.b);
  auto* c_opt = lattice->add_option("--c", p.c);
  auto* n_opt = lattice->add_option("--n", p.n);
  auto* n_max_opt = lattice->add_option("--n-max", p.n_max);
  common(lattice);

  auto* verify = app.add_subcommand("verify", "formula-vs-oracle sweeps");
  verify->add_option("--suite", p.suite, "floor_sums, lattice, asymptotics or all");
  verify->add_option("--cap", p.cap, "largest n swept (>= 10)");
  common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  Outcome outcome;
  try {
    if (seq->parsed()) {
      outcome = run_seq(p);
    } else if (count->parsed()) {
      outcome = run_count(p);
    } else if (fcr->parsed()) {
      outcome = run_fcr(p);
    } else if (slope_cmd->parsed()) {
      outcome = run_slope(p);
    } else if (table->parsed()) {
      outcome = run_table(p);
    } else if (alpha0->parsed()) {
      outcome = run_alpha0(p);
    } else if (lattice->parsed()) {
      const bool have_abc = a_opt->count() || b_opt->count() || c_opt->count();
      if (have_abc && !(a_opt->count() && b_opt->count() && c_opt->count())) {
        throw PreconditionError("raw forms need all of --a --b --c");
      }
      outcome = run_lattice(p, form_opt->count() > 0, have_abc, n_opt->count() > 0, n_max_opt->count() > 0);
    } else {
      outcome = run_verify_cmd(p, hooks, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  const auto text = render(outcome.record, parse_output_format(p.format));
  if (p.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(p.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << p.out_path << '\n';
      return kExitBadInput;
    }
  }
  return outcome.exit_code;
}

}  // namespace floorlat
