#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "adic/dyadic_rational.hpp"
#include "adic/error.hpp"
#include "adic/ep_seq.hpp"
#include "adic/morse.hpp"
#include "adic/morse_arith.hpp"
#include "adic/solenoid.hpp"
#include "adic/substitution.hpp"
#include "adic/verify.hpp"

namespace adic::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "plain";
  std::uint64_t seed = 42;
  bool extend = false;

  bool json_lines() const { return format == "json-lines"; }
  Extension ext() const { return extend ? Extension::on : Extension::off; }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string signed_str(const BigInt& v) { return (v > 0 ? "+" : "") + v.str(); }

std::string bit_str(Bit b) { return b ? "1" : "0"; }

// --- one-sided maps -------------------------------------------------------

struct StepOptions {
  std::string point;
  std::string map = "morse";
  std::size_t count = 1;
  bool inverse = false;
  int x0 = -1;  // missing digit for inverse diff/shift
};

std::function<EpSeq(const EpSeq&)> one_sided_map(const StepOptions& o, Extension ext) {
  if (o.map == "morse") {
    if (o.inverse) return [ext](const EpSeq& x) { return morse_predecessor(x, ext); };
    return [ext](const EpSeq& x) { return morse_successor(x, ext); };
  }
  if (o.map == "odometer") {
    if (o.inverse) return [](const EpSeq& x) { return subtract_one(x); };
    return [](const EpSeq& x) { return add_one(x); };
  }
  if (o.map == "double") {
    if (o.inverse) {
      return [](const EpSeq& x) {
        if (x.digit(0) != 0) throw Error(ErrorKind::invalid_argument, x.to_string() + " is not divisible by 2");
        return shift_drop(x);
      };
    }
    return [](const EpSeq& x) { return doubled(x); };
  }
  if (o.map == "diff" || o.map == "shift") {
    if (!o.inverse) {
      if (o.map == "diff") return [](const EpSeq& x) { return differentiate(x); };
      return [](const EpSeq& x) { return shift_drop(x); };
    }
    if (o.x0 < 0) throw UsageError("--inverse " + o.map + " needs the missing digit via --x0");
    const auto b = static_cast<Bit>(o.x0);
    if (o.map == "diff") return [b](const EpSeq& y) { return integrate(y, b); };
    return [b](const EpSeq& y) {
      const Bit head[] = {b};
      return y.prepend(head);
    };
  }
  throw UsageError("unknown map '" + o.map + "' (morse, odometer, diff, shift, double)");
}

void print_point(std::ostream& out, const Globals& g, const EpSeq& x, std::optional<std::size_t> step) {
  const std::string value = to_rational(x).to_string();
  if (g.json_lines()) {
    json j;
    if (step) j["step"] = *step;
    j["point"] = x.to_string();
    j["value"] = value;
    out << j.dump() << '\n';
  } else {
    if (step) out << *step << '\t';
    out << x.to_string() << " = " << value << '\n';
  }
}

int cmd_step(const Globals& g, const StepOptions& o, bool print_orbit, std::ostream& out) {
  EpSeq x = parse_point(o.point);
  const auto f = one_sided_map(o, g.ext());
  if (print_orbit) print_point(out, g, x, 0);
  for (std::size_t i = 1; i <= o.count; ++i) {
    x = f(x);
    if (print_orbit) print_point(out, g, x, i);
  }
  if (!print_orbit) print_point(out, g, x, std::nullopt);
  return success;
}

// --- tables and words -----------------------------------------------------

int cmd_tm(const Globals& g, std::size_t length, bool check_parity, std::ostream& out) {
  const Word u = thue_morse_prefix(length);
  std::size_t mismatches = 0;
  if (check_parity) {
    for (std::size_t n = 0; n < length; ++n) mismatches += u[n] != thue_morse_digit(n) ? 1 : 0;
  }
  if (g.json_lines()) {
    json j{{"length", length}, {"prefix", u.to_string()}};
    if (check_parity) j["parity_mismatches"] = mismatches;
    out << j.dump() << '\n';
  } else {
    out << u.to_string() << '\n';
    if (check_parity) out << "parity mismatches: " << mismatches << '\n';
  }
  return mismatches == 0 ? success : verification_failure;
}

int cmd_table(const Globals& g, const std::string& from_text, const std::string& to_text, std::ostream& out) {
  const BigInt from(from_text);
  const BigInt to(to_text);
  if (from > to) throw UsageError("table needs from <= to");
  if (!g.json_lines()) out << "n\tM(n)\tr(n)\tcase\ttheta(n)\tphi(n)\n";
  for (BigInt n = from; n <= to; ++n) {
    const EpSeq x = from_integer(n);
    const CaseTag c = classify(x);
    const BigInt m = morse_int(n);
    const BigInt t = theta(x);
    const Bit cocycle = phi(differentiate(x));
    const std::string which = c.pair_value == 0 ? "i" : "ii";
    if (g.json_lines()) {
      json j{{"n", n.str()},       {"M", m.str()},           {"r", c.r},
             {"case", which},      {"theta", signed_str(t)}, {"phi", cocycle}};
      out << j.dump() << '\n';
    } else {
      out << n << '\t' << m << '\t' << c.r << '\t' << which << '\t' << signed_str(t) << '\t'
          << bit_str(cocycle) << '\n';
    }
  }
  return success;
}

int cmd_code(const Globals& g, const std::string& point, std::int64_t lo, std::int64_t hi, std::ostream& out) {
  const EpSeq x = parse_point(point);
  const CodingWindow w = coding(x, lo, hi, g.ext());
  if (g.json_lines()) {
    out << json{{"point", x.to_string()}, {"lo", lo}, {"hi", hi}, {"window", w.to_string()}}.dump() << '\n';
  } else {
    out << w.to_string() << '\n';
  }
  return success;
}

int cmd_factor(const Globals& g, const std::string& word, std::size_t window, std::ostream& out) {
  const Word w = Word::parse(word);
  const std::size_t used = window == 0 ? default_factor_window(w.size()) : window;
  const bool found = is_factor(w, used);
  if (g.json_lines()) {
    out << json{{"word", w.to_string()}, {"factor", found}, {"window", used}}.dump() << '\n';
  } else {
    out << (found ? "true" : "false") << '\n';
  }
  return success;
}

// --- solenoid -------------------------------------------------------------

struct SolenoidOptions {
  std::string point;
  std::string map = "morse";
  std::size_t count = 1;
  bool inverse = false;
  std::int64_t index = 0;
  std::string by = "1";
};

int cmd_solenoid_step(const Globals& g, const SolenoidOptions& o, std::ostream& out) {
  BiSeq x = BiSeq::parse(o.point);
  std::function<BiSeq(const BiSeq&)> f;
  const Extension ext = g.ext();
  const std::int64_t i = o.index;
  if (o.map == "morse") {
    if (o.inverse) f = [=](const BiSeq& p) { return m_family_inverse(i, p, ext); };
    else f = [=](const BiSeq& p) { return m_family(i, p, ext); };
  } else if (o.map == "odometer") {
    if (o.inverse) f = [=](const BiSeq& p) { return s_hat(t_hat_inverse(s_hat(p, -i)), i); };
    else f = [=](const BiSeq& p) { return t_family(i, p); };
  } else if (o.map == "shift") {
    const std::int64_t k = o.inverse ? -1 : 1;
    f = [=](const BiSeq& p) { return s_hat(p, k); };
  } else if (o.map == "diff") {
    if (o.inverse) throw UsageError("diff has no inverse on two-sided sequences (it is 2-to-1)");
    f = [](const BiSeq& p) { return d_hat(p); };
  } else if (o.map == "translate") {
    DyadicRational q = DyadicRational::parse(o.by);
    if (o.inverse) q = -q;
    f = [q](const BiSeq& p) { return q2_translate(q, p); };
  } else {
    throw UsageError("unknown map '" + o.map + "' (morse, odometer, shift, diff, translate)");
  }
  for (std::size_t n = 0; n < o.count; ++n) x = f(x);
  const SolenoidCoord c = pi(x);
  if (g.json_lines()) {
    out << json{{"point", x.to_string()}, {"y", c.y.to_string()}, {"lambda", c.lambda.str()}}.dump() << '\n';
  } else {
    out << x.to_string() << "  y=" << c.y.to_string() << " lambda=" << c.lambda << '\n';
  }
  return success;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, std::size_t samples, std::ostream& out,
               std::ostream& err) {
  const SuiteReport r = run_suite(suite, samples, g.seed);
  if (g.json_lines()) {
    json failures = json::array();
    for (const Failure& f : r.failures) {
      failures.push_back({{"case_id", f.case_id}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    }
    json excluded = json::array();
    for (const Exclusion& e : r.excluded) excluded.push_back({{"label", e.label}, {"count", e.count}});
    out << json{{"suite", r.suite}, {"cases", r.cases}, {"failures", failures},
                {"excluded", excluded}, {"seed", r.seed}}.dump()
        << '\n';
  } else {
    out << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size()
        << " failures (seed " << r.seed << ")\n";
    for (const Failure& f : r.failures) {
      out << "FAIL " << f.case_id << " input=" << f.input << " expected=" << f.expected << " got=" << f.got
          << '\n';
    }
    for (const Exclusion& e : r.excluded) out << "excluded " << e.label << ": " << e.count << '\n';
  }
  // Timing goes to the diagnostic stream so reports stay byte-identical.
  err << "wall time: " << std::fixed << std::setprecision(3) << r.wall_time << " s\n";
  return r.ok() ? success : verification_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Morse adic transformation, odometer, and solenoid calculator", "adic"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json-lines"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_flag("--extend-at-max", g.extend,
               "Extend M to (01) -> (1), (10) -> (0) and M^-1 to the minimal points");

  std::function<int()> action;

  auto* tm = app.add_subcommand("tm", "Thue-Morse prefix");
  std::size_t tm_length = 0;
  bool tm_check = false;
  tm->add_option("length", tm_length, "Number of symbols")->required();
  tm->add_flag("--check-parity", tm_check, "Cross-check against the binary digit-sum parity");
  tm->callback([&] { action = [&] { return cmd_tm(g, tm_length, tm_check, out); }; });

  StepOptions step_opts;
  auto add_step_options = [&](CLI::App* sub) {
    sub->add_option("point", step_opts.point, "Sequence literal, integer, or p/q")->required();
    sub->add_option("map", step_opts.map, "morse, odometer, diff, shift, double")->capture_default_str();
    sub->add_option("-n,--count", step_opts.count, "Number of iterations")->capture_default_str();
    sub->add_flag("--inverse", step_opts.inverse, "Apply the inverse map");
    sub->add_option("--x0", step_opts.x0, "Missing digit for --inverse diff/shift")->check(CLI::Range(0, 1));
  };
  auto* step = app.add_subcommand("step", "Apply a map to a point");
  add_step_options(step);
  step->callback([&] { action = [&] { return cmd_step(g, step_opts, false, out); }; });
  auto* orbit = app.add_subcommand("orbit", "Print successive iterates of a map");
  add_step_options(orbit);
  orbit->callback([&] { action = [&] { return cmd_step(g, step_opts, true, out); }; });

  auto* table = app.add_subcommand("table", "Morse arithmetic table: n, M(n), r(n), case, theta(n), phi(n)");
  std::string table_from;
  std::string table_to;
  table->add_option("from", table_from)->required();
  table->add_option("to", table_to)->required();
  table->callback([&] { action = [&] { return cmd_table(g, table_from, table_to, out); }; });

  auto* code = app.add_subcommand("code", "Coding window of a point along its M-orbit");
  std::string code_point;
  std::int64_t code_lo = 0;
  std::int64_t code_hi = 0;
  code->add_option("point", code_point)->required();
  code->add_option("lo", code_lo)->required();
  code->add_option("hi", code_hi)->required();
  code->callback([&] { action = [&] { return cmd_code(g, code_point, code_lo, code_hi, out); }; });

  auto* factor = app.add_subcommand("factor", "Is a word a factor of the Thue-Morse sequence?");
  std::string factor_word;
  std::size_t factor_window = 0;
  factor->add_option("word", factor_word)->required();
  factor->add_option("--window", factor_window, "Prefix length to search (default 8|w|+16)");
  factor->callback([&] { action = [&] { return cmd_factor(g, factor_word, factor_window, out); }; });

  auto* sol = app.add_subcommand("solenoid-step", "Apply a map to a two-sided sequence");
  SolenoidOptions sol_opts;
  sol->add_option("point", sol_opts.point, "Two-sided literal (p)abc.xyz(q)")->required();
  sol->add_option("map", sol_opts.map, "morse, odometer, shift, diff, translate")->capture_default_str();
  sol->add_option("-n,--count", sol_opts.count)->capture_default_str();
  sol->add_flag("--inverse", sol_opts.inverse);
  sol->add_option("-i,--index", sol_opts.index, "Family index i for M_i, T_i")->capture_default_str();
  sol->add_option("--by", sol_opts.by, "Dyadic rational for translate")->capture_default_str();
  sol->callback([&] { action = [&] { return cmd_solenoid_step(g, sol_opts, out); }; });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::size_t samples = 1000;
  verify->add_option("suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--samples", samples, "Random points per suite")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(g, suite, samples, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::parse:
      case ErrorKind::even_denominator:
      case ErrorKind::not_dyadic:
      case ErrorKind::invalid_argument:
        return usage_error;
      default:
        return domain_error;
    }
  } catch (const std::runtime_error& e) {
    // BigInt construction from a malformed decimal string lands here.
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace adic::cli
