#include "adic/verify.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "adic/error.hpp"
#include "adic/morse.hpp"
#include "adic/morse_arith.hpp"
#include "adic/random.hpp"
#include "adic/solenoid.hpp"
#include "adic/substitution.hpp"

namespace adic {

namespace {

constexpr std::int64_t kWindow = std::int64_t{1} << 12;

class Recorder {
 public:
  Recorder(SuiteReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  /// Runs `body`, which returns std::nullopt on success or (expected, got).
  /// Library errors thrown by the body count as failures.
  template <class Body>
  void check(const std::string& name, const std::string& input, Body&& body) {
    ++report_.cases;
    const std::size_t index = counters_[name]++;
    std::optional<std::pair<std::string, std::string>> bad;
    try {
      bad = body();
    } catch (const Error& e) {
      bad = std::make_pair(std::string("no error"), std::string(to_string(e.kind())) + ": " + e.what());
    }
    if (bad) {
      report_.failures.push_back({suite_ + "/" + name + "/" + std::to_string(index), input,
                                  std::move(bad->first), std::move(bad->second)});
    }
  }

  void exclude(const std::string& label) { ++exclusions_[suite_ + "/" + label]; }

  void flush() {
    for (auto& [label, count] : exclusions_) report_.excluded.push_back({label, count});
    exclusions_.clear();
  }

 private:
  SuiteReport& report_;
  std::string suite_;
  std::map<std::string, std::size_t> counters_;
  std::map<std::string, std::size_t> exclusions_;
};

using Outcome = std::optional<std::pair<std::string, std::string>>;

template <class T>
Outcome same(const T& expected, const T& got) {
  if (expected == got) return std::nullopt;
  return std::make_pair(expected.to_string(), got.to_string());
}

Outcome same_int(const BigInt& expected, const BigInt& got) {
  if (expected == got) return std::nullopt;
  return std::make_pair(expected.str(), got.str());
}

Outcome holds(bool ok, const char* what) {
  if (ok) return std::nullopt;
  return std::make_pair(std::string(what), std::string("violated"));
}

std::vector<EpSeq> diagram_points(std::size_t samples, Rng& rng) {
  std::vector<EpSeq> pts;
  pts.reserve(static_cast<std::size_t>(2 * kWindow) + samples + 4);
  for (std::int64_t n = -kWindow; n < kWindow; ++n) pts.push_back(from_integer(n));
  for (std::size_t i = 0; i < samples; ++i) pts.push_back(random_ep_seq(rng));
  pts.push_back(EpSeq::parse("(01)"));
  pts.push_back(EpSeq::parse("(10)"));
  return pts;
}

void run_diagrams(SuiteReport& report, std::size_t samples, Rng& rng) {
  Recorder rec(report, "diagrams");
  const auto pts = diagram_points(samples, rng);
  constexpr auto on = Extension::on;

  for (const EpSeq& x : pts) {
    const std::string in = x.to_string();
    rec.check("D_flip", in, [&] { return same(differentiate(x), differentiate(flip(x))); });
    rec.check("integrate_two_preimages", in, [&]() -> Outcome {
      const EpSeq dx = differentiate(x);
      if (auto o = same(x, integrate(dx, x.digit(0)))) return o;
      return same(flip(x), integrate(dx, static_cast<Bit>(x.digit(0) ^ 1)));
    });
    rec.check("rational_round_trip", in, [&] {
      const OddFraction r = to_rational(x);
      return same(x, from_rational(r.num, r.den));
    });
    rec.check("odometer_adds_one", in, [&]() -> Outcome {
      const OddFraction r = to_rational(x);
      const OddFraction s = to_rational(add_one(x));
      if (s.num * r.den != (r.num + r.den) * s.den) return std::make_pair(r.to_string() + " + 1", s.to_string());
      return same(x, subtract_one(add_one(x)));
    });
    rec.check("shift_drop_doubled", in, [&] { return same(x, shift_drop(doubled(x))); });
    rec.check("TD_eq_DM", in, [&] {
      return same(add_one(differentiate(x)), differentiate(morse_successor(x, on)));
    });
    rec.check("M_flip", in, [&] { return same(flip(morse_successor(x, on)), morse_successor(flip(x), on)); });
    rec.check("M_eq_FinvTphiF", in, [&] {
      return same(morse_successor(x, on), f_inv(skew_step(f_map(x))));
    });
    rec.check("TS_eq_ST2", in, [&] { return same(shift_drop(add_one(add_one(x))), add_one(shift_drop(x))); });
    rec.check("cocycle_parity", in, [&]() -> Outcome {
      const Bit moved = morse_successor(x, on).digit(0) ^ x.digit(0);
      return holds(phi(differentiate(x)) == moved, "phi(Dx) == M(x)_0 xor x_0");
    });
    if (!is_max(x)) {
      rec.check("Minv_M", in, [&] { return same(x, morse_predecessor(morse_successor(x))); });
      rec.check("M_is_successor", in, [&] {
        return holds(compare(x, morse_successor(x)) == Ordering::less, "x < M(x)");
      });
    }
    if (!is_min(x)) {
      rec.check("M_Minv", in, [&] { return same(x, morse_successor(morse_predecessor(x))); });
    }
    if (is_eventually_alternating(x)) {
      rec.exclude("MS_eq_SM2: eventually alternating");
    } else {
      rec.check("MS_eq_SM2", in, [&] {
        return same(shift_drop(morse_successor(morse_successor(x))), morse_successor(shift_drop(x)));
      });
    }
  }

  for (unsigned m = 1; m <= 16; ++m) {
    rec.check("cylinder_M", "m=" + std::to_string(m), [&]() -> Outcome {
      const CylinderCheck c = morse_cylinder_check(m);
      if (c.ok()) return std::nullopt;
      return std::make_pair(std::string("bijective prefix map"), c.detail);
    });
  }
  rec.flush();
}

void run_arithmetic(SuiteReport& report, std::size_t samples, Rng& rng) {
  Recorder rec(report, "arithmetic");

  static const int table[16] = {1, 3, 7, 2, 5, 15, 4, 6, 9, 11, 31, 10, 13, 8, 12, 14};
  for (int n = 0; n < 16; ++n) {
    rec.check("table_fixture", std::to_string(n), [&] { return same_int(table[n], morse_int(n)); });
  }

  const std::int64_t big = std::int64_t{1} << 16;
  for (std::int64_t n = -big; n <= big; ++n) {
    rec.check("morse_int_vs_bit_rule", std::to_string(n), [&] {
      return same_int(to_rational(morse_successor(from_integer(n))).num, morse_int(n));
    });
  }

  for (std::int64_t n = 0; n < big; ++n) {
    rec.check("residue_congruence", std::to_string(n), [&]() -> Outcome {
      const CaseTag bits = classify(from_integer(n));
      const CaseTag residue = residue_case(n);
      if (!(bits == residue)) {
        return std::make_pair("r=" + std::to_string(bits.r) + " case=" + std::to_string(bits.pair_value),
                              "r=" + std::to_string(residue.r) + " case=" + std::to_string(residue.pair_value));
      }
      BigInt modulus = BigInt(1) << bits.r;
      const BigInt want = bits.pair_value == 0 ? a_of(bits.r - 1) : BigInt(modulus / 2 + a_of(bits.r));
      return same_int(want, BigInt(n) % modulus);
    });
  }

  std::set<BigInt> image;
  bool hits_excluded = false;
  for (std::int64_t n = -kWindow; n < kWindow; ++n) {
    BigInt m = morse_int(n);
    hits_excluded = hits_excluded || m == 0 || m == -1;
    image.insert(std::move(m));
  }
  rec.check("injective_window", "[-2^12, 2^12)", [&] {
    return holds(image.size() == static_cast<std::size_t>(2 * kWindow), "injective");
  });
  rec.check("misses_0_and_minus1", "[-2^12, 2^12)", [&] { return holds(!hits_excluded, "0, -1 not attained"); });

  for (std::int64_t n = 1; n <= kWindow; ++n) {
    rec.check("flip_law", std::to_string(n), [&] { return same_int(-morse_int(n - 1) - 1, morse_int(-n)); });
  }

  for (unsigned r = 1; r <= 64; ++r) {
    rec.check("a_identity", std::to_string(r), [&] {
      return same_int((BigInt(1) << (r - 1)) - 1, a_of(r - 1) + a_of(r));
    });
  }

  for (unsigned m = 2; m <= 20; ++m) {
    const ThetaLevelCounts c = theta_level_counts(m);
    for (unsigned k = 1; k < m; ++k) {
      rec.check("theta_level_counts", "m=" + std::to_string(m) + " k=" + std::to_string(k), [&] {
        return same_int(BigInt(1) << (m - k), c.counts[k]);
      });
    }
  }

  const std::int64_t tc = std::int64_t{1} << 14;
  for (std::int64_t n = -tc; n <= tc; ++n) {
    rec.check("time_change", std::to_string(n), [&] { return holds(time_change_check(from_integer(n)), "M(x) = x + theta(x)"); });
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const EpSeq x = random_non_max_ep_seq(rng);
    rec.check("time_change", x.to_string(), [&] { return holds(time_change_check(x), "M(x) = x + theta(x)"); });
  }

  for (std::int64_t n = 0; n < tc; ++n) {
    rec.check("cocycle_parity_integers", std::to_string(n), [&] {
      const BigInt diff = morse_int(n) - n;
      const Bit parity = boost::multiprecision::bit_test(boost::multiprecision::abs(diff), 0) ? 1 : 0;
      return holds(phi(differentiate(from_integer(n))) == parity, "phi(Dn) == M(n) - n mod 2");
    });
  }
  rec.flush();
}

void run_solenoid(SuiteReport& report, std::size_t samples, Rng& rng) {
  Recorder rec(report, "solenoid");
  constexpr auto on = Extension::on;

  for (std::size_t s = 0; s < samples; ++s) {
    const BiSeq x = random_bi_seq(rng);
    const std::string in = x.to_string();

    rec.check("eq10_TD_eq_DM", in, [&] { return same(t_hat(d_hat(x)), d_hat(m_hat(x, on))); });
    rec.check("D_hat_flip", in, [&] { return same(d_hat(x), d_hat(flip(x))); });
    rec.check("S_hat_invertible", in, [&] { return same(x, s_hat(s_hat(x, -1), 1)); });
    rec.check("S_hat_pi", in, [&]() -> Outcome {
      const SolenoidCoord before = pi(x);
      const SolenoidCoord after = pi(s_hat(x, 1));
      BigRational twice = 2 * before.lambda;
      if (twice >= 1) twice -= 1;
      const Bit carried[] = {x.digit(-1)};
      const EpSeq y = before.y.prepend(carried);
      if (after.y != y) return std::make_pair(y.to_string(), after.y.to_string());
      if (after.lambda != twice) return std::make_pair(twice.str(), after.lambda.str());
      return std::nullopt;
    });
    rec.check("T_hat_keeps_lambda", in, [&]() -> Outcome {
      if (pi(t_hat(x)).lambda == pi(x).lambda) return std::nullopt;
      return std::make_pair(pi(x).lambda.str(), pi(t_hat(x)).lambda.str());
    });
    rec.check("M_hat_inverse", in, [&] { return same(x, m_hat_inverse(m_hat(x, on), on)); });
    rec.check("M_tilde_through_pi", in, [&]() -> Outcome {
      const SolenoidCoord c = pi(x);
      const SolenoidCoord got = pi(m_hat(x, on));
      BigRational lambda = c.lambda;
      if (phi(differentiate(c.y)) == 1) {
        lambda = 1 - lambda;
        if (lambda == 1) lambda = 0;
      }
      const SolenoidCoord want{morse_successor(c.y, on), lambda};
      if (want == got) return std::nullopt;
      return std::make_pair(want.y.to_string() + " " + want.lambda.str(), got.y.to_string() + " " + got.lambda.str());
    });
    rec.check("restriction_to_Z2", x.right.to_string(), [&]() -> Outcome {
      const BiSeq embedded{EpSeq(), x.right};
      const SolenoidCoord got = pi(m_hat(embedded, on));
      const SolenoidCoord want{morse_successor(x.right, on), 0};
      if (want == got) return std::nullopt;
      return std::make_pair(want.y.to_string(), got.y.to_string() + " " + got.lambda.str());
    });
    rec.check("translate_one_is_T_hat", in, [&] { return same(t_hat(x), q2_translate(DyadicRational(1), x)); });

    for (std::int64_t i = -3; i <= 3; ++i) {
      const std::string tag = "i=" + std::to_string(i) + " " + in;
      rec.check("T_i_squared", tag, [&] { return same(t_family(i + 1, x), t_family(i, t_family(i, x))); });
      rec.check("T_i_translates", tag, [&] {
        const DyadicRational step = i >= 0 ? DyadicRational(BigInt(1) << i) : DyadicRational(1, static_cast<std::uint32_t>(-i));
        return same(q2_translate(step, x), t_family(i, x));
      });
      std::optional<BiSeq> lhs;
      std::optional<BiSeq> rhs;
      try {
        lhs = m_family(i + 1, x);
        rhs = m_family(i, m_family(i, x));
      } catch (const Error& e) {
        if (!e.is_domain_error()) throw;
        rec.exclude("M_i_squared: Max point on the way");
        continue;
      }
      rec.check("M_i_squared", tag, [&] { return same(*lhs, *rhs); });
    }

    const DyadicRational q1 = random_dyadic(rng);
    const DyadicRational q2 = random_dyadic(rng);
    rec.check("translate_additive", q1.to_string() + " " + q2.to_string() + " " + in, [&] {
      return same(q2_translate(q1 + q2, x), q2_translate(q1, q2_translate(q2, x)));
    });
  }

  for (unsigned total = 1; total <= 12; ++total) {
    rec.check("cylinder_M_hat", "total=" + std::to_string(total), [&]() -> Outcome {
      const CylinderCheck c = m_hat_cylinder_check(total);
      if (c.ok()) return std::nullopt;
      return std::make_pair(std::string("bijective prefix map"), c.detail);
    });
  }
  rec.flush();
}

Digits low_bits(std::uint64_t v, unsigned n) {
  Digits d(n);
  for (unsigned i = 0; i < n; ++i) d[i] = static_cast<Bit>((v >> i) & 1U);
  return d;
}

std::uint64_t pack(const EpSeq& x, unsigned n) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < n; ++i) v |= std::uint64_t{x.digit(i)} << i;
  return v;
}

bool has_pair(std::uint64_t v, unsigned n) {
  for (unsigned k = 1; k < n; ++k) {
    if (((v >> (k - 1)) & 1U) == ((v >> k) & 1U)) return true;
  }
  return false;
}

}  // namespace

CylinderCheck morse_cylinder_check(unsigned m) {
  CylinderCheck out;
  const std::uint64_t count = std::uint64_t{1} << m;
  const std::uint64_t all_ones = count - 1;
  std::vector<bool> hit(count, false);
  for (std::uint64_t v = 0; v < count; ++v) {
    if (!has_pair(v, m)) {
      ++out.undetermined;
      continue;
    }
    ++out.determined;
    const Digits head = low_bits(v, m);
    const std::uint64_t a = pack(morse_successor(EpSeq(head, {0})), m);
    const std::uint64_t b = pack(morse_successor(EpSeq(head, {1})), m);
    if (a != b && out.well_defined) {
      out.well_defined = false;
      out.detail = "image of prefix " + std::to_string(v) + " depends on the tail";
    }
    if (hit[a] && out.injective) {
      out.injective = false;
      out.detail = "two prefixes map to " + std::to_string(a);
    }
    hit[a] = true;
    if ((a == 0 || a == all_ones) && out.onto_complement) {
      out.onto_complement = false;
      out.detail = "a constant prefix is in the image";
    }
  }
  if (out.determined != count - 2 && out.onto_complement) {
    out.onto_complement = false;
    out.detail = "expected 2^m - 2 determined prefixes";
  }
  return out;
}

CylinderCheck m_hat_cylinder_check(unsigned total) {
  CylinderCheck out;
  for (unsigned left_len = 0; left_len < total; ++left_len) {
    const unsigned right_len = total - left_len;
    const std::uint64_t left_count = std::uint64_t{1} << left_len;
    const std::uint64_t right_count = std::uint64_t{1} << right_len;
    std::vector<bool> hit(left_count * right_count, false);
    std::size_t images = 0;
    for (std::uint64_t r = 0; r < right_count; ++r) {
      if (!has_pair(r, right_len)) {
        out.undetermined += left_count;
        continue;
      }
      const Digits rhead = low_bits(r, right_len);
      for (std::uint64_t l = 0; l < left_count; ++l) {
        ++out.determined;
        const Digits lhead = low_bits(l, left_len);
        const BiSeq a = m_hat({EpSeq(lhead, {0}), EpSeq(rhead, {1})});
        const BiSeq b = m_hat({EpSeq(lhead, {1}), EpSeq(rhead, {0})});
        const std::uint64_t la = pack(a.left, left_len);
        const std::uint64_t ra = pack(a.right, right_len);
        if ((la != pack(b.left, left_len) || ra != pack(b.right, right_len)) && out.well_defined) {
          out.well_defined = false;
          out.detail = "image of a cylinder depends on the tails";
        }
        const std::uint64_t key = (ra << left_len) | la;
        if (hit[key] && out.injective) {
          out.injective = false;
          out.detail = "two cylinders share an image";
        }
        if (!hit[key]) ++images;
        hit[key] = true;
        if ((ra == 0 || ra == right_count - 1) && out.onto_complement) {
          out.onto_complement = false;
          out.detail = "an image has a constant right prefix";
        }
      }
    }
    if (images != left_count * (right_count - 2) && out.onto_complement) {
      out.onto_complement = false;
      out.detail = "image count differs from the non-constant right prefixes";
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"diagrams", "arithmetic", "solenoid", "all"};
  return names;
}

SuiteReport run_suite(std::string_view suite, std::size_t samples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  // Each suite draws from its own stream so "all" reproduces the single runs.
  if (suite == "diagrams" || suite == "all") {
    Rng rng(seed);
    run_diagrams(report, samples, rng);
  }
  if (suite == "arithmetic" || suite == "all") {
    Rng rng(seed + 1);
    run_arithmetic(report, samples, rng);
  }
  if (suite == "solenoid" || suite == "all") {
    Rng rng(seed + 2);
    run_solenoid(report, samples, rng);
  }
  if (report.cases == 0) {
    throw Error(ErrorKind::invalid_argument, "unknown suite '" + std::string(suite) + "'");
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace adic
