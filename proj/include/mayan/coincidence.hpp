#pragma once

// Derived-constant engine. Everything here is recomputed from the cycle
// registry and the Long Count codec; expected values live only in the
// verification fixtures.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mayan/cycles.hpp"
#include "mayan/long_count.hpp"
#include "mayan/rational.hpp"

namespace mayan {

struct CoincidenceReport {
  std::vector<u64> periods;
  u64 lcm_value = 0;
  /// (period, lcm_value / period) in input order.
  std::vector<std::pair<u64, u64>> multipliers;
};

/// Throws DomainError for an empty list or a zero period.
CoincidenceReport coincide(std::span<const u64> periods);

/// 13 * 73: the Tzolk'in-number and Haab'-prime factors stripped from N.
inline constexpr u64 kTzolkinHaabCore = 13 * 73;

/// lcm of every registry period except the pentalunex.
u64 compute_big_n();

/// Dresden Codex Long Round, decoded from 9.9.16.0.0.
u64 long_round();

struct Eq1Decomposition {
  u64 reduced;   // int(N / 949)
  u64 quotient;  // int(N / 949 / 144000)
  std::vector<u64> parts;  // {remainder term, Tun, Katun, Baktun}
  u64 tzolkin_residue;     // reduced mod 260
  u64 residue_mod_73;      // reduced mod 73
};

Eq1Decomposition eq1_decomposition();

/// value = multiplier * divisor + remainder.
struct Decomposition {
  std::string label;
  u64 value;
  u64 divisor;
  u64 multiplier;
  u64 remainder;
};

/// Long Round divided by 260, 365, 18980, 360, 584, 780 and X0.
std::vector<Decomposition> long_round_decompositions();

struct XultunNumber {
  std::string label;  // "X0" .. "X3"
  LongCount lcc;
  u64 days;
};

struct XultunAnalysis {
  std::array<XultunNumber, 4> numbers;
  u64 common_divisor;            // gcd of the four values
  u64 lcm_365_780;
  std::array<u64, 4> quotients;  // days / common_divisor
  bool x1_is_365_times_3276;
  bool x3_is_x2_plus_twice_x0;
  bool x0_is_lcm_260_365_360;
  u64 lcm_x0_819;            // same day as lcm(x1, 360)
  u64 lcm_x1_360;
  LongCount y_lcc;               // lcm(x0, 819) in Long Count form
  std::vector<Decomposition> x0_divisors;  // by 260, 365, 360, 584, 780
};

XultunAnalysis xultun_analysis();

struct PyramidRow {
  int i;
  std::string name;  // "-" when c_i is not a named Long Count period
  u64 c_i;           // 18 * 20^i
  u64 divisor_sum;   // sum_{n=0}^{6-i} 18 * 20^n
  u64 d_i;           // int(N / 949 / divisor_sum)
};

std::vector<PyramidRow> pyramid_table();

struct TzolkinCoincidenceRow {
  std::string name;
  u64 period;
  CoincidenceReport report;  // over {period, 260}
  u64 over_260;
  u64 over_period;
};

std::vector<TzolkinCoincidenceRow> tzolkin_coincidence_table();

struct LcpCoincidenceRow {
  std::string name;
  u64 days;
  u64 lcm_338;
  u64 lcm_260;
  u64 lcm_234;
  Rational l_over_260;
  Rational l_over_234;
};

/// Winal, Tun, Katun and Baktun against the 338-, 260- and 234-day periods.
std::vector<LcpCoincidenceRow> lcp_coincidence_table();

struct KawilCoincidenceRow {
  std::string name;
  u64 period;
  CoincidenceReport report;  // over {period, 360, 819}
  u64 over_260;
  u64 over_2340;
  u64 over_32760;
};

std::vector<KawilCoincidenceRow> kawil_coincidence_table();

/// A numeric identity checked by evaluating both sides independently.
struct Identity {
  std::string label;
  std::string expression;
  i64 lhs;
  i64 rhs;
  bool holds() const { return lhs == rhs; }
};

std::vector<Identity> kukulkan_identities();

struct NamedLcm {
  u64 a;
  u64 b;
  u64 value;
  std::string label() const { return "lcm_" + std::to_string(a) + "_" + std::to_string(b); }
};

std::vector<NamedLcm> small_cycle_constants();

/// "venus", "lunar_semester_177": lowercase with spaces turned into underscores.
std::string slug(std::string_view name);

}  // namespace mayan
