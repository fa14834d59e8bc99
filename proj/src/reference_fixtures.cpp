// Expected values for the verification report. These are the reference
// numbers the engine is diffed against; nothing in the engine reads them.

#include <cstdint>
#include <tuple>

#include "mayan/report.hpp"

namespace mayan {

namespace {

using i64 = std::int64_t;

Fixture n(std::string id, i64 v) { return {std::move(id), Rational(v), {}}; }
Fixture q(std::string id, i64 num, i64 den) { return {std::move(id), Rational(num, den), {}}; }
Fixture s(std::string id, std::string v, std::string note = {}) {
  return {std::move(id), std::move(v), std::move(note)};
}

struct CycleRow {
  const char* slug;
  i64 period;
  const char* factorization;
  i64 tz_lcm, tz_over_260, tz_over_period;
  i64 kw_lcm, kw_over_260, kw_over_2340, kw_over_32760;
};

// T2, T4 and T6 share the nine canonical cycles.
constexpr CycleRow kCycleRows[] = {
    {"mercury", 116, "2^2*29", 7540, 29, 65, 950040, 3654, 406, 29},
    {"venus", 584, "2^3*73", 37960, 146, 65, 2391480, 9198, 1022, 73},
    {"earth", 365, "5*73", 18980, 73, 52, 2391480, 9198, 1022, 73},
    {"mars", 780, "2^2*3*5*13", 780, 3, 1, 32760, 126, 14, 1},
    {"jupiter", 399, "3*7*19", 103740, 399, 260, 622440, 2394, 266, 19},
    {"saturn", 378, "2*3^3*7", 49140, 189, 130, 98280, 378, 42, 3},
    {"lunar_semester_177", 177, "3*59", 46020, 177, 260, 1932840, 7434, 826, 59},
    {"lunar_semester_178", 178, "2*89", 23140, 89, 130, 2915640, 11214, 1246, 89},
    {"pentalunex", 148, "2^2*37", 9620, 37, 65, 1212120, 4662, 518, 37},
};

std::vector<Fixture> build() {
  std::vector<Fixture> f;

  f.push_back(n("constants.big_n", 20757814426440));
  f.push_back(s("constants.big_n.factorization", "2^3*3^3*5*7*13*19*29*59*73*89"));
  f.push_back(n("constants.lcm_338_360", 60840));
  f.push_back(n("constants.lcm_338_365", 123370));
  f.push_back(n("constants.lcm_234_365", 85410));
  f.push_back(n("constants.lcm_260_234", 2340));
  f.push_back(n("constants.lcm_260_338", 3380));
  f.push_back(n("constants.lcm_260_360", 4680));
  f.push_back(n("constants.lcm_260_7200", 93600));
  f.push_back(n("constants.lcm_260_144000", 1872000));

  f.push_back(n("eq1.quotient", 151898));
  f.push_back(n("eq1.parts.0", 338));
  f.push_back(n("eq1.parts.1", 360));
  f.push_back(n("eq1.parts.2", 7200));
  f.push_back(n("eq1.parts.3", 144000));
  f.push_back(n("eq1.parts_sum", 151898));
  f.push_back(n("eq1.mod_260", 160));
  f.push_back(n("eq1.mod_73", 49));

  f.push_back(n("long_round.value", 1366560));
  f.push_back(s("long_round.lcc", "9.9.16.0.0"));
  f.push_back(n("long_round.n_mod_lr", 341640));
  f.push_back(n("long_round.gcd_n_lr", 341640));
  constexpr std::pair<const char*, i64> kLongRound[] = {{"tzolkin", 5256}, {"haab", 3744}, {"calendar_round", 72},
                                                        {"tun", 3796},     {"venus", 2340}, {"mars", 1752},
                                                        {"x0", 4}};
  for (auto [label, mult] : kLongRound) {
    f.push_back(n(std::string("long_round.") + label + ".multiplier", mult));
    f.push_back(n(std::string("long_round.") + label + ".remainder", 0));
  }

  // T1: Xultun numbers.
  constexpr std::tuple<const char*, const char*, i64, i64> kXultun[] = {
      {"x0", "2.7.9.0.0", 341640, 6},
      {"x1", "8.6.1.9.0", 1195740, 21},
      {"x2", "12.5.3.3.0", 1765140, 31},
      {"x3", "17.0.1.3.0", 2448420, 43},
  };
  for (auto [key, lcc, days, ratio] : kXultun) {
    const std::string k = std::string("table1.") + key;
    f.push_back(n(k, days));
    f.push_back(s(k + ".lcc", lcc));
    f.push_back(n(k + ".over_gcd", ratio));
  }
  f.push_back(n("table1.gcd", 56940));
  f.push_back(n("table1.lcm_365_780", 56940));
  f.push_back(n("table1.x1_is_365x3276", 1));
  f.push_back(n("table1.x3_is_x2_plus_2x0", 1));
  f.push_back(n("table1.x0_is_lcm_260_365_360", 1));
  f.push_back(n("table1.lcm_x0_819", 2391480));
  f.push_back(n("table1.lcm_x1_360", 2391480));
  f.push_back(s("table1.y.lcc", "16.12.3.0.0"));
  f.push_back(n("table1.x0.per_tzolkin", 1314));
  f.push_back(n("table1.x0.per_haab", 936));
  f.push_back(n("table1.x0.per_tun", 949));
  f.push_back(n("table1.x0.per_venus", 585));
  f.push_back(n("table1.x0.per_mars", 438));

  for (const auto& c : kCycleRows) {
    f.push_back(n(std::string("table2.") + c.slug + ".period", c.period));
    f.push_back(s(std::string("table2.") + c.slug + ".factorization", c.factorization));
  }

  // T3: divisibility pyramid.
  constexpr std::tuple<const char*, i64, i64> kPyramid[] = {
      {"-", 18, 18},
      {"Tun", 360, 360},
      {"Katun", 7200, 7215},
      {"Baktun", 144000, 144304},
      {"Pictun", 2880000, 2886428},
      {"Calabtun", 57600000, 57866020},
      {"Kinchiltun", 1152000000, 1215186420},
  };
  for (std::size_t i = 0; i < std::size(kPyramid); ++i) {
    const auto& [name, c_i, d_i] = kPyramid[i];
    const std::string k = "table3.i" + std::to_string(i);
    f.push_back(s(k + ".name", name));
    f.push_back(n(k + ".c_i", c_i));
    f.push_back(n(k + ".d_i", d_i));
  }

  for (const auto& c : kCycleRows) {
    const std::string k = std::string("table4.") + c.slug;
    f.push_back(n(k + ".lcm", c.tz_lcm));
    f.push_back(n(k + ".over_260", c.tz_over_260));
    f.push_back(n(k + ".over_period", c.tz_over_period));
  }

  // T5: LCPs against 338/260/234. L/234 for the Winal is 14.444... = 130/9.
  constexpr std::tuple<const char*, i64, i64, i64, i64> kLcp[] = {
      {"winal", 3380, 260, 2340, 13},
      {"tun", 60840, 4680, 4680, 234},
      {"katun", 1216800, 93600, 93600, 4680},
      {"baktun", 24336000, 1872000, 1872000, 93600},
  };
  for (auto [name, l, m, nn, l260] : kLcp) {
    const std::string k = std::string("table5.") + name;
    f.push_back(n(k + ".lcm_338", l));
    f.push_back(n(k + ".lcm_260", m));
    f.push_back(n(k + ".lcm_234", nn));
    f.push_back(n(k + ".l_over_260", l260));
  }
  f.push_back(q("table5.winal.l_over_234", 130, 9));
  f.push_back(n("table5.tun.l_over_234", 260));
  f.push_back(n("table5.katun.l_over_234", 5200));
  f.push_back(n("table5.baktun.l_over_234", 104000));

  for (const auto& c : kCycleRows) {
    const std::string k = std::string("table6.") + c.slug;
    f.push_back(n(k + ".lcm", c.kw_lcm));
    f.push_back(n(k + ".over_260", c.kw_over_260));
    f.push_back(n(k + ".over_2340", c.kw_over_2340));
    f.push_back(n(k + ".over_32760", c.kw_over_32760));
  }

  constexpr std::pair<const char*, i64> kKukulkan[] = {
      {"cycle_3276", 3276}, {"stairway_steps", 365}, {"panels", 18980},         {"dresden_1820", 1820},
      {"base_width", 121212}, {"kawil_tun_wheels", 32760}, {"kawil_tun_colors", 32760}};
  for (auto [label, value] : kKukulkan) {
    f.push_back(n(std::string("kukulkan.") + label + ".value", value));
    f.push_back(n(std::string("kukulkan.") + label + ".holds", 1));
  }

  f.push_back(n("calendar_round.length", 18980));
  f.push_back(s("calendar_round.day_0", "4 Ahau 8 Cumku"));
  f.push_back(s("calendar_round.day_1872000", "4 Ahau 3 Kankin"));
  f.push_back(s("calendar_round.day_-4680", "4 Ahau 8 Zip"));
  f.push_back(n("calendar_round.cr_mod_wheel", 260));
  f.push_back(n("calendar_round.origin.tzolkin_index", 160));
  f.push_back(n("calendar_round.origin.haab_index", 49));
  f.push_back(n("calendar_round.origin_plus_wheel.tzolkin_residue", 160));
  f.push_back(n("calendar_round.origin_plus_wheel.haab_residue", 349));

  f.push_back(n("ritual.kawil_tun", 32760));
  f.push_back(n("ritual.kawil_tun.tun_wheels", 7));
  f.push_back(n("ritual.kawil_tun.color_cycles", 10));
  f.push_back(n("ritual.kawil_color_cycle", 3276));
  f.push_back(n("ritual.n_over_kawil_tun_mod_4", 3));
  f.push_back(n("ritual.lords_cycle", 117));
  f.push_back(n("ritual.lords_tzolkin", 2340));
  f.push_back(n("ritual.haab_color_cycle", 1195740));
  f.push_back(s("ritual.station_0.color", "East-Red"));
  f.push_back(s("ritual.station_1.color", "South-Yellow"));
  f.push_back(s("ritual.station_2.color", "West-Black"));
  f.push_back(s("ritual.station_3.color", "North-White"));

  f.push_back(s("correlation.day_0", "-3113-08-11"));
  f.push_back(s("correlation.day_1872000", "2012-12-21"));
  f.push_back(s("correlation.day_1216800", "0219-02-05",
                "convention-sensitive: proleptic Gregorian, not Julian"));
  f.push_back(n("correlation.jdn_1872000", 2456283));
  return f;
}

}  // namespace

const std::vector<Fixture>& reference_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

}  // namespace mayan
