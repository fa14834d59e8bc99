#include "mayan/coincidence.hpp"

#include <gtest/gtest.h>

#include "mayan/errors.hpp"
#include "oracles.hpp"

namespace mayan {
namespace {

TEST(Coincide, MultipliersTimesPeriodsEqualLcm) {
  const u64 periods[] = {260, 584};
  const auto r = coincide(periods);
  EXPECT_EQ(r.lcm_value, 37960u);
  ASSERT_EQ(r.multipliers.size(), 2u);
  EXPECT_EQ(r.multipliers[0], (std::pair<u64, u64>{260, 146}));
  EXPECT_EQ(r.multipliers[1], (std::pair<u64, u64>{584, 65}));
  EXPECT_THROW(coincide(std::span<const u64>{}), DomainError);
  const u64 with_zero[] = {5, 0};
  EXPECT_THROW(coincide(with_zero), DomainError);
}

TEST(BigN, ValueFactorsAndLongRound) {
  const u64 n = compute_big_n();
  EXPECT_EQ(n, 20757814426440u);
  EXPECT_EQ(factorize(n).str(), "2^3*3^3*5*7*13*19*29*59*73*89");
  EXPECT_EQ(n % 1366560, 341640u);
  EXPECT_EQ(long_round(), 1366560u);
  EXPECT_EQ(gcd(n, long_round()), 341640u);
}

TEST(Eq1, Decomposition) {
  const auto e = eq1_decomposition();
  EXPECT_EQ(e.quotient, 151898u);
  EXPECT_EQ(e.parts, (std::vector<u64>{338, 360, 7200, 144000}));
  EXPECT_EQ(e.parts[0] + e.parts[1] + e.parts[2] + e.parts[3], e.quotient);
  EXPECT_EQ(e.tzolkin_residue, 160u);
  EXPECT_EQ(e.residue_mod_73, 49u);
  // 160 is 4 Ahau: 4 mod 13 and 0 mod 20.
  EXPECT_EQ(e.tzolkin_residue % 13, 4u);
  EXPECT_EQ(e.tzolkin_residue % 20, 0u);
}

TEST(LongRound, Decompositions) {
  const auto ds = long_round_decompositions();
  ASSERT_EQ(ds.size(), 7u);
  const std::pair<u64, u64> expected[] = {{260, 5256}, {365, 3744}, {18980, 72}, {360, 3796},
                                          {584, 2340}, {780, 1752}, {341640, 4}};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    EXPECT_EQ(ds[i].divisor, expected[i].first);
    EXPECT_EQ(ds[i].multiplier, expected[i].second) << ds[i].label;
    EXPECT_EQ(ds[i].remainder, 0u);
  }
  EXPECT_EQ(1366560u / 1, 1366560u);
}

TEST(Xultun, Analysis) {
  const auto x = xultun_analysis();
  const u64 days[] = {341640, 1195740, 1765140, 2448420};
  const u64 ratios[] = {6, 21, 31, 43};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(x.numbers[i].days, days[i]);
    EXPECT_EQ(x.quotients[i], ratios[i]);
  }
  EXPECT_EQ(format_lc(x.numbers[1].lcc), "8.6.1.9.0");
  EXPECT_EQ(x.common_divisor, 56940u);
  EXPECT_EQ(x.lcm_365_780, 56940u);
  EXPECT_TRUE(x.x1_is_365_times_3276);
  EXPECT_TRUE(x.x3_is_x2_plus_twice_x0);
  EXPECT_TRUE(x.x0_is_lcm_260_365_360);
  EXPECT_EQ(x.lcm_x0_819, 2391480u);
  EXPECT_EQ(x.lcm_x1_360, 2391480u);
  EXPECT_EQ(format_lc(x.y_lcc), "16.12.3.0.0");
  const std::pair<u64, u64> divisors[] = {{260, 1314}, {365, 936}, {360, 949}, {584, 585}, {780, 438}};
  ASSERT_EQ(x.x0_divisors.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(x.x0_divisors[i].divisor, divisors[i].first);
    EXPECT_EQ(x.x0_divisors[i].multiplier, divisors[i].second);
    EXPECT_EQ(x.x0_divisors[i].remainder, 0u);
  }
}

TEST(Pyramid, DivisorSequence) {
  const auto rows = pyramid_table();
  ASSERT_EQ(rows.size(), 7u);
  const u64 d[] = {18, 360, 7215, 144304, 2886428, 57866020, 1215186420};
  const char* names[] = {"-", "Tun", "Katun", "Baktun", "Pictun", "Calabtun", "Kinchiltun"};
  u64 c = 18;
  for (std::size_t i = 0; i < rows.size(); ++i, c *= 20) {
    EXPECT_EQ(rows[i].i, static_cast<int>(i));
    EXPECT_EQ(rows[i].name, names[i]);
    EXPECT_EQ(rows[i].c_i, c);
    EXPECT_EQ(rows[i].d_i, d[i]);
    u64 sum = 0, term = 18;
    for (std::size_t k = 0; k <= 6 - i; ++k, term *= 20) sum += term;
    EXPECT_EQ(rows[i].divisor_sum, sum);
  }
}

TEST(TzolkinTable, EveryCell) {
  const auto rows = tzolkin_coincidence_table();
  ASSERT_EQ(rows.size(), 9u);
  const u64 expected[][3] = {{7540, 29, 65},   {37960, 146, 65}, {18980, 73, 52},
                             {780, 3, 1},      {103740, 399, 260}, {49140, 189, 130},
                             {46020, 177, 260}, {23140, 89, 130}, {9620, 37, 65}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].report.lcm_value, expected[i][0]) << rows[i].name;
    EXPECT_EQ(rows[i].report.lcm_value, oracle::lcm_by_search(rows[i].period, 260));
    EXPECT_EQ(rows[i].over_260, expected[i][1]) << rows[i].name;
    EXPECT_EQ(rows[i].over_period, expected[i][2]) << rows[i].name;
  }
}

TEST(LcpTable, EveryCell) {
  const auto rows = lcp_coincidence_table();
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].name, "Winal");
  EXPECT_EQ(rows[0].lcm_338, 3380u);
  EXPECT_EQ(rows[0].lcm_260, 260u);
  EXPECT_EQ(rows[0].lcm_234, 2340u);
  EXPECT_EQ(rows[0].l_over_260, Rational(13));
  EXPECT_EQ(rows[0].l_over_234, Rational(130, 9));
  EXPECT_EQ(rows[0].l_over_234.decimal(), "14.44444");
  EXPECT_EQ(rows[1].lcm_338, 60840u);
  EXPECT_EQ(rows[1].lcm_260, 4680u);
  EXPECT_EQ(rows[1].lcm_234, 4680u);
  EXPECT_EQ(rows[1].l_over_260, Rational(234));
  EXPECT_EQ(rows[1].l_over_234, Rational(260));
  EXPECT_EQ(rows[2].lcm_338, 1216800u);
  EXPECT_EQ(format_lc(lc_from_day(DayNumber(1216800))), "8.9.0.0.0");
  EXPECT_EQ(rows[2].lcm_260, 93600u);
  EXPECT_EQ(rows[2].l_over_260, Rational(4680));
  EXPECT_EQ(rows[2].l_over_234, Rational(5200));
  EXPECT_EQ(rows[3].lcm_338, 24336000u);
  EXPECT_EQ(rows[3].lcm_260, 1872000u);
  EXPECT_EQ(rows[3].lcm_234, 1872000u);
  EXPECT_EQ(rows[3].l_over_260, Rational(93600));
  EXPECT_EQ(rows[3].l_over_234, Rational(104000));
}

TEST(KawilTable, EveryCell) {
  const auto rows = kawil_coincidence_table();
  ASSERT_EQ(rows.size(), 9u);
  const u64 expected[][4] = {{950040, 3654, 406, 29},    {2391480, 9198, 1022, 73}, {2391480, 9198, 1022, 73},
                             {32760, 126, 14, 1},        {622440, 2394, 266, 19},   {98280, 378, 42, 3},
                             {1932840, 7434, 826, 59},   {2915640, 11214, 1246, 89}, {1212120, 4662, 518, 37}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].report.lcm_value, expected[i][0]) << rows[i].name;
    EXPECT_EQ(rows[i].over_260, expected[i][1]) << rows[i].name;
    EXPECT_EQ(rows[i].over_2340, expected[i][2]) << rows[i].name;
    EXPECT_EQ(rows[i].over_32760, expected[i][3]) << rows[i].name;
  }
}

TEST(Kukulkan, AllIdentitiesHold) {
  const auto ids = kukulkan_identities();
  EXPECT_EQ(ids.size(), 7u);
  for (const auto& id : ids) EXPECT_TRUE(id.holds()) << id.label << ": " << id.expression;
  auto value = [&](std::string_view label) {
    for (const auto& id : ids)
      if (id.label == label) return id.lhs;
    return i64{-1};
  };
  EXPECT_EQ(value("stairway_steps"), 365);
  EXPECT_EQ(value("panels"), 18980);
  EXPECT_EQ(value("base_width"), 121212);
  EXPECT_EQ(value("cycle_3276"), 3276);
  EXPECT_EQ(value("dresden_1820"), 1820);
}

TEST(SmallConstants, Values) {
  const auto cs = small_cycle_constants();
  const u64 expected[] = {60840, 123370, 85410, 2340, 3380, 4680, 93600, 1872000};
  ASSERT_EQ(cs.size(), std::size(expected));
  for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(cs[i].value, expected[i]) << cs[i].label();
  EXPECT_EQ(cs[1].label(), "lcm_338_365");
  EXPECT_EQ(lcm(260, 260), 260u);
}

TEST(Properties, ThirteenAndSeventyThreeNeverDivideLcpLengths) {
  for (const auto& p : kLongCountPeriods) {
    const auto d = static_cast<u64>(p.length_days);
    EXPECT_NE(d % 13, 0u);
    EXPECT_NE(d % 73, 0u);
    EXPECT_EQ(lcm(260, d), 13 * lcm(20, d));
    EXPECT_EQ(lcm(365, d), 73 * lcm(5, d));
  }
  // For every period from the Winal up, 20 | D and 5 | D, so the factors are exact.
  for (std::size_t i = 1; i < kLongCountPeriods.size(); ++i) {
    const auto d = static_cast<u64>(kLongCountPeriods[i].length_days);
    EXPECT_EQ(lcm(260, d), 13 * d);
    EXPECT_EQ(lcm(365, d), 73 * d);
  }
}

TEST(Slug, Lowercase) {
  EXPECT_EQ(slug("Lunar semester 177"), "lunar_semester_177");
  EXPECT_EQ(slug("Venus"), "venus");
}

}  // namespace
}  // namespace mayan
