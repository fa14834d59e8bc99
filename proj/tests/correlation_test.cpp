#include "mayan/correlation.hpp"

#include <gtest/gtest.h>

#include "mayan/errors.hpp"
#include "oracles.hpp"

namespace mayan {
namespace {

TEST(Jdn, Examples) {
  EXPECT_EQ(jdn_of_day(DayNumber(0)), 584283);
  EXPECT_EQ(jdn_of_day(DayNumber(1872000)), 2456283);
  EXPECT_EQ(jdn_of_day(DayNumber(-584283)), 0);
  EXPECT_EQ(jdn_of_day(DayNumber(0), {584285}), 584285);
}

TEST(CorrelationConstant, IsTheOneThatSatisfiesBothEraAnchors) {
  // Both anchors, converted with the independent civil oracle, pin the same constant.
  const std::int64_t start = oracle::jdn_from_civil(-3113, 8, 11);
  const std::int64_t end = oracle::jdn_from_civil(2012, 12, 21) - 1872000;
  EXPECT_EQ(start, 584283);
  EXPECT_EQ(end, 584283);
  EXPECT_EQ(CorrelationConstant{}.jdn_at_era, start);
}

TEST(GregorianOfJdn, Anchors) {
  EXPECT_EQ(gregorian_of_jdn(2456283), (GregorianDate{2012, 12, 21}));
  const auto era = gregorian_of_jdn(584283);
  EXPECT_EQ(era, (GregorianDate{-3113, 8, 11}));
  EXPECT_EQ(format_iso(era), "-3113-08-11");
  EXPECT_EQ(format_human(era), "11 August 3114 BC");
  const auto feb219 = gregorian_of_jdn(jdn_of_day(DayNumber(1216800)));
  EXPECT_EQ(feb219, (GregorianDate{219, 2, 5}));
  EXPECT_EQ(format_iso(feb219), "0219-02-05");
  EXPECT_EQ(format_human(feb219), "5 February 219 CE");
  EXPECT_THROW(gregorian_of_jdn(-1), DomainError);
}

TEST(DayOfGregorian, Anchors) {
  EXPECT_EQ(day_of_gregorian({2012, 12, 21}).value(), 1872000);
  EXPECT_EQ(day_of_gregorian({-3113, 8, 11}).value(), 0);
  EXPECT_EQ(day_of_gregorian({219, 2, 5}).value(), 1216800);
}

TEST(DayOfGregorian, RejectsInvalidDates) {
  EXPECT_THROW(day_of_gregorian({2023, 2, 29}), ValidationError);
  EXPECT_THROW(day_of_gregorian({2024, 13, 1}), ValidationError);
  EXPECT_THROW(day_of_gregorian({1900, 2, 29}), ValidationError);
  EXPECT_NO_THROW(day_of_gregorian({2000, 2, 29}));
  EXPECT_NO_THROW(day_of_gregorian({-3112, 2, 29}));  // 3113 BC is a leap year, astronomical -3112
}

TEST(Gregorian, MatchesFliegelVanFlandern) {
  for (std::int64_t jdn = 0; jdn < 3'500'000; jdn += 37) {
    const auto [y, m, d] = oracle::civil_from_jdn(jdn);
    const auto g = gregorian_of_jdn(jdn);
    ASSERT_EQ(g, (GregorianDate{y, m, d})) << jdn;
    ASSERT_EQ(jdn_of_gregorian(g), oracle::jdn_from_civil(y, m, d));
  }
}

TEST(Gregorian, RoundTripAndMonotonic) {
  GregorianDate prev = gregorian_of_day(DayNumber(0));
  for (std::int64_t d = 1; d <= 3'000'000; d += 1) {
    const auto g = gregorian_of_day(DayNumber(d));
    ASSERT_LT(prev, g) << d;
    if (d % 97 == 0) ASSERT_EQ(day_of_gregorian(g).value(), d);
    prev = g;
  }
}

TEST(ParseGregorian, IsoAndHumanForms) {
  EXPECT_EQ(parse_gregorian("-3113-08-11"), (GregorianDate{-3113, 8, 11}));
  EXPECT_EQ(parse_gregorian("2012-12-21"), (GregorianDate{2012, 12, 21}));
  EXPECT_EQ(parse_gregorian("0219-02-05"), (GregorianDate{219, 2, 5}));
  EXPECT_EQ(parse_gregorian("11 August 3114 BC"), (GregorianDate{-3113, 8, 11}));
  EXPECT_EQ(parse_gregorian("21 December 2012"), (GregorianDate{2012, 12, 21}));
  EXPECT_EQ(parse_gregorian("5 february 219 CE"), (GregorianDate{219, 2, 5}));
  EXPECT_EQ(parse_gregorian("1 January 1 BCE"), (GregorianDate{0, 1, 1}));
  EXPECT_EQ(parse_gregorian("1 January 10 AD"), (GregorianDate{10, 1, 1}));
}

TEST(ParseGregorian, FormatsRoundTrip) {
  for (std::int64_t d = 0; d < 3'000'000; d += 9973) {
    const auto g = gregorian_of_day(DayNumber(d));
    ASSERT_EQ(parse_gregorian(format_iso(g)), g);
    ASSERT_EQ(parse_gregorian(format_human(g)), g);
  }
}

TEST(ParseGregorian, Errors) {
  EXPECT_THROW(parse_gregorian("2012/12/21"), ParseError);
  EXPECT_THROW(parse_gregorian("21 Decembre 2012"), ParseError);
  EXPECT_THROW(parse_gregorian("21 December 2012 XY"), ParseError);
  EXPECT_THROW(parse_gregorian("1 January 0 BC"), ParseError);
  EXPECT_THROW(parse_gregorian("2012-02-30"), ValidationError);
  EXPECT_THROW(parse_gregorian("31 April 2000"), ValidationError);
}

}  // namespace
}  // namespace mayan
