#include "mayan/long_count.hpp"

#include <gtest/gtest.h>

#include "mayan/errors.hpp"
#include "oracles.hpp"

namespace mayan {
namespace {

std::string lc(std::int64_t d) { return format_lc(lc_from_day(DayNumber(d))); }
std::int64_t day(std::string_view text) { return day_from_lc(parse_lc(text)).value(); }

TEST(DayNumber, RangeIsChecked) {
  EXPECT_NO_THROW(DayNumber((std::int64_t{1} << 62) - 1));
  EXPECT_THROW(DayNumber(std::int64_t{1} << 62), DomainError);
  EXPECT_THROW(DayNumber(-(std::int64_t{1} << 62)), DomainError);
}

TEST(LcFromDay, Examples) {
  EXPECT_EQ(lc(0), "0.0.0.0.0");
  EXPECT_EQ(lc(1366560), "9.9.16.0.0");
  EXPECT_EQ(lc(1195740), "8.6.1.9.0");
  EXPECT_EQ(lc(2391480), "16.12.3.0.0");
}

TEST(LcFromDay, CoefficientFormulas) {
  // C0 = d mod 20, C1 = int(mod(d, 360) / 20), Ci = int(mod(d, 18*20^i) / (18*20^(i-1))).
  auto pow20 = [](std::size_t k) {
    std::int64_t p = 1;
    while (k-- > 0) p *= 20;
    return p;
  };
  for (std::int64_t d : {0LL, 19LL, 359LL, 7199LL, 1366560LL, 2448420LL, 987654321LL}) {
    const auto coeffs = lc_from_day(DayNumber(d), 8).coefficients();
    EXPECT_EQ(coeffs[0], d % 20);
    EXPECT_EQ(coeffs[1], (d % 360) / 20);
    for (std::size_t i = 2; i < coeffs.size(); ++i) {
      EXPECT_EQ(coeffs[i], (d % (18 * pow20(i))) / (18 * pow20(i - 1))) << "d=" << d << " i=" << i;
    }
  }
}

TEST(LcFromDay, RejectsNegative) {
  EXPECT_THROW(lc_from_day(DayNumber(-1)), DomainError);
  EXPECT_THROW(lc_from_day(DayNumber(0), 4), DomainError);
}

TEST(LcFromDay, WidensBeyondFivePlaces) {
  // One Pictun needs a sixth place.
  const auto pictun = lc_from_day(DayNumber(2880000));
  EXPECT_EQ(pictun.places(), 6u);
  EXPECT_EQ(format_lc(pictun), "1.0.0.0.0.0");
  EXPECT_EQ(format_lc(lc_from_day(DayNumber(5), 7)), "0.0.0.0.0.0.5");
}

TEST(DayFromLc, Examples) {
  EXPECT_EQ(day("2.7.9.0.0"), 341640);
  EXPECT_EQ(day("0.0.0.0.1"), 1);
  EXPECT_EQ(day("17.0.1.3.0"), 2448420);
  EXPECT_EQ(day("8.9.0.0.0"), 1216800);
  EXPECT_EQ(day("12.5.3.3.0"), 1765140);
}

TEST(DayFromLc, RejectsNonCanonical) {
  EXPECT_THROW(LongCount({0, 18, 0, 0, 0}), ValidationError);
  EXPECT_THROW(LongCount({20, 0, 0, 0, 0}), ValidationError);
  EXPECT_THROW(LongCount({-1, 0, 0, 0, 0}), ValidationError);
}

TEST(DayFromLc, OverflowIsReported) {
  std::vector<int> huge(20, 19);
  huge[1] = 17;
  EXPECT_THROW(day_from_lc(LongCount(huge)), ArithmeticOverflow);
}

TEST(Normalize13Baktun, Examples) {
  EXPECT_EQ(normalize_13_baktun(DayNumber(1872000)).value(), 0);
  EXPECT_EQ(normalize_13_baktun(DayNumber(0)).value(), 0);
  EXPECT_EQ(normalize_13_baktun(DayNumber(1872001)).value(), 1);
  EXPECT_THROW(normalize_13_baktun(DayNumber(-1)), DomainError);
}

TEST(ParseLc, Examples) {
  const auto lr = parse_lc("9.9.16.0.0");
  EXPECT_EQ(lr.coefficients(), (std::vector<int>{0, 0, 16, 9, 9}));
  EXPECT_EQ(parse_lc("0.0.0.0.0"), LongCount());
  EXPECT_EQ(day_from_lc(parse_lc("8.9.0.0.0")).value(), 1216800);
}

TEST(ParseLc, EraMarker) {
  const auto era = parse_lc("0(13).0.0.0.0");
  ASSERT_TRUE(era.era_marker().has_value());
  EXPECT_EQ(*era.era_marker(), 13);
  EXPECT_EQ(day_from_lc(era).value(), 0);
  EXPECT_EQ(format_lc(era), "0(13).0.0.0.0");
  EXPECT_EQ(format_lc(era, EraStyle::kPlain), "0.0.0.0.0");
  EXPECT_EQ(format_lc(era, EraStyle::kThirteen), "13.0.0.0.0");
  // A non-zero leading coefficient is not rewritten.
  EXPECT_EQ(format_lc(parse_lc("9.9.16.0.0"), EraStyle::kThirteen), "9.9.16.0.0");
}

TEST(ParseLc, ShortFormsPadToFivePlaces) {
  const auto kawil_tun = parse_lc("4.11.0.0");
  EXPECT_EQ(day_from_lc(kawil_tun).value(), 32760);
  EXPECT_EQ(kawil_tun.places(), 5u);
}

TEST(ParseLc, ErrorsCarryPosition) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_lc(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("9.9.x.0.0"), 4u);
  EXPECT_EQ(position_of("9.9.16.0."), 9u);
  EXPECT_EQ(position_of("9.9.16.18.0"), 7u);  // C1 must be < 18
  EXPECT_EQ(position_of("9.9.16.0.20"), 9u);
  EXPECT_EQ(position_of("9.0(13).0.0.0"), 3u);
  EXPECT_EQ(position_of("0(13.0.0.0.0"), 4u);
  EXPECT_EQ(position_of("9 9.16.0.0"), 1u);
  EXPECT_EQ(position_of("9"), 0u);
  EXPECT_EQ(position_of(""), 0u);
}

TEST(FormatLc, Examples) {
  EXPECT_EQ(format_lc(LongCount::from_written({2, 7, 9, 0, 0})), "2.7.9.0.0");
  EXPECT_EQ(format_lc(LongCount()), "0.0.0.0.0");
  EXPECT_EQ(format_lc(LongCount::from_written({16, 12, 3, 0, 0})), "16.12.3.0.0");
}

TEST(LongCountPeriods, LengthsAndRatios) {
  const std::int64_t expected[] = {1, 20, 360, 7200, 144000, 2880000, 57600000, 1152000000};
  for (std::size_t i = 0; i < kLongCountPeriods.size(); ++i) {
    EXPECT_EQ(kLongCountPeriods[i].length_days, expected[i]);
    EXPECT_EQ(place_value(i), expected[i]);
    if (i > 0) {
      EXPECT_EQ(kLongCountPeriods[i].length_days / kLongCountPeriods[i - 1].length_days, i == 2 ? 18 : 20);
    }
  }
}

TEST(LongCount, SuccessorIsOdometerIncrement) {
  oracle::Odometer odo;
  for (std::int64_t d = 0; d < 200000; ++d) {
    const auto coeffs = lc_from_day(DayNumber(d)).coefficients();
    ASSERT_EQ(coeffs, odo.c) << "d=" << d;
    odo.increment();
  }
}

}  // namespace
}  // namespace mayan
