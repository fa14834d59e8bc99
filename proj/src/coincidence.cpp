#include "mayan/coincidence.hpp"

#include <cctype>

#include "mayan/calendar_round.hpp"
#include "mayan/errors.hpp"
#include "mayan/ritual_cycles.hpp"

namespace mayan {

namespace {

u64 exact_div(u64 value, u64 divisor) {
  if (divisor == 0 || value % divisor != 0) {
    throw std::logic_error(std::to_string(value) + " is not a multiple of " + std::to_string(divisor));
  }
  return value / divisor;
}

u64 period_length(LongCountPeriod p) {
  return static_cast<u64>(kLongCountPeriods[static_cast<std::size_t>(p)].length_days);
}

Decomposition decompose(std::string label, u64 value, u64 divisor) {
  return {std::move(label), value, divisor, value / divisor, value % divisor};
}

// Days-per-unit of the auxiliary cycles derived from the Long Count.
constexpr u64 k338 = 338;
constexpr u64 k234 = 234;

}  // namespace

CoincidenceReport coincide(std::span<const u64> periods) {
  if (periods.empty()) throw DomainError("coincide needs at least one period");
  CoincidenceReport r;
  r.periods.assign(periods.begin(), periods.end());
  r.lcm_value = lcm_all(periods);
  for (u64 p : periods) r.multipliers.emplace_back(p, r.lcm_value / p);
  return r;
}

u64 compute_big_n() {
  const auto periods = synodic_and_semester_periods();
  return lcm_all(periods);
}

u64 long_round() { return static_cast<u64>(day_from_lc(parse_lc("9.9.16.0.0")).value()); }

Eq1Decomposition eq1_decomposition() {
  const u64 n = compute_big_n();
  Eq1Decomposition e{};
  e.reduced = n / kTzolkinHaabCore;
  const u64 baktun = period_length(LongCountPeriod::kBaktun);
  const u64 katun = period_length(LongCountPeriod::kKatun);
  const u64 tun = period_length(LongCountPeriod::kTun);
  e.quotient = e.reduced / baktun;
  e.parts = {e.quotient - tun - katun - baktun, tun, katun, baktun};
  e.tzolkin_residue = e.reduced % static_cast<u64>(kTzolkinLength);
  e.residue_mod_73 = e.reduced % 73;
  return e;
}

std::vector<Decomposition> long_round_decompositions() {
  const u64 lr = long_round();
  const u64 x0 = xultun_analysis().numbers[0].days;
  return {
      decompose("tzolkin", lr, kTzolkinLength),
      decompose("haab", lr, kHaabLength),
      decompose("calendar_round", lr, kCalendarRoundLength),
      decompose("tun", lr, period_length(LongCountPeriod::kTun)),
      decompose("venus", lr, cycle("Venus").period_days),
      decompose("mars", lr, cycle("Mars").period_days),
      decompose("x0", lr, x0),
  };
}

XultunAnalysis xultun_analysis() {
  static constexpr std::array<const char*, 4> kInscribed{"2.7.9.0.0", "8.6.1.9.0", "12.5.3.3.0",
                                                         "17.0.1.3.0"};
  XultunAnalysis a{};
  for (std::size_t i = 0; i < 4; ++i) {
    LongCount lc = parse_lc(kInscribed[i]);
    const auto days = static_cast<u64>(day_from_lc(lc).value());
    a.numbers[i] = XultunNumber{"X" + std::to_string(i), std::move(lc), days};
  }
  const u64 x0 = a.numbers[0].days, x1 = a.numbers[1].days, x2 = a.numbers[2].days,
            x3 = a.numbers[3].days;
  a.common_divisor = gcd(gcd(x0, x1), gcd(x2, x3));
  a.lcm_365_780 = lcm(kHaabLength, cycle("Mars").period_days);
  for (std::size_t i = 0; i < 4; ++i) a.quotients[i] = exact_div(a.numbers[i].days, a.common_divisor);
  a.x1_is_365_times_3276 = x1 == static_cast<u64>(kHaabLength * kKawilColorCycle);
  a.x3_is_x2_plus_twice_x0 = x3 == x2 + 2 * x0;
  const u64 tz_haab_tun[] = {kTzolkinLength, kHaabLength, period_length(LongCountPeriod::kTun)};
  a.x0_is_lcm_260_365_360 = x0 == lcm_all(tz_haab_tun);
  a.lcm_x0_819 = lcm(x0, kKawilLength);
  a.lcm_x1_360 = lcm(x1, period_length(LongCountPeriod::kTun));
  a.y_lcc = lc_from_day(DayNumber(static_cast<std::int64_t>(a.lcm_x0_819)));
  a.x0_divisors = {
      decompose("tzolkin", x0, kTzolkinLength),
      decompose("haab", x0, kHaabLength),
      decompose("tun", x0, period_length(LongCountPeriod::kTun)),
      decompose("venus", x0, cycle("Venus").period_days),
      decompose("mars", x0, cycle("Mars").period_days),
  };
  return a;
}

std::vector<PyramidRow> pyramid_table() {
  constexpr int kRows = 7;
  const u64 reduced = compute_big_n() / kTzolkinHaabCore;
  std::vector<PyramidRow> rows;
  for (int i = 0; i < kRows; ++i) {
    u64 c_i = 18;
    for (int k = 0; k < i; ++k) c_i *= 20;
    u64 sum = 0, term = 18;
    for (int n = 0; n <= kRows - 1 - i; ++n, term *= 20) sum += term;
    std::string name = "-";
    for (const auto& p : kLongCountPeriods)
      if (static_cast<u64>(p.length_days) == c_i) name = std::string(p.name);
    rows.push_back({i, std::move(name), c_i, sum, reduced / sum});
  }
  return rows;
}

std::vector<TzolkinCoincidenceRow> tzolkin_coincidence_table() {
  std::vector<TzolkinCoincidenceRow> rows;
  for (const auto& c : registry()) {
    const u64 pair[] = {c.period_days, static_cast<u64>(kTzolkinLength)};
    auto report = coincide(pair);
    const u64 l = report.lcm_value;
    rows.push_back({c.name, c.period_days, std::move(report), exact_div(l, kTzolkinLength),
                    exact_div(l, c.period_days)});
  }
  return rows;
}

std::vector<LcpCoincidenceRow> lcp_coincidence_table() {
  std::vector<LcpCoincidenceRow> rows;
  for (auto p : {LongCountPeriod::kWinal, LongCountPeriod::kTun, LongCountPeriod::kKatun,
                 LongCountPeriod::kBaktun}) {
    const auto& info = kLongCountPeriods[static_cast<std::size_t>(p)];
    const auto d = static_cast<u64>(info.length_days);
    const u64 l = lcm(d, k338);
    rows.push_back({std::string(info.name), d, l, lcm(d, kTzolkinLength), lcm(d, k234),
                    Rational(static_cast<i64>(l), kTzolkinLength),
                    Rational(static_cast<i64>(l), static_cast<i64>(k234))});
  }
  return rows;
}

std::vector<KawilCoincidenceRow> kawil_coincidence_table() {
  const u64 kawil_tun = static_cast<u64>(kawil_tun_coincidence().days);
  const u64 lords_tzolkin = lcm(kLordsCycle, kTzolkinLength);
  std::vector<KawilCoincidenceRow> rows;
  for (const auto& c : registry()) {
    const u64 periods[] = {c.period_days, period_length(LongCountPeriod::kTun),
                           static_cast<u64>(kKawilLength)};
    auto report = coincide(periods);
    const u64 n = report.lcm_value;
    rows.push_back({c.name, c.period_days, std::move(report), exact_div(n, kTzolkinLength),
                    exact_div(n, lords_tzolkin), exact_div(n, kawil_tun)});
  }
  return rows;
}

std::vector<Identity> kukulkan_identities() {
  constexpr i64 kStairways = 4, kStepsPerStairway = 91, kPlatforms = 9, kPanels = 52;
  const u64 stair_platform[] = {kStairways, kPlatforms, kStepsPerStairway};
  const i64 wheel = static_cast<i64>(lcm(kTzolkinLength, 360));
  const i64 pentalunex = static_cast<i64>(cycle("Pentalunex").period_days);
  const i64 steps = kStairways * kStepsPerStairway;
  const i64 kawil_tun = kawil_tun_coincidence().days;
  return {
      {"cycle_3276", "lcm(4,9,91) = 4*819", static_cast<i64>(lcm_all(stair_platform)),
       kStairways * kKawilLength},
      {"stairway_steps", "4*91 + 1 = 365", steps + 1, kHaabLength},
      {"panels", "52*365 = 73*260", kPanels * kHaabLength, 73 * kTzolkinLength},
      {"dresden_1820", "7*260 = 5*(4*91)", 7 * kTzolkinLength, 5 * steps},
      {"base_width", "37*3276 = lcm(148,3276)", 37 * kKawilColorCycle,
       static_cast<i64>(lcm(static_cast<u64>(pentalunex), kKawilColorCycle))},
      {"kawil_tun_wheels", "lcm(360,819) = 7*lcm(260,360)", kawil_tun, 7 * wheel},
      {"kawil_tun_colors", "lcm(360,819) = 10*3276", kawil_tun, 10 * kKawilColorCycle},
  };
}

std::vector<NamedLcm> small_cycle_constants() {
  constexpr std::pair<u64, u64> kPairs[] = {{338, 360}, {338, 365}, {234, 365},  {260, 234},
                                            {260, 338}, {260, 360}, {260, 7200}, {260, 144000}};
  std::vector<NamedLcm> out;
  for (auto [a, b] : kPairs) out.push_back({a, b, lcm(a, b)});
  return out;
}

std::string slug(std::string_view name) {
  std::string out;
  for (char ch : name) out += ch == ' ' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace mayan
