#include "mayan/report.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "json.hpp"
#include "mayan/calendar_round.hpp"
#include "mayan/coincidence.hpp"
#include "mayan/correlation.hpp"
#include "mayan/cycles.hpp"
#include "mayan/long_count.hpp"
#include "mayan/ritual_cycles.hpp"

namespace mayan {

std::string to_string(const CheckValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
          return x.str();
        } else {
          return x;
        }
      },
      v);
}

namespace {

Rational r(u64 v) { return Rational(static_cast<i64>(v)); }
Rational r(i64 v) { return Rational(v); }
Rational flag(bool b) { return Rational(b ? 1 : 0); }

}  // namespace

std::map<std::string, CheckValue> computed_values() {
  std::map<std::string, CheckValue> v;
  const u64 n = compute_big_n();
  const u64 lr = long_round();

  v["constants.big_n"] = r(n);
  v["constants.big_n.factorization"] = factorize(n).str();
  for (const auto& c : small_cycle_constants()) v["constants." + c.label()] = r(c.value);

  const auto e = eq1_decomposition();
  v["eq1.quotient"] = r(e.quotient);
  u64 sum = 0;
  for (std::size_t i = 0; i < e.parts.size(); ++i) {
    v["eq1.parts." + std::to_string(i)] = r(e.parts[i]);
    sum += e.parts[i];
  }
  v["eq1.parts_sum"] = r(sum);
  v["eq1.mod_260"] = r(e.tzolkin_residue);
  v["eq1.mod_73"] = r(e.residue_mod_73);

  v["long_round.value"] = r(lr);
  v["long_round.lcc"] = format_lc(lc_from_day(DayNumber(static_cast<i64>(lr))));
  v["long_round.n_mod_lr"] = r(n % lr);
  v["long_round.gcd_n_lr"] = r(gcd(n, lr));
  for (const auto& d : long_round_decompositions()) {
    v["long_round." + d.label + ".multiplier"] = r(d.multiplier);
    v["long_round." + d.label + ".remainder"] = r(d.remainder);
  }

  const auto x = xultun_analysis();
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string key = "table1.x" + std::to_string(i);
    v[key] = r(x.numbers[i].days);
    v[key + ".lcc"] = format_lc(lc_from_day(DayNumber(static_cast<i64>(x.numbers[i].days))));
    v[key + ".over_gcd"] = r(x.quotients[i]);
  }
  v["table1.gcd"] = r(x.common_divisor);
  v["table1.lcm_365_780"] = r(x.lcm_365_780);
  v["table1.x1_is_365x3276"] = flag(x.x1_is_365_times_3276);
  v["table1.x3_is_x2_plus_2x0"] = flag(x.x3_is_x2_plus_twice_x0);
  v["table1.x0_is_lcm_260_365_360"] = flag(x.x0_is_lcm_260_365_360);
  v["table1.lcm_x0_819"] = r(x.lcm_x0_819);
  v["table1.lcm_x1_360"] = r(x.lcm_x1_360);
  v["table1.y.lcc"] = format_lc(x.y_lcc);
  for (const auto& d : x.x0_divisors) v["table1.x0.per_" + d.label] = r(d.multiplier);

  for (const auto& c : registry()) {
    v["table2." + slug(c.name) + ".period"] = r(c.period_days);
    v["table2." + slug(c.name) + ".factorization"] = c.factorization.str();
  }

  for (const auto& row : pyramid_table()) {
    const std::string key = "table3.i" + std::to_string(row.i);
    v[key + ".name"] = row.name;
    v[key + ".c_i"] = r(row.c_i);
    v[key + ".d_i"] = r(row.d_i);
  }

  for (const auto& row : tzolkin_coincidence_table()) {
    const std::string key = "table4." + slug(row.name);
    v[key + ".lcm"] = r(row.report.lcm_value);
    v[key + ".over_260"] = r(row.over_260);
    v[key + ".over_period"] = r(row.over_period);
  }

  for (const auto& row : lcp_coincidence_table()) {
    const std::string key = "table5." + slug(row.name);
    v[key + ".lcm_338"] = r(row.lcm_338);
    v[key + ".lcm_260"] = r(row.lcm_260);
    v[key + ".lcm_234"] = r(row.lcm_234);
    v[key + ".l_over_260"] = row.l_over_260;
    v[key + ".l_over_234"] = row.l_over_234;
  }

  for (const auto& row : kawil_coincidence_table()) {
    const std::string key = "table6." + slug(row.name);
    v[key + ".lcm"] = r(row.report.lcm_value);
    v[key + ".over_260"] = r(row.over_260);
    v[key + ".over_2340"] = r(row.over_2340);
    v[key + ".over_32760"] = r(row.over_32760);
  }

  for (const auto& id : kukulkan_identities()) {
    v["kukulkan." + id.label + ".value"] = r(id.lhs);
    v["kukulkan." + id.label + ".holds"] = flag(id.holds());
  }

  v["calendar_round.length"] = r(lcm(kTzolkinLength, kHaabLength));
  v["calendar_round.day_0"] = format_cr(cr_of_day(DayNumber(0)));
  v["calendar_round.day_1872000"] = format_cr(cr_of_day(DayNumber(kThirteenBaktunDays)));
  v["calendar_round.day_-4680"] = format_cr(cr_of_day(DayNumber(-kThirteenTunWheel)));
  const auto origin = cr_of_day(DayNumber(-kThirteenTunWheel));
  v["calendar_round.cr_mod_wheel"] = r(kCalendarRoundLength % static_cast<i64>(lcm(kTzolkinLength, 360)));
  v["calendar_round.origin.tzolkin_index"] = r(i64{origin.tzolkin.list_index()});
  v["calendar_round.origin.haab_index"] = r(i64{origin.haab.list_index()});
  v["calendar_round.origin_plus_wheel.tzolkin_residue"] =
      r(floor_mod(kThirteenTunWheel + origin.tzolkin.list_index(), kTzolkinLength));
  v["calendar_round.origin_plus_wheel.haab_residue"] =
      r(floor_mod(kThirteenTunWheel + origin.haab.list_index(), kHaabLength));

  const auto kt = kawil_tun_coincidence();
  v["ritual.kawil_tun"] = r(kt.days);
  v["ritual.kawil_tun.tun_wheels"] = r(kt.tun_wheel_multiple);
  v["ritual.kawil_tun.color_cycles"] = r(kt.color_cycle_multiple);
  v["ritual.kawil_color_cycle"] = r(lcm(kKawilLength, 4));
  v["ritual.n_over_kawil_tun_mod_4"] = r((n / static_cast<u64>(kt.days)) % 4);
  v["ritual.lords_cycle"] = r(lcm(13, 9));
  v["ritual.lords_tzolkin"] = r(lcm(lcm(13, 9), kTzolkinLength));
  v["ritual.haab_color_cycle"] = r(lcm(kHaabLength, kKawilColorCycle));
  v["ritual.station_0.color"] = std::string(to_string(color_of_station(0)));
  v["ritual.station_1.color"] = std::string(to_string(color_of_station(1)));
  v["ritual.station_2.color"] = std::string(to_string(color_of_station(2)));
  v["ritual.station_3.color"] = std::string(to_string(color_of_station(3)));

  v["correlation.day_0"] = format_iso(gregorian_of_day(DayNumber(0)));
  v["correlation.day_1872000"] = format_iso(gregorian_of_day(DayNumber(kThirteenBaktunDays)));
  v["correlation.day_1216800"] = format_iso(gregorian_of_day(DayNumber(1216800)));
  v["correlation.jdn_1872000"] = r(jdn_of_day(DayNumber(kThirteenBaktunDays)));
  return v;
}

VerificationReport verify_all(std::span<const Fixture> fixtures) {
  VerificationReport report;
  if (fixtures.empty()) return report;
  const auto computed = computed_values();
  for (const auto& f : fixtures) {
    CheckResult res{f.id, f.expected, std::nullopt, CheckStatus::kFail, f.note};
    if (auto it = computed.find(f.id); it != computed.end()) {
      res.computed = it->second;
      if (it->second == f.expected) res.status = CheckStatus::kPass;
    }
    (res.status == CheckStatus::kPass ? report.pass_count : report.fail_count)++;
    report.results.push_back(std::move(res));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

VerificationReport verify_all() { return verify_all(reference_fixtures()); }

std::optional<std::string> check_prefix(std::string_view filter) {
  std::string f(filter);
  for (auto& ch : f) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (f.size() == 2 && f[0] == 't' && f[1] >= '1' && f[1] <= '6') return "table" + f.substr(1) + ".";
  static constexpr std::string_view kGroups[] = {"constants", "eq1",    "long_round",     "kukulkan",
                                                 "calendar_round", "ritual", "correlation"};
  for (auto g : kGroups)
    if (f == g) return f + ".";
  return std::nullopt;
}

std::vector<Fixture> select_fixtures(std::span<const Fixture> fixtures, std::string_view prefix) {
  std::vector<Fixture> out;
  for (const auto& f : fixtures)
    if (f.id.starts_with(prefix)) out.push_back(f);
  return out;
}

std::string format_report_text(const VerificationReport& rep) {
  std::string out;
  for (const auto& c : rep.results) {
    out += c.status == CheckStatus::kPass ? "PASS " : "FAIL ";
    out += c.id + " expected=" + to_string(c.expected) +
           " got=" + (c.computed ? to_string(*c.computed) : std::string("<missing>"));
    if (!c.note.empty()) out += " [" + c.note + "]";
    out += '\n';
  }
  out += "checks=" + std::to_string(rep.results.size()) + " pass=" + std::to_string(rep.pass_count) +
         " fail=" + std::to_string(rep.fail_count) + '\n';
  return out;
}

std::string format_report_json(const VerificationReport& rep) {
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.results) {
    nlohmann::ordered_json j{{"id", c.id},
                             {"expected", to_string(c.expected)},
                             {"computed", c.computed ? nlohmann::ordered_json(to_string(*c.computed))
                                                     : nlohmann::ordered_json(nullptr)},
                             {"status", c.status == CheckStatus::kPass ? "pass" : "fail"}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json root{{"checks", std::move(checks)},
                              {"pass_count", rep.pass_count},
                              {"fail_count", rep.fail_count}};
  return root.dump(2) + "\n";
}

std::optional<TableId> parse_table_id(std::string_view text) {
  if (text.size() != 2 || (text[0] != 'T' && text[0] != 't')) return std::nullopt;
  if (text[1] < '1' || text[1] > '6') return std::nullopt;
  return static_cast<TableId>(text[1] - '1');
}

std::optional<TableFormat> parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  if (text == "markdown" || text == "md") return TableFormat::kMarkdown;
  return std::nullopt;
}

namespace {

// Integer, exact ratio, or text.
using Cell = std::variant<i64, Rational, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

Cell cell(u64 v) { return static_cast<i64>(v); }

Table build_table(TableId id) {
  Table t;
  switch (id) {
    case TableId::kT1: {
      t.header = {"name", "lcc", "days", "over_gcd"};
      const auto x = xultun_analysis();
      for (std::size_t i = 0; i < 4; ++i) {
        t.rows.push_back({x.numbers[i].label, format_lc(x.numbers[i].lcc), cell(x.numbers[i].days),
                          cell(x.quotients[i])});
      }
      break;
    }
    case TableId::kT2:
      t.header = {"name", "period_days", "factorization"};
      for (const auto& c : registry()) t.rows.push_back({c.name, cell(c.period_days), c.factorization.str()});
      break;
    case TableId::kT3:
      t.header = {"name", "i", "c_i", "divisor_sum", "d_i"};
      for (const auto& row : pyramid_table()) {
        t.rows.push_back({row.name, i64{row.i}, cell(row.c_i), cell(row.divisor_sum), cell(row.d_i)});
      }
      break;
    case TableId::kT4:
      t.header = {"name", "period_days", "lcm_260", "lcm_over_260", "lcm_over_period"};
      for (const auto& row : tzolkin_coincidence_table()) {
        t.rows.push_back({row.name, cell(row.period), cell(row.report.lcm_value), cell(row.over_260),
                          cell(row.over_period)});
      }
      break;
    case TableId::kT5:
      t.header = {"lcp", "days", "lcm_338", "lcm_260", "lcm_234", "l_over_260", "l_over_234"};
      for (const auto& row : lcp_coincidence_table()) {
        t.rows.push_back({row.name, cell(row.days), cell(row.lcm_338), cell(row.lcm_260), cell(row.lcm_234),
                          row.l_over_260, row.l_over_234});
      }
      break;
    case TableId::kT6:
      t.header = {"name", "period_days", "lcm_360_819", "over_260", "over_2340", "over_32760"};
      for (const auto& row : kawil_coincidence_table()) {
        t.rows.push_back({row.name, cell(row.period), cell(row.report.lcm_value), cell(row.over_260),
                          cell(row.over_2340), cell(row.over_32760)});
      }
      break;
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string cell_text(const Cell& c, bool decimal_ratios) {
  if (const auto* i = std::get_if<i64>(&c)) return std::to_string(*i);
  if (const auto* q = std::get_if<Rational>(&c)) return decimal_ratios ? q->decimal() : q->str();
  return std::get<std::string>(c);
}

std::string render_csv(const Table& t) {
  std::string out;
  auto line = [&](const auto& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(t.header);
  for (const auto& row : t.rows) {
    std::vector<std::string> fields;
    for (const auto& c : row) fields.push_back(cell_text(c, false));
    line(fields);
  }
  return out;
}

std::string render_json(const Table& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* v = std::get_if<i64>(&row[i])) {
        obj[t.header[i]] = *v;
      } else {
        obj[t.header[i]] = cell_text(row[i], false);
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_markdown(const Table& t) {
  std::string out = "|";
  for (const auto& h : t.header) out += ' ' + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
  out += '\n';
  for (const auto& row : t.rows) {
    out += '|';
    for (const auto& c : row) out += ' ' + cell_text(c, true) + " |";
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_table(TableId id, TableFormat format) {
  const Table t = build_table(id);
  switch (format) {
    case TableFormat::kCsv: return render_csv(t);
    case TableFormat::kJson: return render_json(t);
    case TableFormat::kMarkdown: return render_markdown(t);
  }
  return {};
}

}  // namespace mayan
