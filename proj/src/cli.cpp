#include "mayan/cli.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mayan/batch.hpp"
#include "mayan/calendar_round.hpp"
#include "mayan/coincidence.hpp"
#include "mayan/correlation.hpp"
#include "mayan/cycles.hpp"
#include "mayan/errors.hpp"
#include "mayan/long_count.hpp"
#include "mayan/report.hpp"
#include "mayan/ritual_cycles.hpp"

namespace mayan::cli {

namespace {

using json = nlohmann::ordered_json;

struct CliConfig {
  std::string output_format = "text";
  std::int64_t correlation = kGmtCorrelation;
  int places = kDefaultPlaces;
};

/// Thrown for bad user input; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InputKind { kLongCount, kCalendarRound, kGregorian, kDay };

std::optional<InputKind> parse_kind(const std::string& s) {
  if (s == "lcc") return InputKind::kLongCount;
  if (s == "cr") return InputKind::kCalendarRound;
  if (s == "gregorian") return InputKind::kGregorian;
  if (s == "day") return InputKind::kDay;
  return std::nullopt;
}

bool mentions_day_name(const std::string& text) {
  std::istringstream words(text);
  std::string w;
  while (words >> w)
    if (tzolkin_name_index(w) >= 0) return true;
  return false;
}

bool looks_gregorian(const std::string& text) {
  static const std::regex iso(R"(^\s*[+-]?\d{4,6}-\d{2}-\d{2}\s*$)");
  static const std::regex human(R"(^\s*\d{1,2}\s+[A-Za-z]+\s+\d{1,6}(\s+[A-Za-z]+)?\s*$)");
  return std::regex_match(text, iso) || std::regex_match(text, human);
}

bool all_digits(const std::string& text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<InputKind> detect(const std::string& text) {
  if (text.find('.') != std::string::npos) return InputKind::kLongCount;
  if (mentions_day_name(text)) return InputKind::kCalendarRound;
  if (looks_gregorian(text)) return InputKind::kGregorian;
  if (all_digits(text)) return InputKind::kDay;
  return std::nullopt;
}

std::int64_t parse_int64(const std::string& text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

DayNumber resolve_day(const std::string& text, InputKind kind, const CliConfig& cfg) {
  switch (kind) {
    case InputKind::kLongCount: return day_from_lc(parse_lc(text));
    case InputKind::kCalendarRound: return day_of_cr(parse_cr(text));
    case InputKind::kGregorian: return day_of_gregorian(parse_gregorian(text), {cfg.correlation});
    case InputKind::kDay: return DayNumber(parse_int64(text));
  }
  throw UsageError("unsupported input kind");
}

json date_record(DayNumber d, const CliConfig& cfg) {
  json rec;
  rec["day"] = d.value();
  rec["long_count"] = d.value() >= 0 ? json(format_lc(lc_from_day(d, cfg.places))) : json(nullptr);
  const auto cr = cr_of_day(d);
  rec["tzolkin"] = format_tzolkin(cr.tzolkin);
  rec["haab"] = format_haab(cr.haab);
  rec["calendar_round"] = format_cr(cr);
  const auto k = kawil_station(d);
  rec["kawil"] = {{"station", k.station},
                  {"day_in_kawil", k.day_in_kawil},
                  {"color", to_string(k.color)},
                  {"pos_3276", k.pos_3276}};
  const auto l = lords_position(d);
  rec["lords"] = {{"day_lord", l.day_lord}, {"night_lord", l.night_lord}, {"pos_117", l.pos_117}};
  const std::int64_t jdn = jdn_of_day(d, {cfg.correlation});
  rec["jdn"] = jdn;
  try {
    const auto g = gregorian_of_jdn(jdn);
    rec["gregorian"] = format_iso(g);
    rec["gregorian_human"] = format_human(g);
  } catch (const DomainError&) {
    rec["gregorian"] = nullptr;
    rec["gregorian_human"] = nullptr;
  }
  return rec;
}

std::string text_record(const json& rec) {
  std::ostringstream os;
  auto str = [](const json& v) { return v.is_null() ? std::string("n/a") : v.get<std::string>(); };
  os << "day:            " << rec["day"].get<std::int64_t>() << '\n';
  os << "long count:     " << str(rec["long_count"]) << '\n';
  os << "calendar round: " << str(rec["calendar_round"]) << '\n';
  os << "tzolkin:        " << str(rec["tzolkin"]) << '\n';
  os << "haab:           " << str(rec["haab"]) << '\n';
  const auto& k = rec["kawil"];
  os << "kawil:          station " << k["station"].get<std::int64_t>() << ", day "
     << k["day_in_kawil"].get<int>() << " of 819, " << k["color"].get<std::string>() << ", position "
     << k["pos_3276"].get<int>() << " of 3276\n";
  const auto& l = rec["lords"];
  os << "lords:          day " << l["day_lord"].get<int>() << ", night " << l["night_lord"].get<int>()
     << ", position " << l["pos_117"].get<int>() << " of 117\n";
  os << "jdn:            " << rec["jdn"].get<std::int64_t>() << '\n';
  os << "gregorian:      " << str(rec["gregorian"]);
  if (!rec["gregorian_human"].is_null()) os << " (" << rec["gregorian_human"].get<std::string>() << ')';
  os << '\n';
  return os.str();
}

void require_text_or_json(const CliConfig& cfg) {
  if (cfg.output_format != "text" && cfg.output_format != "json") {
    throw UsageError("--format must be text or json for this command");
  }
}

int cmd_convert(const std::optional<std::string>& input, const std::optional<std::int64_t>& day,
                const std::optional<std::string>& from, const CliConfig& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  DayNumber d;
  if (day) {
    if (input) throw UsageError("give either an input or --day, not both");
    d = DayNumber(*day);
  } else {
    if (!input) throw UsageError("convert needs an input or --day");
    std::optional<InputKind> kind = from ? parse_kind(*from) : detect(*input);
    if (!kind) {
      throw UsageError(from ? "unknown --from kind '" + *from + "'"
                            : "cannot tell what kind of date '" + *input + "' is; use --from");
    }
    d = resolve_day(*input, *kind, cfg);
  }
  const json rec = date_record(d, cfg);
  out << (cfg.output_format == "json" ? rec.dump(2) + "\n" : text_record(rec));
  return kExitOk;
}

int cmd_coincide(const std::vector<std::string>& args, const CliConfig& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  if (args.size() < 2) throw UsageError("coincide needs at least two periods");
  std::vector<u64> periods;
  for (const auto& a : args) {
    if (!all_digits(a)) throw UsageError("period must be a positive integer: '" + a + "'");
    const std::int64_t v = parse_int64(a);
    if (v <= 0) throw UsageError("period must be a positive integer: '" + a + "'");
    periods.push_back(static_cast<u64>(v));
  }
  const auto rep = coincide(periods);
  if (cfg.output_format == "json") {
    json mult = json::array();
    for (auto [p, m] : rep.multipliers) mult.push_back({{"period", p}, {"multiplier", m}});
    out << json{{"periods", rep.periods}, {"lcm", rep.lcm_value}, {"multipliers", mult}}.dump(2) << '\n';
  } else {
    out << "lcm " << rep.lcm_value << '\n';
    for (auto [p, m] : rep.multipliers) out << p << " x " << m << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::optional<std::string>& filter, const CliConfig& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  std::vector<Fixture> fixtures = reference_fixtures();
  if (filter) {
    const auto prefix = check_prefix(*filter);
    if (!prefix) throw UsageError("unknown table filter '" + *filter + "'");
    fixtures = select_fixtures(fixtures, *prefix);
  }
  const auto report = verify_all(fixtures);
  out << (cfg.output_format == "json" ? format_report_json(report) : format_report_text(report));
  return report.fail_count == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_table(const std::string& id_text, const CliConfig& cfg, std::ostream& out) {
  const auto id = parse_table_id(id_text);
  if (!id) throw UsageError("unknown table '" + id_text + "' (expected T1..T6)");
  const auto format = parse_table_format(cfg.output_format == "text" ? "markdown" : cfg.output_format);
  if (!format) throw UsageError("--format must be csv, json or markdown for tables");
  out << render_table(*id, *format);
  return kExitOk;
}

int cmd_cycles(const CliConfig& cfg, std::ostream& out) {
  if (cfg.output_format == "json") {
    out << registry_json();
  } else if (cfg.output_format == "csv" || cfg.output_format == "text") {
    out << registry_csv();
  } else {
    throw UsageError("--format must be text, csv or json for cycles");
  }
  return kExitOk;
}

int cmd_day(std::int64_t day, std::ostream& out) {
  out << ritual_row_json(DayNumber(day)) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mayan calendar arithmetic and cycle coincidences", "mayan"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.output_format, "text|json (tables: csv|json|markdown)");
  app.add_option("--correlation", cfg.correlation, "Julian Day Number of the era base")
      ->capture_default_str();
  app.add_option("--places", cfg.places, "minimum Long Count places")
      ->check(CLI::Range(kDefaultPlaces, 24))
      ->capture_default_str();

  auto* convert = app.add_subcommand("convert", "show every calendar for one date");
  std::optional<std::string> convert_input, convert_from;
  std::optional<std::int64_t> convert_day;
  convert->add_option("input", convert_input, "Long Count, Calendar Round, Gregorian date or day number");
  convert->add_option("--from", convert_from, "force the input kind: lcc|cr|gregorian|day");
  convert->add_option("--day", convert_day, "day number, may be negative");

  auto* coincide_cmd = app.add_subcommand("coincide", "lcm of periods with per-period multipliers");
  std::vector<std::string> periods;
  coincide_cmd->add_option("periods", periods, "two or more positive periods in days")->required();

  auto* verify = app.add_subcommand("verify", "recompute every derived constant and diff it");
  std::optional<std::string> verify_filter;
  verify->add_option("--table", verify_filter, "T1..T6 or a check group");

  auto* table = app.add_subcommand("table", "render a derived table");
  std::string table_id;
  table->add_option("id", table_id, "T1..T6")->required();

  auto* cycles = app.add_subcommand("cycles", "print the canonical cycle registry");

  auto* cr_table = app.add_subcommand("cr-table", "JSON of one full Calendar Round from the era base");

  auto* day_cmd = app.add_subcommand("day", "ritual-cycle JSON row for a day number");
  std::int64_t ritual_day = 0;
  day_cmd->add_option("day", ritual_day, "day number")->required()->allow_extra_args(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mayan: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*convert) return cmd_convert(convert_input, convert_day, convert_from, cfg, out);
    if (*coincide_cmd) return cmd_coincide(periods, cfg, out);
    if (*verify) return cmd_verify(verify_filter, cfg, out);
    if (*table) return cmd_table(table_id, cfg, out);
    if (*cycles) return cmd_cycles(cfg, out);
    if (*cr_table) {
      out << cr_table_json();
      return kExitOk;
    }
    if (*day_cmd) return cmd_day(ritual_day, out);
  } catch (const UsageError& e) {
    err << "mayan: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "mayan: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Domain, validation and overflow errors all come from the input.
    err << "mayan: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mayan::cli
