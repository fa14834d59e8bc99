#pragma once

// Verification report over the derived constants, and table rendering in
// CSV, JSON and markdown.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mayan/rational.hpp"

namespace mayan {

/// Integers are rationals with denominator 1.
using CheckValue = std::variant<Rational, std::string>;

std::string to_string(const CheckValue& v);

/// An expected value keyed by a stable dotted id ("table4.venus.lcm").
struct Fixture {
  std::string id;
  CheckValue expected;
  std::string note;  // e.g. a convention caveat; empty when none
};

enum class CheckStatus { kPass, kFail };

struct CheckResult {
  std::string id;
  CheckValue expected;
  std::optional<CheckValue> computed;  // nullopt when the engine has no such id
  CheckStatus status;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> results;  // sorted by id
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
};

/// Expected values for every derived constant and table cell.
const std::vector<Fixture>& reference_fixtures();

/// Every check id the engine knows how to compute, with its value.
std::map<std::string, CheckValue> computed_values();

VerificationReport verify_all(std::span<const Fixture> fixtures);
VerificationReport verify_all();

/// Maps a filter ("T1".."T6", or a group such as "eq1", "long_round",
/// "constants", "kukulkan", "calendar_round", "ritual", "correlation") to
/// the id prefix it selects. nullopt for an unknown filter.
std::optional<std::string> check_prefix(std::string_view filter);

std::vector<Fixture> select_fixtures(std::span<const Fixture> fixtures, std::string_view prefix);

/// One "PASS <id> expected=<v> got=<v>" line per check, then a summary line.
std::string format_report_text(const VerificationReport& r);
std::string format_report_json(const VerificationReport& r);

enum class TableId { kT1, kT2, kT3, kT4, kT5, kT6 };
enum class TableFormat { kCsv, kJson, kMarkdown };

/// "T1".."T6" (case-insensitive); nullopt otherwise.
std::optional<TableId> parse_table_id(std::string_view text);
std::optional<TableFormat> parse_table_format(std::string_view text);

std::string render_table(TableId id, TableFormat format);

}  // namespace mayan
