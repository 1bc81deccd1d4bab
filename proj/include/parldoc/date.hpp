#pragma once

#include <compare>
#include <optional>
#include <string>

namespace parldoc {

/// Proleptic Gregorian calendar date. Used for session dates, entity-pool
/// keys and the pre/post-WW2 split.
struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31, validated against month length

  auto operator<=>(const Date&) const = default;

  bool valid() const;

  /// "YYYY-MM-DD", zero padded.
  std::string to_string() const;

  /// Parses "YYYY-MM-DD". Returns nullopt for anything else, including
  /// dates that do not exist on the calendar.
  static std::optional<Date> parse(const std::string& text);

  /// Builds a validated date from components; nullopt if not a real date.
  static std::optional<Date> from_ymd(int year, int month, int day);
};

}  // namespace parldoc
