#include <cctype>
#include <limits>

#include "parldoc/ingest.hpp"

namespace parldoc::ingest {

const std::vector<DatePattern> kDefaultDatePatterns = {
    DatePattern::Ymd8, DatePattern::YmdDashed, DatePattern::YmdUnderscored};

std::optional<DatePattern> parse_date_pattern(const std::string& name) {
  if (name == "ymd8") return DatePattern::Ymd8;
  if (name == "y-m-d") return DatePattern::YmdDashed;
  if (name == "y_m_d") return DatePattern::YmdUnderscored;
  return std::nullopt;
}

namespace {

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

int num(const std::string& s, size_t pos, size_t len) {
  int value = 0;
  for (size_t i = 0; i < len; ++i) value = value * 10 + (s[pos + i] - '0');
  return value;
}

// Compact YYYYMMDD: exactly eight digits, not embedded in a longer run.
std::optional<std::pair<size_t, Date>> find_ymd8(const std::string& s) {
  size_t i = 0;
  while (i < s.size()) {
    if (!digit(s[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && digit(s[j])) ++j;
    if (j - i == 8) {
      auto date = Date::from_ymd(num(s, i, 4), num(s, i + 4, 2), num(s, i + 6, 2));
      if (date) return std::make_pair(i, *date);
    }
    i = j;
  }
  return std::nullopt;
}

// Separated YYYY<sep>MM<sep>DD with digit runs of exactly 4/2/2.
std::optional<std::pair<size_t, Date>> find_separated(const std::string& s,
                                                      char sep) {
  if (s.size() < 10) return std::nullopt;
  for (size_t i = 0; i + 10 <= s.size(); ++i) {
    if (i > 0 && digit(s[i - 1])) continue;
    if (!(digit(s[i]) && digit(s[i + 1]) && digit(s[i + 2]) && digit(s[i + 3]) &&
          s[i + 4] == sep && digit(s[i + 5]) && digit(s[i + 6]) &&
          s[i + 7] == sep && digit(s[i + 8]) && digit(s[i + 9]))) {
      continue;
    }
    if (i + 10 < s.size() && digit(s[i + 10])) continue;
    auto date = Date::from_ymd(num(s, i, 4), num(s, i + 5, 2), num(s, i + 8, 2));
    if (date) return std::make_pair(i, *date);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Date> extract_date_from_filename(
    const std::string& filename, const std::vector<DatePattern>& patterns) {
  size_t best_pos = std::numeric_limits<size_t>::max();
  std::optional<Date> best;
  for (DatePattern pattern : patterns) {
    std::optional<std::pair<size_t, Date>> hit;
    switch (pattern) {
      case DatePattern::Ymd8: hit = find_ymd8(filename); break;
      case DatePattern::YmdDashed: hit = find_separated(filename, '-'); break;
      case DatePattern::YmdUnderscored: hit = find_separated(filename, '_'); break;
    }
    if (hit && hit->first < best_pos) {
      best_pos = hit->first;
      best = hit->second;
    }
  }
  return best;
}

}  // namespace parldoc::ingest
