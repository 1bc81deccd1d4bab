#include "parldoc/text.hpp"

#include <algorithm>
#include <unordered_map>

namespace parldoc::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Composition of an ASCII base letter with a combining mark into the
// precomposed Latin-1 / Latin Extended-A character, where one exists.
// Keyed as (base << 16) | mark.
const std::unordered_map<uint32_t, char32_t>& composition_table() {
  static const std::unordered_map<uint32_t, char32_t> table = [] {
    std::unordered_map<uint32_t, char32_t> t;
    auto add = [&t](char32_t base, char32_t mark, char32_t composed) {
      t[(static_cast<uint32_t>(base) << 16) | static_cast<uint32_t>(mark)] = composed;
    };
    // grave 0x300, acute 0x301, circumflex 0x302, tilde 0x303,
    // diaeresis 0x308, ring 0x30A, cedilla 0x327
    add(U'A', 0x300, U'À'); add(U'A', 0x301, U'Á'); add(U'A', 0x302, U'Â');
    add(U'A', 0x303, U'Ã'); add(U'A', 0x308, U'Ä'); add(U'A', 0x30A, U'Å');
    add(U'E', 0x300, U'È'); add(U'E', 0x301, U'É'); add(U'E', 0x302, U'Ê');
    add(U'E', 0x308, U'Ë');
    add(U'I', 0x300, U'Ì'); add(U'I', 0x301, U'Í'); add(U'I', 0x302, U'Î');
    add(U'I', 0x308, U'Ï');
    add(U'O', 0x300, U'Ò'); add(U'O', 0x301, U'Ó'); add(U'O', 0x302, U'Ô');
    add(U'O', 0x303, U'Õ'); add(U'O', 0x308, U'Ö');
    add(U'U', 0x300, U'Ù'); add(U'U', 0x301, U'Ú'); add(U'U', 0x302, U'Û');
    add(U'U', 0x308, U'Ü');
    add(U'N', 0x303, U'Ñ'); add(U'C', 0x327, U'Ç'); add(U'Y', 0x301, U'Ý');
    add(U'a', 0x300, U'à'); add(U'a', 0x301, U'á'); add(U'a', 0x302, U'â');
    add(U'a', 0x303, U'ã'); add(U'a', 0x308, U'ä'); add(U'a', 0x30A, U'å');
    add(U'e', 0x300, U'è'); add(U'e', 0x301, U'é'); add(U'e', 0x302, U'ê');
    add(U'e', 0x308, U'ë');
    add(U'i', 0x300, U'ì'); add(U'i', 0x301, U'í'); add(U'i', 0x302, U'î');
    add(U'i', 0x308, U'ï');
    add(U'o', 0x300, U'ò'); add(U'o', 0x301, U'ó'); add(U'o', 0x302, U'ô');
    add(U'o', 0x303, U'õ'); add(U'o', 0x308, U'ö');
    add(U'u', 0x300, U'ù'); add(U'u', 0x301, U'ú'); add(U'u', 0x302, U'û');
    add(U'u', 0x308, U'ü');
    add(U'n', 0x303, U'ñ'); add(U'c', 0x327, U'ç');
    add(U'y', 0x301, U'ý'); add(U'y', 0x308, U'ÿ');
    return t;
  }();
  return table;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(s[i + k]);
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool is_ascii_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0x00A0;
}

bool is_letter(char32_t cp) {
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x17F) return true;
  return false;
}

bool is_lowercase_letter(char32_t cp) {
  return is_letter(cp) && to_upper(cp) != cp;
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  if (cp == 0xFF) return 0x178;  // ÿ -> Ÿ
  // Latin Extended-A pairs; the upper/lower parity flips at U+0139.
  if (cp >= 0x100 && cp <= 0x137) {
    if (cp % 2 == 1) {
      if (cp == 0x131) return U'I';  // dotless i
      return cp - 1;
    }
    return cp;
  }
  if (cp == 0x138 || cp == 0x149) return cp;  // kra, ŉ: no uppercase pair
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 0) ? cp - 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 1) ? cp - 1 : cp;
  if (cp == 0x17A || cp == 0x17C || cp == 0x17E) return cp - 1;
  if (cp == 0x17F) return U'S';  // long s
  return cp;
}

void fold_diacritics(char32_t cp, std::u32string& out) {
  struct Range {
    char32_t lo, hi;
    char32_t base;
  };
  static constexpr Range kRanges[] = {
      {0xC0, 0xC5, U'A'}, {0xC8, 0xCB, U'E'}, {0xCC, 0xCF, U'I'},
      {0xD2, 0xD6, U'O'}, {0xD9, 0xDC, U'U'}, {0xE0, 0xE5, U'a'},
      {0xE8, 0xEB, U'e'}, {0xEC, 0xEF, U'i'}, {0xF2, 0xF6, U'o'},
      {0xF9, 0xFC, U'u'},
  };
  for (const auto& r : kRanges) {
    if (cp >= r.lo && cp <= r.hi) {
      out.push_back(r.base);
      return;
    }
  }
  switch (cp) {
    case 0xC6: out += U"AE"; return;
    case 0xE6: out += U"ae"; return;
    case 0x152: out += U"OE"; return;
    case 0x153: out += U"oe"; return;
    case 0xC7: out.push_back(U'C'); return;
    case 0xE7: out.push_back(U'c'); return;
    case 0xD1: out.push_back(U'N'); return;
    case 0xF1: out.push_back(U'n'); return;
    case 0xD8: out.push_back(U'O'); return;
    case 0xF8: out.push_back(U'o'); return;
    case 0xDD: out.push_back(U'Y'); return;
    case 0xFD: out.push_back(U'y'); return;
    case 0xFF: out.push_back(U'y'); return;
    case 0x178: out.push_back(U'Y'); return;
    case 0xDF: out += U"ss"; return;
    case 0xD0: out.push_back(U'D'); return;
    case 0xF0: out.push_back(U'd'); return;
    case 0xDE: out.push_back(U'T'); return;
    case 0xFE: out.push_back(U't'); return;
    default: break;
  }
  if (cp == 0x138) {
    out.push_back(U'k');
    return;
  }
  if (cp == 0x149) {
    out.push_back(U'n');
    return;
  }
  if (cp >= 0x100 && cp <= 0x17F) {
    // Latin Extended-A: strip the diacritic, keep the letter's own case.
    struct ExtRange {
      char32_t lo, hi;
      char32_t base;
    };
    static constexpr ExtRange kExt[] = {
        {0x100, 0x105, U'A'}, {0x106, 0x10D, U'C'}, {0x10E, 0x111, U'D'},
        {0x112, 0x11B, U'E'}, {0x11C, 0x123, U'G'}, {0x124, 0x127, U'H'},
        {0x128, 0x131, U'I'}, {0x134, 0x135, U'J'}, {0x136, 0x138, U'K'},
        {0x139, 0x142, U'L'}, {0x143, 0x14B, U'N'}, {0x14C, 0x151, U'O'},
        {0x154, 0x159, U'R'}, {0x15A, 0x161, U'S'}, {0x162, 0x167, U'T'},
        {0x168, 0x173, U'U'}, {0x174, 0x175, U'W'}, {0x176, 0x177, U'Y'},
        {0x179, 0x17E, U'Z'}, {0x17F, 0x17F, U'S'},
    };
    for (const auto& r : kExt) {
      if (cp >= r.lo && cp <= r.hi) {
        bool lower = to_upper(cp) != cp;
        out.push_back(lower ? r.base + 0x20 : r.base);
        return;
      }
    }
    if (cp == 0x132) {
      out += U"IJ";
      return;
    }
    if (cp == 0x133) {
      out += U"ij";
      return;
    }
  }
  out.push_back(cp);
}

std::string to_upper_utf8(const std::string& s) {
  auto cps = decode_utf8(s);
  for (auto& cp : cps) cp = to_upper(cp);
  return encode_utf8(cps);
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(const std::string& s) {
  auto cps = decode_utf8(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  bool in_space = false;
  for (char32_t cp : cps) {
    if (is_ascii_space(cp)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(U' ');
    in_space = false;
    out.push_back(cp);
  }
  return encode_utf8(out);
}

std::string normalize_for_match(const std::string& s) {
  auto cps = decode_utf8(s);
  std::u32string folded;
  folded.reserve(cps.size());
  for (char32_t cp : cps) fold_diacritics(to_upper(cp), folded);
  std::vector<char32_t> out;
  out.reserve(folded.size());
  bool in_space = true;  // swallow leading separators
  for (char32_t cp : folded) {
    bool keep = (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
                is_digit(cp);
    if (!keep) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(U' ');
    in_space = false;
    out.push_back(to_upper(cp));
  }
  return encode_utf8(out);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t sp = s.find(' ', pos);
    if (sp == std::string::npos) sp = s.size();
    if (sp > pos) tokens.push_back(s.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return tokens;
}

std::string normalize_for_metrics(const std::string& s) {
  auto cps = decode_utf8(s);
  std::vector<char32_t> composed;
  composed.reserve(cps.size());
  const auto& table = composition_table();
  for (char32_t cp : cps) {
    if (!composed.empty() && cp >= 0x300 && cp <= 0x36F) {
      uint32_t key = (static_cast<uint32_t>(composed.back()) << 16) |
                     static_cast<uint32_t>(cp);
      auto it = table.find(key);
      if (it != table.end()) {
        composed.back() = it->second;
        continue;
      }
    }
    composed.push_back(cp);
  }
  return collapse_whitespace(encode_utf8(composed));
}

bool is_vowel(char32_t cp) {
  std::u32string folded;
  fold_diacritics(to_upper(cp), folded);
  if (folded.empty()) return false;
  char32_t c = folded[0];
  return c == U'A' || c == U'E' || c == U'I' || c == U'O' || c == U'U';
}

}  // namespace parldoc::text
