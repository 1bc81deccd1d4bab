#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parldoc::text {

/// Decodes UTF-8 into codepoints. Invalid bytes are passed through as
/// U+FFFD so historical OCR noise never aborts a run.
std::vector<char32_t> decode_utf8(std::string_view s);

/// Encodes codepoints back to UTF-8.
std::string encode_utf8(const std::vector<char32_t>& cps);

bool is_ascii_space(char32_t cp);

/// Letter test covering ASCII, Latin-1 Supplement and Latin Extended-A.
bool is_letter(char32_t cp);

bool is_lowercase_letter(char32_t cp);

bool is_digit(char32_t cp);

/// Uppercases ASCII, Latin-1 Supplement and Latin Extended-A letters,
/// leaving everything else unchanged.
char32_t to_upper(char32_t cp);

/// Strips diacritics from Latin letters: "À" -> "A", "é" -> "e",
/// "Æ" -> "AE". Returns the folded codepoints (may expand).
void fold_diacritics(char32_t cp, std::u32string& out);

std::string to_upper_utf8(const std::string& s);

std::string trim(std::string_view s);

/// Collapses runs of whitespace (ASCII whitespace plus NBSP) to a single
/// space and trims the ends.
std::string collapse_whitespace(const std::string& s);

/// Canonicalisation applied before every matching comparison: uppercase,
/// diacritics folded to ASCII, punctuation and symbols replaced by spaces,
/// whitespace collapsed. Idempotent.
std::string normalize_for_match(const std::string& s);

/// Splits on single spaces; intended for already-normalized strings.
std::vector<std::string> split_tokens(const std::string& s);

/// Canonicalisation applied before WER/CER: composes ASCII base letters
/// followed by common combining marks into precomposed characters,
/// collapses whitespace, trims. Case and punctuation preserved. Idempotent.
std::string normalize_for_metrics(const std::string& s);

/// True when the codepoint folds to one of A E I O U (either case).
bool is_vowel(char32_t cp);

}  // namespace parldoc::text
