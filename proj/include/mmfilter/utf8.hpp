#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mmfilter::utf8 {

// One decoded code point and the byte range it occupies. Invalid byte
// sequences are passed through one byte at a time with valid == false so
// that every transform stays total on arbitrary input.
struct Codepoint {
  char32_t value;
  std::size_t offset;  // byte offset in the source string
  std::size_t size;    // byte length (1..4)
  bool valid;
};

std::vector<Codepoint> decode(std::string_view text);

void append(std::string& out, char32_t cp);

bool is_decimal_digit(char32_t cp);  // Unicode category Nd
bool is_whitespace(char32_t cp);     // Unicode White_Space property

// Maximal runs of non-whitespace code points, in order.
std::vector<std::string_view> tokenize(std::string_view text);

// Runs of whitespace become a single ASCII space; ends are trimmed.
std::string collapse_whitespace(std::string_view text);

// Whether the string is empty or all whitespace.
bool is_blank(std::string_view text);

std::size_t count_codepoints(std::string_view text);

// ASCII-only lowercasing; non-ASCII bytes are left untouched.
std::string ascii_lower(std::string_view text);

}  // namespace mmfilter::utf8
