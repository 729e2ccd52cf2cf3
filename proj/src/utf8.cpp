#include "mmfilter/utf8.hpp"

#include <algorithm>
#include <iterator>

#include "mmfilter/unicode_tables.hpp"

namespace mmfilter::utf8 {

namespace {

bool in_ranges(char32_t cp, const detail::CodepointRange* ranges, std::size_t n) {
  auto* end = ranges + n;
  auto* it = std::upper_bound(ranges, end, cp, [](char32_t v, const detail::CodepointRange& r) {
    return v < r.lo;
  });
  if (it == ranges) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

}  // namespace

std::vector<Codepoint> decode(std::string_view text) {
  std::vector<Codepoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  while (i < text.size()) {
    unsigned char b0 = s[i];
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (b0 < 0x80) {
      out.push_back({b0, i, 1, true});
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2; cp = b0 & 0x1F; min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3; cp = b0 & 0x0F; min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4; cp = b0 & 0x07; min = 0x10000;
    } else {
      out.push_back({b0, i, 1, false});
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back({b0, i, 1, false});
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) { ok = false; break; }
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    if (!ok || cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back({b0, i, 1, false});
      ++i;
      continue;
    }
    out.push_back({cp, i, len, true});
    i += len;
  }
  return out;
}

void append(std::string& out, char32_t cp) {
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

bool is_decimal_digit(char32_t cp) {
  if (cp < 0x80) return cp >= '0' && cp <= '9';
  return in_ranges(cp, detail::kDecimalDigitRanges, std::size(detail::kDecimalDigitRanges));
}

bool is_whitespace(char32_t cp) {
  if (cp < 0x80) return cp == ' ' || (cp >= 0x09 && cp <= 0x0D);
  return in_ranges(cp, detail::kWhitespaceRanges, std::size(detail::kWhitespaceRanges));
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  auto cps = decode(text);
  std::size_t start = 0;
  bool in_token = false;
  for (const auto& c : cps) {
    bool ws = c.valid && is_whitespace(c.value);
    if (ws) {
      if (in_token) {
        tokens.push_back(text.substr(start, c.offset - start));
        in_token = false;
      }
    } else if (!in_token) {
      start = c.offset;
      in_token = true;
    }
  }
  if (in_token) tokens.push_back(text.substr(start));
  return tokens;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool seen_token = false;
  for (const auto& c : decode(text)) {
    if (c.valid && is_whitespace(c.value)) {
      pending_space = seen_token;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.append(text.substr(c.offset, c.size));
    seen_token = true;
  }
  return out;
}

bool is_blank(std::string_view text) {
  for (const auto& c : decode(text)) {
    if (!c.valid || !is_whitespace(c.value)) return false;
  }
  return true;
}

std::size_t count_codepoints(std::string_view text) {
  return decode(text).size();
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

}  // namespace mmfilter::utf8
