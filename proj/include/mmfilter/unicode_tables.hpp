#pragma once

#include <cstdint>

// Generated from Unicode 13.0 character data. Do not edit by hand.

namespace mmfilter::detail {

struct CodepointRange {
  char32_t lo;
  char32_t hi;
};

// All code points of general category Nd (decimal digit).
inline constexpr CodepointRange kDecimalDigitRanges[] = {
    {0x00030, 0x00039},
    {0x00660, 0x00669},
    {0x006F0, 0x006F9},
    {0x007C0, 0x007C9},
    {0x00966, 0x0096F},
    {0x009E6, 0x009EF},
    {0x00A66, 0x00A6F},
    {0x00AE6, 0x00AEF},
    {0x00B66, 0x00B6F},
    {0x00BE6, 0x00BEF},
    {0x00C66, 0x00C6F},
    {0x00CE6, 0x00CEF},
    {0x00D66, 0x00D6F},
    {0x00DE6, 0x00DEF},
    {0x00E50, 0x00E59},
    {0x00ED0, 0x00ED9},
    {0x00F20, 0x00F29},
    {0x01040, 0x01049},
    {0x01090, 0x01099},
    {0x017E0, 0x017E9},
    {0x01810, 0x01819},
    {0x01946, 0x0194F},
    {0x019D0, 0x019D9},
    {0x01A80, 0x01A89},
    {0x01A90, 0x01A99},
    {0x01B50, 0x01B59},
    {0x01BB0, 0x01BB9},
    {0x01C40, 0x01C49},
    {0x01C50, 0x01C59},
    {0x0A620, 0x0A629},
    {0x0A8D0, 0x0A8D9},
    {0x0A900, 0x0A909},
    {0x0A9D0, 0x0A9D9},
    {0x0A9F0, 0x0A9F9},
    {0x0AA50, 0x0AA59},
    {0x0ABF0, 0x0ABF9},
    {0x0FF10, 0x0FF19},
    {0x104A0, 0x104A9},
    {0x10D30, 0x10D39},
    {0x11066, 0x1106F},
    {0x110F0, 0x110F9},
    {0x11136, 0x1113F},
    {0x111D0, 0x111D9},
    {0x112F0, 0x112F9},
    {0x11450, 0x11459},
    {0x114D0, 0x114D9},
    {0x11650, 0x11659},
    {0x116C0, 0x116C9},
    {0x11730, 0x11739},
    {0x118E0, 0x118E9},
    {0x11950, 0x11959},
    {0x11C50, 0x11C59},
    {0x11D50, 0x11D59},
    {0x11DA0, 0x11DA9},
    {0x16A60, 0x16A69},
    {0x16B50, 0x16B59},
    {0x1D7CE, 0x1D7FF},
    {0x1E140, 0x1E149},
    {0x1E2F0, 0x1E2F9},
    {0x1E950, 0x1E959},
    {0x1FBF0, 0x1FBF9},
};

// Code points with the White_Space property.
inline constexpr CodepointRange kWhitespaceRanges[] = {
    {0x00009, 0x0000D},
    {0x00020, 0x00020},
    {0x00085, 0x00085},
    {0x000A0, 0x000A0},
    {0x01680, 0x01680},
    {0x02000, 0x0200A},
    {0x02028, 0x02029},
    {0x0202F, 0x0202F},
    {0x0205F, 0x0205F},
    {0x03000, 0x03000},
};

}  // namespace mmfilter::detail
