// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "bt1/pair_table.hpp"

namespace bt1 {

/// Glyph of one cell: '|' MinusOne, 'o' ZeroZero, '+' PlusOne, '#' PlusTwo
/// (filled square), '=' MinusTwo (open square), '/' diagonal, '.' otherwise.
char diagram_glyph(const PairTable& table, Pair pair);

/// Rows j = r down to 1, columns i = 1..r, glyphs separated by spaces.
std::string diagram_ascii(const PairTable& table);

/// Same layout as SVG; one shape per non-empty cell.
std::string diagram_svg(const PairTable& table);

}  // namespace bt1
