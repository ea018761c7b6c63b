// SPDX-License-Identifier: Apache-2.0
#include "bt1/diagram.hpp"

#include <sstream>

namespace bt1 {

char diagram_glyph(const PairTable& table, Pair pair) {
  if (pair.i == pair.j) return '/';
  switch (table.refined(pair)) {
    case Refined::kMinusOne: return '|';
    case Refined::kZeroZero: return 'o';
    case Refined::kPlusOne: return '+';
    case Refined::kPlusTwo: return '#';
    case Refined::kMinusTwo: return '=';
    case Refined::kZeroPlain: return '.';
  }
  return '?';
}

std::string diagram_ascii(const PairTable& table) {
  std::ostringstream out;
  const int r = table.r();
  for (int j = r; j >= 1; --j) {
    for (int i = 1; i <= r; ++i) out << (i > 1 ? " " : "") << diagram_glyph(table, {i, j});
    out << '\n';
  }
  return out.str();
}

std::string diagram_svg(const PairTable& table) {
  constexpr int kCell = 24;
  constexpr int kMargin = 24;
  const int r = table.r();
  const int size = 2 * kMargin + r * kCell;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "  <title>J x J for c=" << table.c() << ", d=" << table.d() << "</title>\n"
      << "  <g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  // Separators between index blocks {1..c} and {c+1..r}.
  const int split = kMargin + table.c() * kCell;
  out << "    <line class=\"split\" x1=\"" << split << "\" y1=\"" << kMargin << "\" x2=\"" << split
      << "\" y2=\"" << size - kMargin << "\" stroke-dasharray=\"4 4\"/>\n";
  const int split_y = kMargin + (r - table.c()) * kCell;
  out << "    <line class=\"split\" x1=\"" << kMargin << "\" y1=\"" << split_y << "\" x2=\""
      << size - kMargin << "\" y2=\"" << split_y << "\" stroke-dasharray=\"4 4\"/>\n";
  for (int j = r; j >= 1; --j) {
    for (int i = 1; i <= r; ++i) {
      const int x0 = kMargin + (i - 1) * kCell;
      const int y0 = kMargin + (r - j) * kCell;
      const int cx = x0 + kCell / 2;
      const int cy = y0 + kCell / 2;
      const int h = kCell / 3;
      const std::string cell = "data-i=\"" + std::to_string(i) + "\" data-j=\"" + std::to_string(j) + "\"";
      switch (diagram_glyph(table, {i, j})) {
        case '/':
          out << "    <line class=\"diagonal\" " << cell << " x1=\"" << x0 << "\" y1=\"" << y0 + kCell
              << "\" x2=\"" << x0 + kCell << "\" y2=\"" << y0 << "\"/>\n";
          break;
        case '|':
          out << "    <line class=\"MinusOne\" " << cell << " x1=\"" << cx << "\" y1=\"" << cy - h
              << "\" x2=\"" << cx << "\" y2=\"" << cy + h << "\"/>\n";
          break;
        case 'o':
          out << "    <circle class=\"ZeroZero\" " << cell << " cx=\"" << cx << "\" cy=\"" << cy
              << "\" r=\"" << h << "\"/>\n";
          break;
        case '+':
          out << "    <path class=\"PlusOne\" " << cell << " d=\"M " << cx - h << ' ' << cy << " H "
              << cx + h << " M " << cx << ' ' << cy - h << " V " << cy + h << "\"/>\n";
          break;
        case '#':
          out << "    <rect class=\"PlusTwo\" " << cell << " x=\"" << cx - h << "\" y=\"" << cy - h
              << "\" width=\"" << 2 * h << "\" height=\"" << 2 * h << "\" fill=\"black\"/>\n";
          break;
        case '=':
          out << "    <rect class=\"MinusTwo\" " << cell << " x=\"" << cx - h << "\" y=\"" << cy - h
              << "\" width=\"" << 2 * h << "\" height=\"" << 2 * h << "\"/>\n";
          break;
        default:
          break;
      }
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace bt1
