#include "cdp/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdp {

namespace {

void require_1d(const CDP& c) {
  if (c.base().dim() != 1)
    throw std::invalid_argument("render: only CDPs over one-dimensional bases are drawable");
}

struct Graphs {
  long lo, hi, ymin, ymax;
  std::vector<std::vector<std::pair<long, long>>> polylines;
};

Graphs collect(const CDP& c) {
  Graphs g;
  g.lo = static_cast<long>(c.base().vertices().front()[0]);
  g.hi = static_cast<long>(c.base().vertices().back()[0]);
  g.ymin = 0;
  g.ymax = 1;
  for (const PLFunction& f : c.functions()) {
    std::vector<std::pair<long, long>> pl;
    for (const Vec& v : f.graph_vertices())
      pl.push_back({static_cast<long>(v[0]), static_cast<long>(v[1])});
    std::sort(pl.begin(), pl.end());
    for (auto& [x, y] : pl) {
      g.ymin = std::min(g.ymin, y);
      g.ymax = std::max(g.ymax, y);
    }
    g.polylines.push_back(std::move(pl));
  }
  return g;
}

}  // namespace

std::string render_ascii(const CDP& c) {
  require_1d(c);
  Graphs g = collect(c);
  std::ostringstream os;
  os << "base [" << g.lo << "," << g.hi << "], n=" << c.n() << "\n";
  for (size_t i = 0; i < g.polylines.size(); ++i) {
    os << "psi" << (i + 1) << ":";
    for (auto& [x, y] : g.polylines[i]) os << " (" << x << "," << y << ")";
    os << "\n";
  }
  // grid with the base on the y=0 row and vertex markers per function
  long w = g.hi - g.lo + 1;
  std::vector<std::string> rows(g.ymax - g.ymin + 1, std::string(2 * w - 1, ' '));
  auto put = [&](long x, long y, char ch) {
    rows[g.ymax - y][2 * (x - g.lo)] = ch;
  };
  for (long x = g.lo; x <= g.hi; ++x) put(x, 0, '.');
  for (size_t i = 0; i < g.polylines.size(); ++i)
    for (auto& [x, y] : g.polylines[i]) {
      char& cell = rows[g.ymax - y][2 * (x - g.lo)];
      char mark = static_cast<char>('1' + i);
      cell = (cell == ' ' || cell == '.') ? mark : '*';
    }
  for (const std::string& row : rows) os << row << "\n";
  return os.str();
}

std::string render_tikz(const CDP& c) {
  require_1d(c);
  Graphs g = collect(c);
  std::ostringstream os;
  os << "\\begin{tikzpicture}[baseline=-.65ex,scale=0.5]\n";
  os << "\\draw[step=1cm,gray,very thin] (" << g.lo << "," << g.ymin << ") grid (" << g.hi << ","
     << g.ymax << ");\n";
  os << "\\draw[gray, line width=1] (" << g.lo << ",0) -- (" << g.hi << ",0);\n";
  for (long x = g.lo; x <= g.hi; ++x)
    os << "\\filldraw[gray] (" << x << ",0) circle (2pt);\n";
  for (const auto& pl : g.polylines) {
    os << "\\draw[black, line width=1]";
    for (size_t k = 0; k < pl.size(); ++k)
      os << (k ? " -- " : " ") << "(" << pl[k].first << "," << pl[k].second << ")";
    os << ";\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_svg(const CDP& c) {
  require_1d(c);
  Graphs g = collect(c);
  const long s = 24, pad = 12;
  auto X = [&](long x) { return pad + s * (x - g.lo); };
  auto Y = [&](long y) { return pad + s * (g.ymax - y); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(g.hi) + pad << "\" height=\""
     << Y(g.ymin) + pad << "\">\n";
  os << "<line x1=\"" << X(g.lo) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(g.hi) << "\" y2=\""
     << Y(0) << "\" stroke=\"gray\" stroke-width=\"3\"/>\n";
  for (long x = g.lo; x <= g.hi; ++x)
    os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(0) << "\" r=\"3\" fill=\"gray\"/>\n";
  for (const auto& pl : g.polylines) {
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (auto& [x, y] : pl) os << X(x) << "," << Y(y) << " ";
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cdp
