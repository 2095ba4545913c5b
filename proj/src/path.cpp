#include "arcpath/path.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "arcpath/errors.hpp"
#include "arcpath/textio.hpp"

namespace arcpath {

void write_polyline(const PolylinePath& path, std::ostream& out) {
  for (const Point2& p : path.nodes)
    out << fmt9(p.x) << ' ' << fmt9(p.y) << '\n';
}

PolylinePath read_polyline(std::istream& in) {
  PolylinePath path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    Point2 p;
    if (!(ls >> p.x >> p.y))
      throw ParseError("polyline line " + std::to_string(line_no) +
                       ": expected 'x y'");
    std::string extra;
    if (ls >> extra)
      throw ParseError("polyline line " + std::to_string(line_no) +
                       ": trailing content '" + extra + "'");
    path.nodes.push_back(p);
  }
  return path;
}

}  // namespace arcpath
