#include "cubemedian/dot_export.hpp"

#include <sstream>

namespace cubemedian {

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999",
                          "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};
constexpr int kPaletteSize = 12;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const MedianGraph& g, const std::vector<int>& marked) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : marked)
    if (v >= 0 && v < g.vertex_count()) mark[v] = 1;

  std::ostringstream os;
  os << "graph mediangraph {\n";
  os << "  node [shape=circle fontsize=10];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << quote(g.name(v));
    if (mark[v]) os << " [style=filled fillcolor=\"#cccccc\"]";
    os << ";\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.graph().edges[e];
    int cls = g.edge_class(e);
    os << "  " << quote(g.name(a)) << " -- " << quote(g.name(b)) << " [color=\""
       << kPalette[cls % kPaletteSize] << "\" label=\"" << cls << "\" fontsize=8];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cubemedian
