#include "certdom/domination.hpp"

namespace certdom {

std::string_view to_string(VertexStatus s) {
  switch (s) {
    case VertexStatus::Outside: return "outside";
    case VertexStatus::Shadowed: return "shadowed";
    case VertexStatus::HalfShadowed: return "half-shadowed";
    case VertexStatus::Illuminated: return "illuminated";
  }
  return "?";
}

VertexSet undominated(const Graph& g, const VertexSet& d) { return g.closed_neighbours(d).complement(); }

bool is_dominating(const Graph& g, const VertexSet& d) { return undominated(g, d).empty(); }

VertexStatus classify_vertex(const Graph& g, const VertexSet& d, Vertex v) {
  if (!d.contains(v)) return VertexStatus::Outside;
  switch ((g.neighbours(v) - d).size()) {
    case 0: return VertexStatus::Shadowed;
    case 1: return VertexStatus::HalfShadowed;
    default: return VertexStatus::Illuminated;
  }
}

bool is_certified_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  for (Vertex v : d) {
    if ((g.neighbours(v) - d).size() == 1) return false;
  }
  return true;
}

bool is_2dominating(const Graph& g, const VertexSet& x) {
  if (!is_dominating(g, x)) return false;
  for (Vertex v : x.complement()) {
    if (g.neighbours(v).intersection_size(x) < 2) return false;
  }
  return true;
}

bool is_dd2_pair(const Graph& g, const DD2Pair& p) {
  return !p.d.intersects(p.d2) && is_dominating(g, p.d) && is_2dominating(g, p.d2);
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  for (Vertex v : d) {
    VertexSet smaller = d;
    smaller.erase(v);
    if (is_dominating(g, smaller)) return false;
  }
  return true;
}

}  // namespace certdom
