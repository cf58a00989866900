#include <map>
#include <numeric>
#include <sstream>

#include "forge/polycore.hpp"

namespace forge {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const ColoredGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count || e.u == e.v) {
      throw ImproperColouring("edge endpoints out of range or a loop");
    }
    if (e.colour < 1 || e.colour > g.colours) throw ImproperColouring("colour out of range");
    adj[e.u].emplace_back(e.v, e.colour);
    adj[e.v].emplace_back(e.u, e.colour);
  }
  return adj;
}

// Components of the subgraph with the colours in `mask`, as sorted vertex
// lists in order of least vertex.
std::vector<std::vector<int>> components(const std::vector<std::vector<std::pair<int, int>>>& adj, unsigned mask) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (auto [y, c] : adj[x]) {
        if ((mask >> (c - 1) & 1) && comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::string face_label(unsigned mask, int colours, const std::vector<int>& vertices) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int c = 0; c < colours; ++c) {
    if (mask >> c & 1) {
      os << (first ? "" : ",") << c + 1;
      first = false;
    }
  }
  os << "}:{";
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
  os << '}';
  return os.str();
}

}  // namespace

RankedIncidenceStructure colourful_polytope(const ColoredGraph& g) {
  if (g.colours < 1 || g.colours > 16) throw ImproperColouring("colour count out of range");
  const auto adj = adjacency(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    std::vector<int> seen(g.colours + 1, 0);
    for (auto [w, c] : adj[v]) ++seen[c];
    for (int c = 1; c <= g.colours; ++c) {
      if (seen[c] != 1) {
        throw ImproperColouring("vertex " + std::to_string(v) + " meets colour " + std::to_string(c) + " " +
                                std::to_string(seen[c]) + " times");
      }
    }
  }
  const unsigned all = (1u << g.colours) - 1;
  if (components(adj, all).size() != 1) throw ImproperColouring("graph is not connected");

  const int d = g.colours;
  struct Face {
    unsigned mask;
    std::vector<int> vertices;
  };
  std::vector<std::vector<Face>> faces(d);
  std::vector<std::vector<std::string>> labels(d);
  for (unsigned mask = 0; mask < all; ++mask) {
    const int j = __builtin_popcount(mask);
    for (auto& comp : components(adj, mask)) faces[j].push_back({mask, std::move(comp)});
  }
  for (int j = 0; j < d; ++j) {
    std::sort(faces[j].begin(), faces[j].end(), [](const Face& a, const Face& b) {
      return std::tie(a.mask, a.vertices) < std::tie(b.mask, b.vertices);
    });
    for (const auto& f : faces[j]) labels[j].push_back(face_label(f.mask, d, f.vertices));
  }
  RankedIncidenceStructure p(d, std::move(labels));
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      for (std::size_t i = 0; i < faces[a].size(); ++i) {
        for (std::size_t k = 0; k < faces[b].size(); ++k) {
          const Face& lo = faces[a][i];
          const Face& hi = faces[b][k];
          if ((lo.mask & ~hi.mask) != 0) continue;
          if (std::binary_search(hi.vertices.begin(), hi.vertices.end(), lo.vertices.front())) {
            p.set_incident(a, static_cast<int>(i), b, static_cast<int>(k));
          }
        }
      }
    }
  }
  verify_polytope(p);
  return p;
}

}  // namespace forge
