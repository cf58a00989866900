#include "forge/polycore.hpp"

#include <map>
#include <numeric>

namespace forge {

RankedIncidenceStructure::RankedIncidenceStructure(int rank, std::vector<std::vector<std::string>> labels)
    : rank_(rank), labels_(std::move(labels)) {
  if (rank < 0 || static_cast<int>(labels_.size()) != rank) throw std::invalid_argument("labels must cover each rank");
  inc_.resize(rank);
  for (int r1 = 0; r1 < rank; ++r1) {
    inc_[r1].resize(rank);
    for (int r2 = 0; r2 < rank; ++r2) inc_[r1][r2].resize(labels_[r1].size());
  }
  for (int r = 0; r < rank; ++r) {
    for (int i = 0; i < face_count(r); ++i) inc_[r][r][i] = {i};
  }
}

std::vector<int> RankedIncidenceStructure::f_vector() const {
  std::vector<int> f;
  for (int r = 0; r < rank_; ++r) f.push_back(face_count(r));
  return f;
}

namespace {
void insert_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}
}  // namespace

void RankedIncidenceStructure::set_incident(int r1, int i1, int r2, int i2) {
  if (r1 == r2) throw std::invalid_argument("incidence needs distinct ranks");
  insert_sorted(inc_[r1][r2][i1], i2);
  insert_sorted(inc_[r2][r1][i2], i1);
}

bool RankedIncidenceStructure::incident(int r1, int i1, int r2, int i2) const {
  if (r1 < 0 || r2 < 0 || r1 >= rank_ || r2 >= rank_) return true;
  if (r1 == r2) return i1 == i2;
  const auto& v = inc_[r1][r2][i1];
  return std::binary_search(v.begin(), v.end(), i2);
}

const std::vector<int>& RankedIncidenceStructure::neighbours(int r, int i, int other) const {
  return inc_[r][other][i];
}

// ---------------------------------------------------------------------------

std::vector<Flag> flags(const RankedIncidenceStructure& p) {
  std::vector<Flag> out;
  const int n = p.rank();
  if (n == 0) return {Flag{}};
  Flag current;
  // Depth-first over ranks; each new face must meet every earlier one.
  auto extend = [&](auto&& self, int r) -> void {
    if (r == n) {
      out.push_back(current);
      return;
    }
    const auto candidates = r == 0 ? std::vector<int>{} : p.neighbours(r - 1, current[r - 1], r);
    auto consider = [&](int f) {
      for (int s = 0; s + 1 < r; ++s) {
        if (!p.incident(s, current[s], r, f)) return;
      }
      current.push_back(f);
      self(self, r + 1);
      current.pop_back();
    };
    if (r == 0) {
      for (int f = 0; f < p.face_count(0); ++f) consider(f);
    } else {
      for (int f : candidates) consider(f);
    }
  };
  extend(extend, 0);
  return out;
}

int FlagGraph::index_of(const Flag& f) const {
  auto it = std::lower_bound(flags.begin(), flags.end(), f);
  if (it == flags.end() || *it != f) return -1;
  return static_cast<int>(it - flags.begin());
}

FlagGraph flag_graph(const RankedIncidenceStructure& p) {
  FlagGraph g;
  g.flags = flags(p);  // lexicographic by construction
  const int n = p.rank();
  g.adjacent.assign(g.flags.size(), std::vector<int>(n, -1));
  for (std::size_t f = 0; f < g.flags.size(); ++f) {
    const Flag& flag = g.flags[f];
    for (int j = 0; j < n; ++j) {
      int found = -1, count = 0;
      for (int c = 0; c < p.face_count(j); ++c) {
        if (c == flag[j]) continue;
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) {
          if (s != j) ok = p.incident(s, flag[s], j, c);
        }
        if (ok) {
          found = c;
          ++count;
        }
      }
      if (count != 1) {
        throw NotAPolytope("diamond condition", "flag " + std::to_string(f) + " has " + std::to_string(count) +
                                                    " faces completing rank " + std::to_string(j));
      }
      Flag other = flag;
      other[j] = found;
      g.adjacent[f][j] = g.index_of(other);
    }
  }
  return g;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

void verify_polytope(const RankedIncidenceStructure& p) {
  const int n = p.rank();
  for (int r = 0; r < n; ++r) {
    if (p.face_count(r) == 0) throw NotAPolytope("nonempty ranks", "rank " + std::to_string(r));
  }
  // Partial order: incidence along increasing ranks is transitive.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int i = 0; i < p.face_count(a); ++i) {
          for (int j : p.neighbours(a, i, b)) {
            for (int k : p.neighbours(b, j, c)) {
              if (!p.incident(a, i, c, k)) throw NotAPolytope("transitivity", p.label(a, i) + " < " + p.label(c, k));
            }
          }
        }
      }
    }
  }
  // Every face meets every rank, and every incident pair can be filled in
  // at each intermediate rank; with transitivity this makes every maximal
  // chain a flag.
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < p.face_count(a); ++i) {
      for (int c = 0; c < n; ++c) {
        if (c != a && p.neighbours(a, i, c).empty()) throw NotAPolytope("flags", "face " + p.label(a, i) + " is isolated");
      }
      for (int c = a + 2; c < n; ++c) {
        for (int k : p.neighbours(a, i, c)) {
          for (int b = a + 1; b < c; ++b) {
            bool found = false;
            for (int j : p.neighbours(a, i, b)) {
              if (p.incident(b, j, c, k)) {
                found = true;
                break;
              }
            }
            if (!found) throw NotAPolytope("flags", "no rank-" + std::to_string(b) + " face between faces");
          }
        }
      }
    }
  }
  const FlagGraph g = flag_graph(p);
  // Strong flag-connectivity: for each set S of fixed ranks, flags sharing
  // their faces in S must be connected by adjacencies outside S.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    UnionFind uf(g.flags.size());
    for (std::size_t f = 0; f < g.flags.size(); ++f) {
      for (int j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) uf.unite(f, static_cast<std::size_t>(g.adjacent[f][j]));
      }
    }
    std::map<std::vector<int>, std::size_t> component_of_key;
    for (std::size_t f = 0; f < g.flags.size(); ++f) {
      std::vector<int> key;
      for (int j = 0; j < n; ++j) {
        if (mask >> j & 1) key.push_back(g.flags[f][j]);
      }
      auto [it, inserted] = component_of_key.emplace(key, uf.find(f));
      if (!inserted && it->second != uf.find(f)) {
        throw NotAPolytope("strong flag-connectivity", "rank set " + std::to_string(mask));
      }
    }
  }
}

std::vector<int> schlafli_type(const RankedIncidenceStructure& p) {
  const int n = p.rank();
  std::vector<int> type;
  for (int j = 1; j < n; ++j) {
    const int lo = j - 2, hi = j + 1;
    const int lo_count = lo < 0 ? 1 : p.face_count(lo);
    const int hi_count = hi >= n ? 1 : p.face_count(hi);
    int value = -1;
    for (int a = 0; a < lo_count; ++a) {
      for (int b = 0; b < hi_count; ++b) {
        if (!p.incident(lo, a, hi, b)) continue;
        int count = 0;
        for (int f = 0; f < p.face_count(j); ++f) {
          if (p.incident(lo, a, j, f) && p.incident(j, f, hi, b)) ++count;
        }
        if (value < 0) {
          value = count;
        } else if (value != count) {
          throw NotEquivelar("sections of rank 2 at position " + std::to_string(j) + " have " +
                             std::to_string(value) + " and " + std::to_string(count) + " sides");
        }
      }
    }
    type.push_back(value);
  }
  return type;
}

bool preserves_incidence(const RankedIncidenceStructure& p, const FaceAction& a) {
  const int n = p.rank();
  if (static_cast<int>(a.images.size()) != n) return false;
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(a.images[r].size()) != p.face_count(r)) return false;
    std::vector<int> sorted = a.images[r];
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < p.face_count(r); ++i) {
      if (sorted[i] != i) return false;
    }
  }
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      for (int i = 0; i < p.face_count(r1); ++i) {
        for (int j : p.neighbours(r1, i, r2)) {
          if (!p.incident(r1, a.images[r1][i], r2, a.images[r2][j])) return false;
        }
      }
    }
  }
  return true;
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Regular:
      return "regular";
    case Symmetry::Chiral:
      return "chiral";
    default:
      return "other";
  }
}

Classification classify(const RankedIncidenceStructure& p, const std::vector<FaceAction>& generators) {
  for (const auto& a : generators) {
    if (!preserves_incidence(p, a)) throw std::invalid_argument("group element does not act as an automorphism");
  }
  const FlagGraph g = flag_graph(p);
  UnionFind uf(g.flags.size());
  for (const auto& a : generators) {
    for (std::size_t f = 0; f < g.flags.size(); ++f) {
      Flag img(p.rank());
      for (int r = 0; r < p.rank(); ++r) img[r] = a.images[r][g.flags[f][r]];
      uf.unite(f, static_cast<std::size_t>(g.index_of(img)));
    }
  }
  Classification c;
  c.flag_count = static_cast<int>(g.flags.size());
  std::set<std::size_t> roots;
  for (std::size_t f = 0; f < g.flags.size(); ++f) roots.insert(uf.find(f));
  c.flag_orbits = static_cast<int>(roots.size());
  c.adjacent_flags_split = true;
  for (std::size_t f = 0; f < g.flags.size() && c.adjacent_flags_split; ++f) {
    for (int j : g.adjacent[f]) {
      if (uf.find(f) == uf.find(static_cast<std::size_t>(j))) {
        c.adjacent_flags_split = false;
        break;
      }
    }
  }
  if (c.flag_orbits == 1) {
    c.kind = Symmetry::Regular;
  } else if (c.flag_orbits == 2 && c.adjacent_flags_split) {
    c.kind = Symmetry::Chiral;
  }
  return c;
}

namespace {

// Carries flag 0 of `a` onto flag `target` of `b` along the labelled flag
// graphs; returns the induced face map when it is consistent.
std::optional<FaceMap> transport(const RankedIncidenceStructure& a, const FlagGraph& ga, const FlagGraph& gb,
                                 int target) {
  const int n = a.rank();
  std::vector<int> image(ga.flags.size(), -1);
  image[0] = target;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      const int fa = ga.adjacent[f][j];
      const int fb = gb.adjacent[image[f]][j];
      if (image[fa] < 0) {
        image[fa] = fb;
        stack.push_back(fa);
      } else if (image[fa] != fb) {
        return std::nullopt;
      }
    }
  }
  FaceMap map(n);
  for (int r = 0; r < n; ++r) map[r].assign(a.face_count(r), -1);
  for (std::size_t f = 0; f < ga.flags.size(); ++f) {
    if (image[f] < 0) return std::nullopt;
    for (int r = 0; r < n; ++r) {
      int& m = map[r][ga.flags[f][r]];
      const int want = gb.flags[image[f]][r];
      if (m >= 0 && m != want) return std::nullopt;
      m = want;
    }
  }
  for (int r = 0; r < n; ++r) {
    std::vector<int> sorted = map[r];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  }
  return map;
}

}  // namespace

std::optional<FaceMap> find_isomorphism(const RankedIncidenceStructure& a, const RankedIncidenceStructure& b) {
  if (a.rank() != b.rank() || a.f_vector() != b.f_vector()) return std::nullopt;
  if (a.rank() == 0) return FaceMap{};
  const FlagGraph ga = flag_graph(a), gb = flag_graph(b);
  if (ga.flags.size() != gb.flags.size()) return std::nullopt;
  for (std::size_t t = 0; t < gb.flags.size(); ++t) {
    auto map = transport(a, ga, gb, static_cast<int>(t));
    if (!map) continue;
    // Flag-graph isomorphisms of polytopes preserve incidence; confirm.
    bool ok = true;
    for (int r1 = 0; r1 < a.rank() && ok; ++r1) {
      for (int r2 = r1 + 1; r2 < a.rank() && ok; ++r2) {
        for (int i = 0; i < a.face_count(r1) && ok; ++i) {
          for (int j = 0; j < a.face_count(r2) && ok; ++j) {
            ok = a.incident(r1, i, r2, j) == b.incident(r1, (*map)[r1][i], r2, (*map)[r2][j]);
          }
        }
      }
    }
    if (ok) return map;
  }
  return std::nullopt;
}

std::size_t automorphism_count(const RankedIncidenceStructure& p) {
  if (p.rank() == 0) return 1;
  const FlagGraph g = flag_graph(p);
  std::size_t count = 0;
  for (std::size_t t = 0; t < g.flags.size(); ++t) {
    if (transport(p, g, g, static_cast<int>(t))) ++count;
  }
  return count;
}

CoveringReport verify_covering(const RankedIncidenceStructure& cover, const RankedIncidenceStructure& base,
                               const FaceMap& face_map) {
  const int n = cover.rank();
  if (base.rank() != n) throw NotACovering("ranks differ");
  if (static_cast<int>(face_map.size()) != n) throw NotACovering("face map does not cover every rank");
  CoveringReport rep;
  rep.preimages.resize(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(face_map[r].size()) != cover.face_count(r)) {
      throw NotACovering("face map undefined on some rank-" + std::to_string(r) + " face");
    }
    rep.preimages[r].assign(base.face_count(r), 0);
    for (int x : face_map[r]) {
      if (x < 0 || x >= base.face_count(r)) throw NotACovering("face map leaves the base at rank " + std::to_string(r));
      ++rep.preimages[r][x];
    }
  }
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      for (int i = 0; i < cover.face_count(r1); ++i) {
        for (int j : cover.neighbours(r1, i, r2)) {
          if (!base.incident(r1, face_map[r1][i], r2, face_map[r2][j])) {
            throw NotACovering("incidence " + cover.label(r1, i) + " ~ " + cover.label(r2, j) + " is not preserved");
          }
        }
      }
    }
  }
  rep.incidence_preserving = true;
  rep.surjective = true;
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < base.face_count(r); ++i) {
      if (rep.preimages[r][i] == 0) throw NotACovering("base face " + base.label(r, i) + " has no preimage");
    }
  }
  const FlagGraph gc = flag_graph(cover), gb = flag_graph(base);
  for (std::size_t f = 0; f < gc.flags.size(); ++f) {
    auto image_of = [&](const Flag& flag) {
      Flag img(n);
      for (int r = 0; r < n; ++r) img[r] = face_map[r][flag[r]];
      return gb.index_of(img);
    };
    const int fi = image_of(gc.flags[f]);
    for (int j = 0; j < n; ++j) {
      if (image_of(gc.flags[gc.adjacent[f][j]]) != gb.adjacent[fi][j]) {
        throw NotACovering("flag " + std::to_string(f) + " loses its " + std::to_string(j) + "-adjacency");
      }
    }
  }
  rep.adjacency_preserving = true;
  rep.multiplicity = rep.preimages[0].empty() ? 0 : rep.preimages[0][0];
  for (const auto& row : rep.preimages) {
    for (int c : row) {
      if (c != rep.multiplicity) rep.multiplicity = 0;
    }
  }

  // One-to-one on the section strictly between (lo, a) and (hi, b).
  auto section_injective = [&](int lo, int a, int hi, int b) {
    for (int r = lo + 1; r < hi; ++r) {
      std::set<int> seen;
      int between_base = 0;
      for (int i = 0; i < cover.face_count(r); ++i) {
        if (!cover.incident(lo, a, r, i) || !cover.incident(r, i, hi, b)) continue;
        if (!seen.insert(face_map[r][i]).second) return false;
      }
      const int ia = lo < 0 ? 0 : face_map[lo][a];
      const int ib = hi >= n ? 0 : face_map[hi][b];
      for (int i = 0; i < base.face_count(r); ++i) {
        if (base.incident(lo, ia, r, i) && base.incident(r, i, hi, ib)) ++between_base;
      }
      if (static_cast<int>(seen.size()) != between_base) return false;
    }
    return true;
  };
  auto sections_injective = [&](int k) {
    for (int lo = -1; lo + k + 1 <= n; ++lo) {
      const int hi = lo + k + 1;
      const int lo_count = lo < 0 ? 1 : cover.face_count(lo);
      const int hi_count = hi >= n ? 1 : cover.face_count(hi);
      for (int a = 0; a < lo_count; ++a) {
        for (int b = 0; b < hi_count; ++b) {
          if (cover.incident(lo, a, hi, b) && !section_injective(lo, a, hi, b)) return false;
        }
      }
    }
    return true;
  };
  rep.facets_isomorphic = true;
  for (int b = 0; b < cover.face_count(n - 1) && rep.facets_isomorphic; ++b) {
    rep.facets_isomorphic = section_injective(-1, 0, n - 1, b);
  }
  rep.vertex_figures_isomorphic = true;
  for (int a = 0; a < cover.face_count(0) && rep.vertex_figures_isomorphic; ++a) {
    rep.vertex_figures_isomorphic = section_injective(0, a, n, 0);
  }
  for (int k = n; k >= 1; --k) {
    if (sections_injective(k)) {
      rep.k = k;
      break;
    }
  }
  return rep;
}

}  // namespace forge
