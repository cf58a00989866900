#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/groupcore.hpp"

namespace forge {

class NotAPolytope : public std::runtime_error {
 public:
  explicit NotAPolytope(std::string axiom, const std::string& detail = {})
      : std::runtime_error("not a polytope: " + axiom + (detail.empty() ? "" : " (" + detail + ")")),
        axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

struct ConditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEquivelar : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCentral : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ImproperColouring : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotACovering : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Proper faces of ranks 0..rank-1 with an incidence relation; the least
/// face (rank -1) and the greatest face (rank `rank`) are implicit and
/// incident to everything.
class RankedIncidenceStructure {
 public:
  RankedIncidenceStructure() = default;
  RankedIncidenceStructure(int rank, std::vector<std::vector<std::string>> labels);

  int rank() const { return rank_; }
  int face_count(int r) const { return static_cast<int>(labels_[r].size()); }
  std::vector<int> f_vector() const;
  const std::string& label(int r, int i) const { return labels_[r][i]; }
  const std::vector<std::string>& labels(int r) const { return labels_[r]; }

  void set_incident(int r1, int i1, int r2, int i2);

  /// Incidence between faces of distinct ranks; a face is incident with
  /// itself only. Formal ranks -1 and rank() are accepted.
  bool incident(int r1, int i1, int r2, int i2) const;

  /// Faces of rank `other` incident with face (r, i).
  const std::vector<int>& neighbours(int r, int i, int other) const;

 private:
  int rank_ = 0;
  std::vector<std::vector<std::string>> labels_;
  // inc_[r1][r2][i1] = sorted faces of rank r2 incident with (r1, i1).
  std::vector<std::vector<std::vector<std::vector<int>>>> inc_;
};

using Flag = std::vector<int>;

/// All maximal chains of proper faces containing one face of each rank.
std::vector<Flag> flags(const RankedIncidenceStructure& p);

struct FlagGraph {
  std::vector<Flag> flags;
  /// adjacent[f][j] is the flag differing from flag f exactly at rank j.
  std::vector<std::vector<int>> adjacent;
  int index_of(const Flag& f) const;
};

/// Throws NotAPolytope("diamond condition") unless every flag has exactly
/// one j-adjacent flag for every rank j.
FlagGraph flag_graph(const RankedIncidenceStructure& p);

/// Checks partial order, chain extension to flags, the diamond condition
/// and strong flag-connectivity. Throws NotAPolytope naming the axiom.
void verify_polytope(const RankedIncidenceStructure& p);

/// {p_1, ..., p_{n-1}}; throws NotEquivelar when some section disagrees.
std::vector<int> schlafli_type(const RankedIncidenceStructure& p);

/// A map of faces to faces, one permutation (or map) per rank.
using FaceMap = std::vector<std::vector<int>>;

/// An automorphism given by its effect on face indices.
struct FaceAction {
  FaceMap images;
};

bool preserves_incidence(const RankedIncidenceStructure& p, const FaceAction& a);

enum class Symmetry { Regular, Chiral, Other };
std::string to_string(Symmetry s);

struct Classification {
  Symmetry kind = Symmetry::Other;
  int flag_count = 0;
  int flag_orbits = 0;
  bool adjacent_flags_split = false;
};

/// Flag orbits under the group generated by `generators`.
Classification classify(const RankedIncidenceStructure& p, const std::vector<FaceAction>& generators);

/// Face-lattice isomorphism a -> b, found by transporting a base flag
/// along the rank-labelled flag graphs.
std::optional<FaceMap> find_isomorphism(const RankedIncidenceStructure& a, const RankedIncidenceStructure& b);

/// Order of the full automorphism group, counted as the flags onto which
/// the base flag can be carried.
std::size_t automorphism_count(const RankedIncidenceStructure& p);

struct CoveringReport {
  bool surjective = false;
  bool incidence_preserving = false;
  bool adjacency_preserving = false;
  /// preimages[r][i]: number of cover faces mapped onto base face (r, i).
  std::vector<std::vector<int>> preimages;
  /// Common preimage count over all faces, or 0 when it varies.
  int multiplicity = 0;
  bool facets_isomorphic = false;
  bool vertex_figures_isomorphic = false;
  /// Largest k with the map one-to-one on every section of rank k.
  int k = 0;
};

/// Throws NotACovering with a witness when the map fails to be a rank-
/// and adjacency-preserving surjection.
CoveringReport verify_covering(const RankedIncidenceStructure& cover, const RankedIncidenceStructure& base,
                               const FaceMap& face_map);

// ---------------------------------------------------------------------------

/// Faces of rank j are the right cosets H_j.x of the j-th subgroup, each
/// labelled by its least element; two faces are incident when their
/// cosets meet.
template <class E>
struct CosetGeometry {
  FiniteGroup<E> group;
  std::vector<FiniteGroup<E>> subgroups;
  std::vector<std::vector<int>> face_of;       // [rank][element index]
  std::vector<std::vector<E>> representatives;  // [rank][face]
  RankedIncidenceStructure poset;

  int face(int rank, const E& x) const { return face_of[rank][group.index_of(x)]; }

  /// Right multiplication H.x -> H.x.g.
  FaceAction action(const E& g) const {
    FaceAction a;
    for (std::size_t r = 0; r < subgroups.size(); ++r) {
      std::vector<int> img;
      for (const auto& rep : representatives[r]) img.push_back(face(static_cast<int>(r), compose(rep, g)));
      a.images.push_back(std::move(img));
    }
    return a;
  }

  std::vector<FaceAction> generator_actions() const {
    std::vector<FaceAction> out;
    for (const auto& g : group.generators()) out.push_back(action(g));
    return out;
  }
};

/// Builds the coset geometry and verifies it is a polytope.
template <class E>
CosetGeometry<E> coset_geometry(const FiniteGroup<E>& g, std::vector<FiniteGroup<E>> subgroups) {
  CosetGeometry<E> cg;
  cg.group = g;
  const int n = static_cast<int>(subgroups.size());
  std::vector<std::vector<std::string>> labels(n);
  for (int r = 0; r < n; ++r) {
    if (!subgroups[r].is_subgroup_of(g)) throw std::invalid_argument("rank subgroup is not a subgroup");
    std::vector<int> provisional(g.order(), -1);
    std::vector<E> reps;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (provisional[i] >= 0) continue;
      const int id = static_cast<int>(reps.size());
      E least = g.element(i);
      for (const auto& h : subgroups[r].elements()) {
        E hx = compose(h, g.element(i));
        provisional[g.index_of(hx)] = id;
        if (hx < least) least = hx;
      }
      reps.push_back(least);
    }
    std::vector<int> order(reps.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return reps[a] < reps[b]; });
    std::vector<int> final_id(reps.size());
    std::vector<E> sorted;
    for (std::size_t k = 0; k < order.size(); ++k) {
      final_id[order[k]] = static_cast<int>(k);
      sorted.push_back(reps[order[k]]);
      labels[r].push_back(reps[order[k]].to_string());
    }
    for (auto& f : provisional) f = final_id[f];
    cg.face_of.push_back(std::move(provisional));
    cg.representatives.push_back(std::move(sorted));
  }
  cg.poset = RankedIncidenceStructure(n, std::move(labels));
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (int r1 = 0; r1 < n; ++r1) {
      for (int r2 = r1 + 1; r2 < n; ++r2) cg.poset.set_incident(r1, cg.face_of[r1][x], r2, cg.face_of[r2][x]);
    }
  }
  cg.subgroups = std::move(subgroups);
  verify_polytope(cg.poset);
  return cg;
}

/// The distinguished subgroups G_j = <g_i : i != j> of a string group.
template <class E>
std::vector<FiniteGroup<E>> distinguished_subgroups(const FiniteGroup<E>& g) {
  const auto& gens = g.generators();
  std::vector<FiniteGroup<E>> out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<E> sub{g.identity()};
    std::vector<std::string> names{"1"};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i != j) {
        sub.push_back(gens[i]);
        names.push_back(g.generator_names()[i]);
      }
    }
    out.push_back(FiniteGroup<E>::closure(sub, names));
  }
  return out;
}

/// Coset geometry of a string C-group on its ordered involutory generators.
template <class E>
CosetGeometry<E> polytope_from_reflections(const FiniteGroup<E>& g) {
  if (!string_condition(g.generators())) throw ConditionFailed("string condition fails");
  if (!intersection_condition(g.generators())) throw ConditionFailed("intersection condition fails");
  return coset_geometry(g, distinguished_subgroups(g));
}

struct Quotient {
  RankedIncidenceStructure poset;
  /// orbit_of[r][i]: quotient face containing original face (r, i).
  std::vector<std::vector<int>> orbit_of;
  /// Group generators acting on the quotient faces.
  std::vector<FaceAction> generator_actions;
  /// The permutation group those actions generate on all quotient faces
  /// (numbered rank by rank).
  PermGroup induced_group;
};

/// Identifies each face H.x with H.x.z for a central element z of order 2
/// (or the identity, which gives an isomorphic copy).
template <class E>
Quotient central_quotient(const CosetGeometry<E>& cg, const E& z) {
  const auto& g = cg.group;
  if (!g.contains(z)) throw std::invalid_argument("element is not in the group");
  for (const auto& s : g.generators()) {
    if (compose(s, z) != compose(z, s)) throw NotCentral("element does not commute with " + s.to_string());
  }
  const bool trivial = is_identity_element(z);
  if (!trivial && !is_identity_element(compose(z, z))) throw NotCentral("element is not an involution");
  const int n = cg.poset.rank();
  const FaceAction zf = cg.action(z);
  Quotient q;
  std::vector<std::vector<std::string>> labels(n);
  for (int r = 0; r < n; ++r) {
    std::vector<int> orbit(cg.poset.face_count(r), -1);
    for (int i = 0; i < cg.poset.face_count(r); ++i) {
      const int j = zf.images[r][i];
      if (!trivial && j == i) throw NotFree("central element fixes face " + cg.poset.label(r, i));
      if (orbit[i] >= 0) continue;
      orbit[i] = orbit[j] = static_cast<int>(labels[r].size());
      labels[r].push_back(trivial ? cg.poset.label(r, i) : "{" + cg.poset.label(r, i) + " | " + cg.poset.label(r, j) + "}");
    }
    q.orbit_of.push_back(std::move(orbit));
  }
  q.poset = RankedIncidenceStructure(n, std::move(labels));
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      for (int i = 0; i < cg.poset.face_count(r1); ++i) {
        for (int j : cg.poset.neighbours(r1, i, r2)) q.poset.set_incident(r1, q.orbit_of[r1][i], r2, q.orbit_of[r2][j]);
      }
    }
  }
  verify_polytope(q.poset);

  std::vector<int> offset{0};
  for (int r = 0; r < n; ++r) offset.push_back(offset.back() + q.poset.face_count(r));
  std::vector<Perm> perms;
  for (const auto& s : g.generators()) {
    const FaceAction a = cg.action(s);
    FaceAction qa;
    std::vector<int> global(offset.back());
    for (int r = 0; r < n; ++r) {
      std::vector<int> img(q.poset.face_count(r), -1);
      for (int i = 0; i < cg.poset.face_count(r); ++i) {
        img[q.orbit_of[r][i]] = q.orbit_of[r][a.images[r][i]];
      }
      for (int k = 0; k < q.poset.face_count(r); ++k) global[offset[r] + k] = offset[r] + img[k];
      qa.images.push_back(std::move(img));
    }
    q.generator_actions.push_back(std::move(qa));
    perms.push_back(Perm(std::move(global)));
  }
  q.induced_group = PermGroup::closure(perms, g.generator_names());
  return q;
}

// ---------------------------------------------------------------------------

struct ColouredEdge {
  int u = 0;
  int v = 0;
  int colour = 1;  // 1..colours
};

/// A finite graph whose edge colouring should give a 1-factor per colour.
struct ColoredGraph {
  int vertex_count = 0;
  int colours = 0;
  std::vector<ColouredEdge> edges;
};

/// Faces of rank j are the connected components of the subgraphs keeping
/// the colours of some j-subset C; (C, S) <= (D, T) when C is inside D
/// and S inside T. Labels read "{colours}:{vertices}" (both 1-based for
/// colours, 0-based for vertices).
RankedIncidenceStructure colourful_polytope(const ColoredGraph& g);

}  // namespace forge
