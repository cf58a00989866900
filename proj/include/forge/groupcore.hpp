#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "forge/signedperm.hpp"

namespace forge {

inline constexpr std::size_t kDefaultCap = 1'000'000;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("enumeration exceeded cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// ---------------------------------------------------------------------------
// Plain permutations of {0..m-1}, used for coset actions and face actions.

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int m);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm identity_like(const Perm& a);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }
std::size_t hash_value(const Perm& p);

// ---------------------------------------------------------------------------
// Direct-product elements; closing a set of pairs tests whether a
// generator correspondence is the graph of an isomorphism.

template <class A, class B>
struct Pair {
  A first;
  B second;
  friend auto operator<=>(const Pair&, const Pair&) = default;
  friend bool operator==(const Pair&, const Pair&) = default;
  std::string to_string() const { return "[" + first.to_string() + " | " + second.to_string() + "]"; }
};

template <class A, class B>
Pair<A, B> compose(const Pair<A, B>& x, const Pair<A, B>& y) {
  return {compose(x.first, y.first), compose(x.second, y.second)};
}
template <class A, class B>
Pair<A, B> inverse(const Pair<A, B>& x) {
  return {inverse(x.first), inverse(x.second)};
}
template <class A, class B>
Pair<A, B> identity_like(const Pair<A, B>& x) {
  return {identity_like(x.first), identity_like(x.second)};
}
template <class A, class B>
std::size_t hash_value(const Pair<A, B>& x) {
  return hash_value(x.first) * 1000003u ^ hash_value(x.second);
}

}  // namespace forge

template <>
struct std::hash<forge::Perm> {
  std::size_t operator()(const forge::Perm& p) const noexcept { return forge::hash_value(p); }
};
template <class A, class B>
struct std::hash<forge::Pair<A, B>> {
  std::size_t operator()(const forge::Pair<A, B>& x) const noexcept { return forge::hash_value(x); }
};

namespace forge {

// ---------------------------------------------------------------------------
// Words over generators: signed 1-based indices, -k meaning g_k^-1.

using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word repeat_word(const Word& w, int times);
Word concat(std::initializer_list<Word> parts);
std::string word_to_string(const Word& w, const std::vector<std::string>& names = {});

template <class E>
E evaluate(const Word& w, const std::vector<E>& gens, const E& identity) {
  E x = identity;
  for (int letter : w) {
    const auto& g = gens.at(static_cast<std::size_t>(std::abs(letter) - 1));
    x = compose(x, letter > 0 ? g : inverse(g));
  }
  return x;
}

// ---------------------------------------------------------------------------

template <class E>
bool is_identity_element(const E& x) {
  return x == identity_like(x);
}

/// A fully enumerated finite group with named generators. Elements are
/// stored in breadth-first order from the identity (always index 0).
template <class E>
class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup closure(std::vector<E> gens, std::vector<std::string> names = {},
                             std::size_t cap = kDefaultCap) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    FiniteGroup g;
    if (names.empty()) {
      for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i + 1));
    }
    if (names.size() != gens.size()) throw std::invalid_argument("generator names do not match generators");
    g.gens_ = std::move(gens);
    g.names_ = std::move(names);
    g.add(identity_like(g.gens_.front()));
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
      for (const auto& s : g.gens_) {
        E y = compose(g.elements_[head], s);
        if (!g.index_.count(y)) {
          if (g.elements_.size() >= cap) throw CapExceeded(cap);
          g.add(std::move(y));
        }
      }
    }
    return g;
  }

  /// The subgroup formed by `elems`, which must be closed under products.
  /// A generating set is chosen greedily from the sorted elements.
  static FiniteGroup from_elements(std::vector<E> elems) {
    if (elems.empty()) throw std::invalid_argument("empty element set");
    std::sort(elems.begin(), elems.end());
    const E id = identity_like(elems.front());
    std::vector<E> gens;
    FiniteGroup current = closure({id}, {"id"});
    for (const auto& x : elems) {
      if (current.contains(x)) continue;
      gens.push_back(x);
      current = closure(gens);
    }
    if (gens.empty()) current = closure({id}, {"id"});
    if (current.order() != elems.size()) throw std::invalid_argument("element set is not a subgroup");
    for (const auto& x : elems) {
      if (!current.contains(x)) throw std::invalid_argument("element set is not a subgroup");
    }
    return current;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const E& element(std::size_t i) const { return elements_[i]; }
  const E& identity() const { return elements_.front(); }
  const std::vector<E>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  const E& generator(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return gens_[i];
    }
    throw std::out_of_range("no generator named " + name);
  }

  bool contains(const E& x) const { return index_.count(x) != 0; }

  std::size_t index_of(const E& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::out_of_range("element not in group: " + x.to_string());
    return it->second;
  }

  std::optional<std::size_t> find(const E& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_subgroup_of(const FiniteGroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const E& x) { return other.contains(x); });
  }

  /// Same element set, regardless of generators.
  bool same_elements(const FiniteGroup& other) const { return order() == other.order() && is_subgroup_of(other); }

 private:
  void add(E x) {
    index_.emplace(x, elements_.size());
    elements_.push_back(std::move(x));
  }

  std::vector<E> elements_;
  std::unordered_map<E, std::size_t> index_;
  std::vector<E> gens_;
  std::vector<std::string> names_;
};

using ConcreteGroup = FiniteGroup<SignedPerm>;
using PermGroup = FiniteGroup<Perm>;

template <class E>
int element_order(const E& g) {
  int k = 1;
  for (E x = g; !is_identity_element(x); x = compose(x, g)) ++k;
  return k;
}

template <class E>
E power(const E& g, long long k) {
  E base = k < 0 ? inverse(g) : g;
  if (k < 0) k = -k;
  E result = identity_like(g);
  for (; k > 0; --k) result = compose(result, base);
  return result;
}

template <class E>
FiniteGroup<E> centre(const FiniteGroup<E>& g) {
  std::vector<E> central;
  for (const auto& x : g.elements()) {
    bool commutes = true;
    for (const auto& s : g.generators()) {
      if (compose(x, s) != compose(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(x);
  }
  return FiniteGroup<E>::from_elements(std::move(central));
}

template <class E>
bool is_normal(const FiniteGroup<E>& h, const FiniteGroup<E>& g) {
  for (const auto& s : g.generators()) {
    for (const auto& x : h.generators()) {
      if (!h.contains(compose(compose(inverse(s), x), s))) return false;
    }
  }
  return true;
}

/// One representative per right coset H.x of h in g: the first element of
/// the coset in breadth-first order (a shortest word), so H itself is
/// represented by the identity. Listed in breadth-first order.
template <class E>
std::vector<E> coset_reps(const FiniteGroup<E>& g, const FiniteGroup<E>& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup");
  std::vector<bool> assigned(g.order(), false);
  std::vector<E> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    const E& x = g.element(i);
    for (const auto& y : h.elements()) assigned[g.index_of(compose(y, x))] = true;
    reps.push_back(x);
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Homomorphisms defined on generators.

template <class S, class T>
class Homomorphism {
 public:
  Homomorphism(FiniteGroup<S> source, std::vector<T> images)
      : source_(std::move(source)), images_(std::move(images)) {}

  const FiniteGroup<S>& source() const { return source_; }
  const T& operator()(const S& x) const { return images_[source_.index_of(x)]; }
  const std::vector<T>& images() const { return images_; }

  std::vector<S> kernel() const {
    std::vector<S> k;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (is_identity_element(images_[i])) k.push_back(source_.element(i));
    }
    return k;
  }

  std::size_t image_size() const { return std::set<T>(images_.begin(), images_.end()).size(); }
  bool injective() const { return image_size() == images_.size(); }

 private:
  FiniteGroup<S> source_;
  std::vector<T> images_;
};

template <class S, class T>
struct Extension {
  std::optional<Homomorphism<S, T>> hom;
  /// On failure: a word in the source generators that is trivial in the
  /// source but whose image is not.
  Word witness;
  bool ok() const { return hom.has_value(); }
};

/// Extends generator images to a homomorphism by walking the Cayley graph
/// breadth first. The first inconsistency found becomes the witness.
template <class S, class T>
Extension<S, T> extend_homomorphism(const FiniteGroup<S>& src, const std::vector<T>& gen_images) {
  if (gen_images.size() != src.generators().size()) {
    throw std::invalid_argument("an image is needed for every generator");
  }
  const std::size_t n = src.order();
  std::vector<std::optional<T>> img(n);
  std::vector<Word> words(n);
  img[0] = identity_like(gen_images.front());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t xi = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < src.generators().size(); ++s) {
      const std::size_t yi = src.index_of(compose(src.element(xi), src.generators()[s]));
      T target = compose(*img[xi], gen_images[s]);
      Word w = words[xi];
      w.push_back(static_cast<int>(s) + 1);
      if (!img[yi]) {
        img[yi] = std::move(target);
        words[yi] = std::move(w);
        queue.push_back(yi);
      } else if (*img[yi] != target) {
        Extension<S, T> fail;
        const Word back = inverse_word(words[yi]);
        w.insert(w.end(), back.begin(), back.end());
        fail.witness = free_reduce(w);
        return fail;
      }
    }
  }
  std::vector<T> images;
  images.reserve(n);
  for (auto& x : img) images.push_back(std::move(*x));
  return {Homomorphism<S, T>(src, std::move(images)), {}};
}

/// True when `w` is trivial in exactly one of the source group and the
/// image under the generator assignment, so that no automorphism (indeed
/// no isomorphism onto the image) can extend that assignment.
template <class S, class T>
bool witnesses_non_automorphism(const Word& w, const std::vector<S>& src_gens, const std::vector<T>& images) {
  const bool trivial_src = is_identity_element(evaluate(w, src_gens, identity_like(src_gens.front())));
  const bool trivial_img = is_identity_element(evaluate(w, images, identity_like(images.front())));
  return trivial_src != trivial_img;
}

// ---------------------------------------------------------------------------
// String C-group tests.

template <class E>
void require_involutions(const std::vector<E>& gens) {
  for (const auto& g : gens) {
    if (is_identity_element(g) || !is_identity_element(compose(g, g))) {
      throw std::invalid_argument("generator is not an involution: " + g.to_string());
    }
  }
}

template <class E>
bool string_condition(const std::vector<E>& gens) {
  require_involutions(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 2; j < gens.size(); ++j) {
      const E p = compose(gens[i], gens[j]);
      if (!is_identity_element(compose(p, p))) return false;
    }
  }
  return true;
}

/// <g_i : i in I> meets <g_i : i in J> exactly in <g_i : i in I cap J>,
/// for every pair of index subsets, by explicit subgroup enumeration.
template <class E>
bool intersection_condition(const std::vector<E>& gens, std::size_t cap = kDefaultCap) {
  require_involutions(gens);
  const std::size_t r = gens.size();
  if (r > 16) throw std::invalid_argument("too many generators");
  const auto whole = FiniteGroup<E>::closure(gens, {}, cap);
  const E id = whole.identity();
  std::vector<std::vector<bool>> member(std::size_t{1} << r, std::vector<bool>(whole.order(), false));
  for (std::size_t mask = 0; mask < member.size(); ++mask) {
    std::vector<E> sub{id};
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) sub.push_back(gens[i]);
    }
    const auto h = FiniteGroup<E>::closure(sub, {}, cap);
    for (const auto& x : h.elements()) member[mask][whole.index_of(x)] = true;
  }
  for (std::size_t a = 0; a < member.size(); ++a) {
    for (std::size_t b = a + 1; b < member.size(); ++b) {
      const auto& meet = member[a & b];
      for (std::size_t k = 0; k < whole.order(); ++k) {
        if ((member[a][k] && member[b][k]) != meet[k]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Presentations and coset enumeration.

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;

  /// Freely reduces the relators and checks letters against `generators`.
  static Presentation make(int generators, std::vector<Word> relators, std::vector<std::string> names = {});

  std::string to_json() const;
  static Presentation from_json(const std::string& text);
};

template <class E>
bool verify_relators(const std::vector<E>& assignment, const Presentation& p) {
  if (static_cast<int>(assignment.size()) != p.generators) {
    throw std::invalid_argument("assignment does not cover the generators");
  }
  const E id = identity_like(assignment.front());
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return evaluate(r, assignment, id) == id; });
}

/// Completed coset table: row c, column 2i is generator i+1 and column
/// 2i+1 its inverse. Cosets are numbered in first-appearance order with
/// the subgroup itself as coset 0.
class CosetTable {
 public:
  CosetTable(int generators, std::vector<std::vector<int>> rows, std::vector<Word> subgroup_words)
      : generators_(generators), rows_(std::move(rows)), subgroup_words_(std::move(subgroup_words)) {}

  int index() const { return static_cast<int>(rows_.size()); }
  int generators() const { return generators_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<Word>& subgroup_words() const { return subgroup_words_; }

  int act(int coset, int letter) const {
    return rows_[coset][2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0)];
  }
  int trace(int coset, const Word& w) const {
    for (int letter : w) coset = act(coset, letter);
    return coset;
  }
  /// Permutation of the cosets induced by generator g (0-based).
  Perm generator_action(int g) const;
  std::vector<Perm> generator_actions() const;

 private:
  int generators_;
  std::vector<std::vector<int>> rows_;
  std::vector<Word> subgroup_words_;
};

/// Relator-driven (HLT) coset enumeration with coincidence processing.
/// Throws CapExceeded once more than `cap` cosets are live or defined
/// beyond the cap budget.
CosetTable enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup_words,
                            std::size_t cap = kDefaultCap);

/// Table invariants: closed, transitive, relators trace the identity on
/// every coset, subgroup words fix coset 0.
bool table_is_consistent(const CosetTable& t, const Presentation& p);

/// The group defined by `p`, as its regular permutation representation.
PermGroup presented_group(const Presentation& p, std::size_t cap = kDefaultCap);

/// True when g_i -> h_i extends to an isomorphism <g> -> <h>, decided by
/// closing the paired generators in the direct product.
template <class A, class B>
bool generator_map_is_isomorphism(const std::vector<A>& g, const std::vector<B>& h, std::size_t cap = kDefaultCap) {
  if (g.size() != h.size()) return false;
  std::vector<Pair<A, B>> paired;
  for (std::size_t i = 0; i < g.size(); ++i) paired.push_back({g[i], h[i]});
  const auto ga = FiniteGroup<A>::closure(g, {}, cap);
  const auto hb = FiniteGroup<B>::closure(h, {}, cap);
  if (ga.order() != hb.order()) return false;
  const auto graph = FiniteGroup<Pair<A, B>>::closure(paired, {}, cap);
  return graph.order() == ga.order();
}

// ---------------------------------------------------------------------------
// Signed-permutation specifics.

std::set<PointVec> orbit(const ConcreteGroup& g, const PointVec& p);
ConcreteGroup stabilizer(const ConcreteGroup& g, const PointVec& p);
ConcreteGroup setwise_stabilizer(const ConcreteGroup& g, const std::set<PointVec>& s);

}  // namespace forge
