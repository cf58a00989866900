#include "forge/groupcore.hpp"

namespace forge {

namespace {

// Coset enumeration after Hasselgrove-Leech-Trotter: every live coset is
// scanned under every relator, filling gaps by new definitions, and the
// deductions and coincidences this produces are processed immediately.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap) : p_(p), cols_(2 * p.generators), cap_(cap) {
    if (p.generators <= 0) throw std::invalid_argument("presentation has no generators");
    new_coset();
  }

  CosetTable run(const std::vector<Word>& subgroup_words) {
    const auto subgroup = reduce_all(subgroup_words);
    const auto relators = reduce_all(p_.relators);
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (int alpha = 0; alpha < static_cast<int>(forward_.size()); ++alpha) {
      for (const auto& r : relators) {
        if (!live(alpha)) break;
        scan_and_fill(alpha, r);
      }
      if (!live(alpha)) continue;
      for (int x = 0; x < cols_; ++x) {
        if (at(alpha, x) < 0) define(alpha, x);
      }
    }
    return standardize(subgroup_words);
  }

 private:
  static std::vector<Word> reduce_all(const std::vector<Word>& words) {
    std::vector<Word> out;
    for (const auto& w : words) out.push_back(free_reduce(w));
    return out;
  }

  static int column(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }
  static int inv(int col) { return col ^ 1; }

  int& at(int coset, int col) { return table_[static_cast<std::size_t>(coset) * cols_ + col]; }
  bool live(int c) const { return forward_[c] == c; }

  int new_coset() {
    if (forward_.size() >= cap_) throw CapExceeded(cap_);
    const int c = static_cast<int>(forward_.size());
    forward_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    return c;
  }

  void define(int c, int col) {
    const int b = new_coset();
    at(c, col) = b;
    at(b, inv(col)) = c;
  }

  void scan_and_fill(int alpha, const Word& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, column(w[i])) >= 0) f = at(f, column(w[i++]));
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, inv(column(w[j]))) >= 0) b = at(b, inv(column(w[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, column(w[i])) = b;
        at(b, inv(column(w[i]))) = f;
        return;
      }
      define(f, column(w[i]));
    }
  }

  int rep(int k) {
    int root = k;
    while (forward_[root] != root) root = forward_[root];
    while (forward_[k] != root) {
      const int next = forward_[k];
      forward_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    forward_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int gamma = queue[q];
      for (int x = 0; x < cols_; ++x) {
        const int delta = at(gamma, x);
        if (delta < 0) continue;
        at(delta, inv(x)) = -1;
        const int mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inv(x)) >= 0) {
          merge(mu, at(nu, inv(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
        }
      }
    }
  }

  CosetTable standardize(const std::vector<Word>& subgroup_words) {
    std::vector<int> relabel(forward_.size(), -1);
    std::vector<int> order{0};
    relabel[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < cols_; ++x) {
        const int t = at(order[k], x);
        if (t < 0 || !live(t)) throw std::logic_error("coset table incomplete after enumeration");
        if (relabel[t] < 0) {
          relabel[t] = static_cast<int>(order.size());
          order.push_back(t);
        }
      }
    }
    std::vector<std::vector<int>> rows(order.size(), std::vector<int>(cols_));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < cols_; ++x) rows[k][x] = relabel[at(order[k], x)];
    }
    return CosetTable(p_.generators, std::move(rows), subgroup_words);
  }

  const Presentation& p_;
  int cols_;
  std::size_t cap_;
  std::vector<int> table_;
  std::vector<int> forward_;
};

}  // namespace

CosetTable enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup_words, std::size_t cap) {
  for (const auto& w : subgroup_words) {
    for (int letter : w) {
      if (letter == 0 || std::abs(letter) > p.generators) throw std::invalid_argument("subgroup word letter out of range");
    }
  }
  return Enumerator(p, cap).run(subgroup_words);
}

Perm CosetTable::generator_action(int g) const {
  std::vector<int> images(rows_.size());
  for (std::size_t c = 0; c < rows_.size(); ++c) images[c] = rows_[c][2 * g];
  return Perm(std::move(images));
}

std::vector<Perm> CosetTable::generator_actions() const {
  std::vector<Perm> out;
  for (int g = 0; g < generators_; ++g) out.push_back(generator_action(g));
  return out;
}

bool table_is_consistent(const CosetTable& t, const Presentation& p) {
  const int n = t.index();
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < 2 * t.generators(); ++x) {
      const int d = t.rows()[c][x];
      if (d < 0 || d >= n || t.rows()[d][x ^ 1] != c) return false;
    }
  }
  std::vector<bool> reached(n, false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int d : t.rows()[c]) {
      if (!reached[d]) {
        reached[d] = true;
        stack.push_back(d);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;
  for (const auto& r : p.relators) {
    for (int c = 0; c < n; ++c) {
      if (t.trace(c, r) != c) return false;
    }
  }
  for (const auto& w : t.subgroup_words()) {
    if (t.trace(0, w) != 0) return false;
  }
  return true;
}

PermGroup presented_group(const Presentation& p, std::size_t cap) {
  const auto table = enumerate_cosets(p, {}, cap);
  return PermGroup::closure(table.generator_actions(), p.names, cap);
}

}  // namespace forge
