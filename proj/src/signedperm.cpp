#include "forge/signedperm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace forge {

DimensionMismatch::DimensionMismatch(int expected, int actual)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                            std::to_string(actual)) {}

PointVec make_point(std::initializer_list<long long> coords) {
  PointVec p;
  p.reserve(coords.size());
  for (long long c : coords) p.emplace_back(c);
  return p;
}

std::string to_string(const PointVec& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

SignedPerm::SignedPerm(std::vector<int> signs, std::vector<int> images) {
  if (signs.size() != images.size()) {
    throw DimensionMismatch(static_cast<int>(images.size()), static_cast<int>(signs.size()));
  }
  const int n = static_cast<int>(images.size());
  if (n > 255) throw std::invalid_argument("signed permutation dimension too large");
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("image table is not a permutation");
    seen[x] = true;
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
  images_.assign(images.begin(), images.end());
  signs_.assign(signs.begin(), signs.end());
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return SignedPerm(std::vector<int>(n, 1), std::move(images));
}

SignedPerm SignedPerm::from_cycles(int n, std::vector<int> signs,
                                   const std::vector<std::vector<int>>& cycles) {
  if (signs.empty()) signs.assign(n, 1);
  if (static_cast<int>(signs.size()) != n) throw DimensionMismatch(n, static_cast<int>(signs.size()));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k] - 1;
      const int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) {
        throw std::invalid_argument("cycle entry out of range");
      }
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return SignedPerm(std::move(signs), std::move(images));
}

namespace {

// Reads parenthesized integer groups, ignoring separators between them.
std::vector<std::vector<int>> parse_groups(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');  // U+2212 minus sign
      i += 2;
    } else if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      s.push_back(' ');  // U+00B7 middle dot
      ++i;
    } else if (c == '*' || c == '.') {
      s.push_back(' ');
    } else {
      s.push_back(static_cast<char>(c));
    }
  }

  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    const auto close = s.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis");
    std::vector<int> group;
    std::string body = s.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream is(body);
    int x = 0;
    while (is >> x) group.push_back(x);
    if (!is.eof()) throw ParseError("bad integer in \"" + std::string(text) + "\"");
    groups.push_back(std::move(group));
    i = close + 1;
  }
  return groups;
}

bool looks_like_signs(const std::vector<int>& g, int n) {
  if (static_cast<int>(g.size()) != n || n < 2) return false;
  return std::all_of(g.begin(), g.end(), [](int x) { return x == 1 || x == -1; });
}

}  // namespace

SignedPerm SignedPerm::parse(std::string_view text, int n) {
  auto groups = parse_groups(text);
  std::vector<int> signs;
  std::size_t first = 0;
  if (!groups.empty() && looks_like_signs(groups[0], n)) {
    signs = groups[0];
    first = 1;
  }
  std::vector<std::vector<int>> cycles(groups.begin() + static_cast<std::ptrdiff_t>(first), groups.end());
  try {
    return from_cycles(n, std::move(signs), cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

std::vector<int> SignedPerm::signs() const { return {signs_.begin(), signs_.end()}; }
std::vector<int> SignedPerm::images() const { return {images_.begin(), images_.end()}; }

bool SignedPerm::is_identity() const {
  for (int i = 0; i < dim(); ++i) {
    if (images_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> SignedPerm::matrix() const {
  std::vector<std::vector<int>> m(dim(), std::vector<int>(dim(), 0));
  for (int i = 0; i < dim(); ++i) m[i][images_[i]] = signs_[i];
  return m;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(signs_[i]);
  }
  os << ")·";
  std::vector<bool> seen(dim(), false);
  bool any = false;
  for (int i = 0; i < dim(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ',';
      os << j + 1;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  const int n = a.dim();
  std::vector<int> signs(n), images(n);
  for (int i = 0; i < n; ++i) {
    const int mid = a.image(i);
    images[i] = b.image(mid);
    signs[i] = a.sign(i) * b.sign(mid);
  }
  return SignedPerm(std::move(signs), std::move(images));
}

SignedPerm inverse(const SignedPerm& a) {
  const int n = a.dim();
  std::vector<int> signs(n), images(n);
  for (int i = 0; i < n; ++i) {
    images[a.image(i)] = i;
    signs[a.image(i)] = a.sign(i);
  }
  return SignedPerm(std::move(signs), std::move(images));
}

SignedPerm identity_like(const SignedPerm& a) { return SignedPerm::identity(a.dim()); }

SignedPerm power(const SignedPerm& a, long long k) {
  SignedPerm base = k < 0 ? inverse(a) : a;
  if (k < 0) k = -k;
  SignedPerm result = identity_like(a);
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

SignedPerm conjugate(const SignedPerm& g, const SignedPerm& h) { return inverse(h) * g * h; }

int determinant(const SignedPerm& g) {
  int det = 1;
  for (int i = 0; i < g.dim(); ++i) det *= g.sign(i);
  std::vector<bool> seen(g.dim(), false);
  for (int i = 0; i < g.dim(); ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (int j = i; !seen[j]; j = g.image(j)) {
      seen[j] = true;
      ++length;
    }
    if (length % 2 == 0) det = -det;
  }
  return det;
}

int element_order(const SignedPerm& g) {
  int k = 1;
  for (SignedPerm x = g; !x.is_identity(); x = x * g) ++k;
  return k;
}

PointVec act(const PointVec& p, const SignedPerm& g) {
  if (static_cast<int>(p.size()) != g.dim()) throw DimensionMismatch(g.dim(), static_cast<int>(p.size()));
  PointVec out(p.size());
  for (int i = 0; i < g.dim(); ++i) {
    out[g.image(i)] = g.sign(i) < 0 ? Rational(-p[i]) : p[i];
  }
  return out;
}

SignedPerm block_pair(const SignedPerm& a, const SignedPerm& b) {
  if (a.dim() != 4) throw DimensionMismatch(4, a.dim());
  if (b.dim() != 4) throw DimensionMismatch(4, b.dim());
  std::vector<int> signs(8), images(8);
  for (int i = 0; i < 4; ++i) {
    signs[i] = a.sign(i);
    images[i] = a.image(i);
    signs[i + 4] = b.sign(i);
    images[i + 4] = b.image(i) + 4;
  }
  return SignedPerm(std::move(signs), std::move(images));
}

std::pair<SignedPerm, SignedPerm> split_blocks(const SignedPerm& g) {
  if (g.dim() != 8) throw DimensionMismatch(8, g.dim());
  std::vector<int> sa(4), ia(4), sb(4), ib(4);
  for (int i = 0; i < 4; ++i) {
    if (g.image(i) >= 4 || g.image(i + 4) < 4) {
      throw std::invalid_argument("element does not preserve the two coordinate blocks");
    }
    sa[i] = g.sign(i);
    ia[i] = g.image(i);
    sb[i] = g.sign(i + 4);
    ib[i] = g.image(i + 4) - 4;
  }
  return {SignedPerm(std::move(sa), std::move(ia)), SignedPerm(std::move(sb), std::move(ib))};
}

std::size_t hash_value(const SignedPerm& g) {
  std::size_t h = static_cast<std::size_t>(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    h = h * 131 + static_cast<std::size_t>(g.image(i)) * 2 + (g.sign(i) < 0 ? 1 : 0);
  }
  return h;
}

}  // namespace forge
