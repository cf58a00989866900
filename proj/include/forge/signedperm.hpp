#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int expected, int actual);
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of E^n with exact coordinates.
using PointVec = std::vector<Rational>;

PointVec make_point(std::initializer_list<long long> coords);
std::string to_string(const PointVec& p);

/// Element of the hyperoctahedral group B_n, stored as the factorization
/// g = e.mu of a sign vector e and a permutation mu of the coordinates.
///
/// Elements act on row vectors from the right: (x)g first multiplies
/// coordinate i by sign(i) and then moves it to position image(i).
/// Products are applied left to right, so (x)(ab) = ((x)a)b, matching
/// multiplication of the signed permutation matrices.
class SignedPerm {
 public:
  SignedPerm() = default;

  /// `signs` holds +1/-1 per coordinate; `images` is the 0-based image
  /// table of the permutation.
  SignedPerm(std::vector<int> signs, std::vector<int> images);

  static SignedPerm identity(int n);

  /// Builds from a sign vector and 1-based cycles, e.g. signs (-1,1,1,1)
  /// and cycles {{4,3,2,1}}. An empty sign vector means all +1.
  static SignedPerm from_cycles(int n, std::vector<int> signs,
                                const std::vector<std::vector<int>>& cycles);

  /// Parses "(s1,...,sn)·(c1,c2,...)(...)". The sign vector, the separator
  /// (either "·" or "*") and the cycles are each optional, so "(1,4,2)",
  /// "(-1,-1,1,1)(1,3,2)" and "()" are all accepted.
  static SignedPerm parse(std::string_view text, int n);

  int dim() const { return static_cast<int>(images_.size()); }
  int sign(int i) const { return signs_[i]; }
  int image(int i) const { return images_[i]; }
  std::vector<int> signs() const;
  std::vector<int> images() const;

  bool is_identity() const;

  /// Dense matrix with entry sign(i) at (i, image(i)).
  std::vector<std::vector<int>> matrix() const;

  /// Canonical text form: the sign vector, "·", then the cycles of length
  /// at least two, each starting from its least point. Identity
  /// permutation prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  // Declaration order fixes the total order used for canonical coset
  // representatives: by permutation first, then by signs.
  std::vector<std::uint8_t> images_;
  std::vector<std::int8_t> signs_;
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& a);
SignedPerm power(const SignedPerm& a, long long k);
SignedPerm identity_like(const SignedPerm& a);
inline SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) { return compose(a, b); }

/// h^-1 g h.
SignedPerm conjugate(const SignedPerm& g, const SignedPerm& h);

/// Product of the signs times the parity of the permutation.
int determinant(const SignedPerm& g);

/// Smallest k > 0 with g^k = 1.
int element_order(const SignedPerm& g);

/// p times the matrix of g.
PointVec act(const PointVec& p, const SignedPerm& g);

/// The element of B_8 acting as a on coordinates 1..4 and as b on 5..8.
/// Both factors must have dimension 4.
SignedPerm block_pair(const SignedPerm& a, const SignedPerm& b);

/// Inverse of block_pair for block-diagonal elements: returns the two
/// diagonal blocks, throwing if g mixes the two halves.
std::pair<SignedPerm, SignedPerm> split_blocks(const SignedPerm& g);

std::size_t hash_value(const SignedPerm& g);

}  // namespace forge

template <>
struct std::hash<forge::SignedPerm> {
  std::size_t operator()(const forge::SignedPerm& g) const noexcept { return forge::hash_value(g); }
};
