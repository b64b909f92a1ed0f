#pragma once

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace weylpol {

/// Permutation of 1..n in one-line notation.
struct Permutation {
  std::vector<int> p;

  Permutation() = default;
  explicit Permutation(std::vector<int> v) : p(std::move(v)) {}
  static Permutation identity(int n);
  static Permutation longest(int n);

  int n() const { return static_cast<int>(p.size()); }
  int operator()(int i) const { return p[i - 1]; }
  /// Number of inversions.
  int length() const;
  /// Swap the values at positions i and j of the one-line notation.
  Permutation swapped(int i, int j) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Bruhat cover π → π′ = π(i,j), with l(π′) = l(π) − 1 and multiplicity
/// r = π(i) − π(j).
struct ArrowPair {
  Permutation source, target;
  int i = 0, j = 0;
  int r = 0;

  friend auto operator<=>(const ArrowPair&, const ArrowPair&) = default;
};

struct SignatureTable {
  int n = 0;
  std::map<std::pair<Permutation, Permutation>, int> signs;

  int sign(const Permutation& from, const Permutation& to) const;
};

struct Square {
  ArrowPair top_left, left_bottom, top_right, right_bottom;
};

/// All Bruhat covers in S_n, ordered by l(source) descending, then source,
/// then target (lexicographic one-line notation).
std::vector<ArrowPair> arrow_pairs(int n);

/// Cover from source to target if one exists.
ArrowPair make_arrow(const Permutation& source, const Permutation& target);

/// All squares w1→w2→w4, w1→w3→w4 with w2 < w3.
std::vector<Square> squares(int n);

/// Chain from the identity to the longest element by elementary position
/// swaps, following the blocks [s_{n-1}], [s_{n-2},s_{n-1}], ...,
/// [s_1,...,s_{n-1}].
std::vector<Permutation> canonical_chain(int n);

/// Lower Bruhat interval {v : v <= w}, including w.
std::vector<Permutation> lower_interval(const Permutation& w);

/// The Akin-normalized BGG signature, built inductively along
/// canonical_chain(n).
SignatureTable akin_signature(int n);

/// True iff every square's four signs multiply to -1.
bool verify_square_property(const SignatureTable& t);

}  // namespace weylpol
