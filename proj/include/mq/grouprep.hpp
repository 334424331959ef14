#ifndef MQ_GROUPREP_HPP
#define MQ_GROUPREP_HPP

#include <cstdint>
#include <vector>

#include "mq/fpmat.hpp"
#include "mq/green.hpp"
#include "mq/monoid.hpp"

namespace mq {

/// Irreducible character table of a maximal subgroup over F_p, where
/// p = 1 mod exp(G) so that F_p is a splitting field of coprime
/// characteristic.  Rows are sorted by degree, then by value sequence, so
/// the table is canonical for a fixed prime.
struct CharTable {
  std::int64_t p = 0;
  MaxSubgroup G;
  int numClasses = 0;
  std::vector<int> classOf;    // group position -> class id
  std::vector<int> classRep;   // class id -> group position
  std::vector<int> classSize;
  std::vector<int> classInv;   // class id -> class of the inverses
  std::vector<std::vector<std::int64_t>> chars;  // rows = irreducibles
  std::vector<int> degree;     // lifted integer degrees

  int rows() const { return static_cast<int>(chars.size()); }
  /// Value of row r at the class of group position g.
  std::int64_t value(int r, int gpos) const { return chars[r][classOf[gpos]]; }
};

/// Dixon's class-matrix eigenvector method.  The seed feeds the fallback
/// random splitting combinations; the primary pass over class matrices is
/// deterministic.
CharTable char_table(const MonoidTable& M, const MaxSubgroup& G,
                     std::int64_t p, std::uint64_t seed = 1);

/// Index of the contragredient of row r: the row with values
/// chi(c) = chars[r][classInv[c]].
int contragredient_row(const CharTable& T, int r);

/// lcm of element orders.
long long group_exponent(const MonoidTable& M, const MaxSubgroup& G);

/// Smallest prime p = 1 mod lcm_exponent with p > lower_bound.
std::int64_t choose_prime(long long lcm_exponent, std::int64_t lower_bound);

/// Class function on a product group G_Y x G_X, stored per class pair.
/// The module convention is left G_Y x G_X action (g,h)·m = g m h^{-1}.
struct PairCharacter {
  std::int64_t p = 0;
  int classesY = 0, classesX = 0;
  std::vector<std::int64_t> values;  // row-major [cY][cX]

  std::int64_t at(int cy, int cx) const { return values[std::size_t(cy) * classesX + cx]; }
  std::int64_t& at(int cy, int cx) { return values[std::size_t(cy) * classesX + cx]; }
};

/// Character of V ⊗ U^*: (g,h) -> chi_V(g) · chi_U(h^{-1}).
PairCharacter pair_char_of_irreps(const CharTable& tY, int rowV,
                                  const CharTable& tX, int rowU);

/// Inner product <moduleChar, irrepChar> computed in F_p and lifted to
/// the unique integer in [0, dimBound]; requires p > 2*dimBound.
long long multiplicity(const PairCharacter& moduleChar,
                       const PairCharacter& irrepChar, const CharTable& tY,
                       const CharTable& tX, long long dimBound);

}  // namespace mq

#endif
