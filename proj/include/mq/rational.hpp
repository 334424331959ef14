#ifndef MQ_RATIONAL_HPP
#define MQ_RATIONAL_HPP

#include <gmpxx.h>

#include <vector>

#include "mq/green.hpp"
#include "mq/lattice.hpp"
#include "mq/monoid.hpp"
#include "mq/quiver.hpp"

namespace mq {

using Rat = mpq_class;

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Rat(0)) {}
  Rat& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

/// In-place reduced row echelon form over the rationals; returns pivot
/// columns.
std::vector<int> rat_rref(RatMat& A);
int rat_rank(RatMat A);
/// Rows span {x : A x = 0}.
RatMat rat_nullspace(const RatMat& A);

/// Subspace of the monoid algebra over Q, basis in reduced echelon form
/// in the element coordinates.
struct RationalSubspace {
  RatMat basis;
  int dim() const { return basis.rows; }
  bool contains(std::vector<Rat> v) const;
  bool equals(const RationalSubspace& o) const;
};

RationalSubspace make_subspace(RatMat rows);

/// Product in the monoid algebra.
std::vector<Rat> alg_mul(const MonoidTable& M, const std::vector<Rat>& u,
                         const std::vector<Rat>& v);

/// Radical of QM via the trace form of the regular representation:
/// the nullspace of the Gram matrix (a,b) -> #fixed points of left
/// multiplication by ab.
RationalSubspace radical(const MonoidTable& M);

RationalSubspace subspace_product(const MonoidTable& M,
                                  const RationalSubspace& A,
                                  const RationalSubspace& B);

/// One representative monoid element per fiber of the semilattice-of-
/// groups projection; the pairs (m, rep) with m != rep span its kernel.
std::vector<std::pair<int, int>> sigma_star_fiber_differences(
    const MonoidTable& M, const SupportLattice& L);

/// Least k <= maxPower with span{k-fold products of the difference
/// vectors} = 0, or -1.  Works modulo a prime larger than twice the
/// largest possible coefficient 2^maxPower, so vanishing mod p is
/// vanishing over Z.
int nilpotency_degree(const MonoidTable& M,
                      const std::vector<std::pair<int, int>>& diffGens,
                      int maxPower);

/// dim of derivations {d : d(mn) = chiV(m) d(n) + d(m) chiU(n)} minus the
/// inner ones, for one-dimensional characters given by integer values per
/// element.
long long ext1_onedim(const MonoidTable& M, const std::vector<int>& chiU,
                      const std::vector<int>& chiV);

/// sigma-indicator character of a lattice element: m -> [sigma(m) >= X].
std::vector<int> sigma_indicator(const SupportLattice& L, int X);

/// Orthogonal idempotents of QM summing to 1, lifted by Newton iteration
/// from the Möbius combinations of the chosen idempotents.  Requires all
/// maximal subgroups trivial (split basic case).
std::vector<std::vector<Rat>> lift_idempotents(const MonoidTable& M,
                                               const GreenData& G,
                                               const SupportLattice& L);

/// Arrow counts from the radical-square quotient sandwiched between the
/// lifted idempotents.  Vertices are lattice elements.
QuiverGraph quiver_gabriel_oracle(const Analysis& A);

/// Arrow counts from the derivation spaces of the one-dimensional
/// sigma-indicator characters.  Vertices are lattice elements.
QuiverGraph quiver_ext1_oracle(const Analysis& A);

void require_da(const Analysis& A);

}  // namespace mq

#endif
