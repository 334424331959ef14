#ifndef MQ_LATTICE_HPP
#define MQ_LATTICE_HPP

#include <vector>

#include "mq/bitset.hpp"
#include "mq/green.hpp"
#include "mq/monoid.hpp"

namespace mq {

/// The lattice of primary ideals of a finite monoid with a fixed choice
/// of idempotent generator per element, the support map σ, the meet table
/// and the Möbius function.  Elements are sorted by ideal size (bottom
/// first) with smallest-idempotent tie break.
struct SupportLattice {
  int k = 0;
  std::vector<Bitset> ideal;
  std::vector<int> idem;  // chosen e_X, the smallest idempotent generating X
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> meetTab;
  std::vector<std::vector<long long>> mu;  // mu[Z][X], zero unless Z <= X
  std::vector<int> sigma;                  // element -> lattice index
  int top = 0, bottom = 0;
  bool sigmaIsHom = false;  // σ(mn) = σ(m) ∧ σ(n) verified exhaustively

  bool le(int a, int b) const { return leq[a][b]; }
  int meet(int a, int b) const { return meetTab[a][b]; }
};

SupportLattice support_lattice(const MonoidTable& M, const GreenData& G);

/// Recomputes the Möbius table from the order alone; support_lattice
/// already fills it, this is the standalone recursion.
std::vector<std::vector<long long>> moebius(const SupportLattice& L);

/// The maximal semilattice-of-groups image: pairs (X, g ∈ G_X) with
/// product (X,g)(Y,h) = (X∧Y, ρ_{X∧Y}(gh)), together with the projection
/// σ_*.  Requires each conjugacy class of idempotents to be a
/// subsemigroup so that the retractions are multiplicative.
struct CliffordImage {
  MonoidTable monoid;
  std::vector<int> latticeOf;   // image element -> lattice index
  std::vector<int> groupElt;    // image element -> monoid element of G_X
  std::vector<int> sigmaStar;   // monoid element -> image element
};

CliffordImage clifford_image(const MonoidTable& M, const GreenData& G,
                             const SupportLattice& L);

/// ρ_X(m) = e_X m e_X when σ(m) >= X, otherwise -1 (representing 0).
int rho(const MonoidTable& M, const SupportLattice& L, int X, int m);

/// Character of M inflated from a class function chi on G_{e_X}:
/// m ↦ chi(e_X m e_X) when σ(m) >= X, else 0.  chi is indexed by monoid
/// element; entries for elements outside G_X are ignored.
std::vector<long long> lifted_character(const MonoidTable& M,
                                        const SupportLattice& L, int X,
                                        const std::vector<long long>& chi);

void require_rectangular(const MonoidTable& M);

}  // namespace mq

#endif
