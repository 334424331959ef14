#ifndef MQ_VXY_INTERNAL_HPP
#define MQ_VXY_INTERNAL_HPP

#include <vector>

#include "mq/quiver.hpp"

namespace mq::detail {

/// A finite-dimensional G_Y x G_X module over F_p with action matrices at
/// class-pair representatives.
struct PairModule {
  int dim = 0;
  std::vector<FpMat> actions;  // cy * classesX + cx
  PairCharacter character;
};

/// Derivation-representing module for comparable lattice elements with
/// the source strictly below the target (X < Y), built on A.
PairModule comparable_up_module(const Analysis& A, const QuiverSetup& S, int X,
                                int Y);

PairModule incomparable_module(const Analysis& A, const QuiverSetup& S, int X,
                               int Y);

PairModule equal_module(const Analysis& A, const QuiverSetup& S, int X);

/// Permutation module on an invariant subset of e_Y M e_X with the
/// direct (g,h)·m = g m h^{-1} action; used for singleton idempotent
/// classes where no renormalization is needed.
PairModule perm_module_on_set(const Analysis& A, const QuiverSetup& S, int X,
                              int Y, const std::vector<int>& set);

/// mult[u][v]: multiplicity of (row v of tY) ⊗ (row u of tX)^* in V.
std::vector<std::vector<long long>> decompose(const PairModule& V,
                                              const CharTable& tY,
                                              const CharTable& tX);

/// Equivalence classes used by the band and orthogroup computations on
/// the set e_Y L_f (f the renormalized lower idempotent).
struct OrthoClasses {
  std::vector<int> set;       // elements of e_Y L_f, sorted
  std::vector<int> classOf;   // position in set -> class id
  int numClasses = 0;
  int f = 0;                  // renormalized lower idempotent
  std::vector<int> phi;       // G at e_X (positions) -> conjugated elements in G_f
};

OrthoClasses band_orthogroup_classes(const Analysis& A, int X, int Y,
                                     bool band_rule,
                                     const MaxSubgroup* GX /* null for bands */);

/// Opposite-monoid data aligned with A's lattice indexing.
struct OppositeCtx {
  Analysis Aop;
  std::vector<CharTable> tablesOp;
  std::vector<std::vector<int>> dualRow;  // per lattice: row -> contragredient
};

OppositeCtx make_opposite(const Analysis& A, const QuiverSetup& S);

/// Same lattice data on the opposite monoid, without character tables.
Analysis opposite_analysis(const Analysis& A);

}  // namespace mq::detail

#endif
