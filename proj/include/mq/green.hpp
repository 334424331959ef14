#ifndef MQ_GREEN_HPP
#define MQ_GREEN_HPP

#include <vector>

#include "mq/bitset.hpp"
#include "mq/monoid.hpp"

namespace mq {

/// The R, L and J partitions of a monoid together with the J-order and
/// regularity data.  Class ids are assigned by smallest member, so the
/// numbering is reproducible.
struct GreenData {
  std::vector<int> rClass, lClass, jClass;  // element -> class id
  int numR = 0, numL = 0, numJ = 0;
  std::vector<std::vector<int>> jMembers;
  std::vector<Bitset> jIdeal;            // two-sided ideal M m M per J-class
  std::vector<std::vector<char>> jLeq;   // jLeq[a][b] : ideal(a) ⊆ ideal(b)
  std::vector<char> jClassRegular;       // class contains an idempotent
  std::vector<char> regular;             // per element: m ∈ mMm
};

GreenData green(const MonoidTable& M);

/// Right ideal mM as a bitset.
Bitset right_ideal(const MonoidTable& M, int m);
/// Left ideal Mm.
Bitset left_ideal(const MonoidTable& M, int m);
/// Two-sided ideal MmM.
Bitset two_sided_ideal(const MonoidTable& M, int m);

std::vector<int> idempotents(const MonoidTable& M);

/// Conjugacy classes of idempotents: e, f are conjugate iff MeM = MfM.
/// Classes are returned sorted by smallest member.
std::vector<std::vector<int>> conjugacy_classes_idem(const MonoidTable& M,
                                                     const GreenData& G);

/// Maximal subgroup at an idempotent e: the group of units of eMe.
struct MaxSubgroup {
  int e = 0;
  std::vector<int> elems;  // sorted monoid element indices; elems contains e
  std::vector<int> inv;    // position -> position of the inverse
  std::vector<int> pos_of; // monoid element -> position, or -1

  int size() const { return static_cast<int>(elems.size()); }
  int pos(int melt) const { return pos_of[melt]; }
};

MaxSubgroup maximal_subgroup(const MonoidTable& M, int e);

/// Elements m with m ∉ mMm.
std::vector<int> null_elements(const MonoidTable& M);

/// For M in DG: the unique idempotents in the minimal ideals of the left
/// and right stabilizers of m; e_L(m)·m = m and m·e_R(m) = m.
std::pair<int, int> stab_idempotents(const MonoidTable& M, int m);

/// Partition of an R-trivial monoid by identical idempotent right
/// stabilizer sets, indexed by the support-lattice element of the class's
/// idempotents.
struct TildeLClasses {
  std::vector<int> latticeOf;              // element -> lattice index
  std::vector<std::vector<int>> members;   // per lattice index
};

struct SupportLattice;  // defined in lattice.hpp
TildeLClasses tilde_L_classes(const MonoidTable& M, const GreenData& G,
                              const SupportLattice& L);

}  // namespace mq

#endif
