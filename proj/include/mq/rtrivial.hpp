#ifndef MQ_RTRIVIAL_HPP
#define MQ_RTRIVIAL_HPP

#include <vector>

#include "mq/green.hpp"
#include "mq/lattice.hpp"
#include "mq/monoid.hpp"

namespace mq {

/// Projective indecomposable module of an R-trivial monoid algebra,
/// realized by the partial action m·n = mn when mn stays in the class
/// basis and 0 otherwise.
struct ProjModule {
  int lattice = 0;
  std::vector<int> basis;  // the class members, sorted
  /// action(m, i): index into basis or -1 for zero.
  std::vector<std::vector<int>> action;  // [m][i]
};

ProjModule projective(const MonoidTable& M, const GreenData& G,
                      const SupportLattice& L, const TildeLClasses& T, int X);

/// m_{X,Y} = #{n in class Y : e_X n = n}.
std::vector<std::vector<long long>> fixed_point_counts(
    const MonoidTable& M, const SupportLattice& L, const TildeLClasses& T);

struct CartanMatrix {
  std::vector<std::vector<long long>> c;  // indexed by lattice elements
};

/// Möbius inversion of the fixed-point matrix over the support lattice.
CartanMatrix cartan(const MonoidTable& M, const GreenData& G,
                    const SupportLattice& L);

}  // namespace mq

#endif
