#include "mq/rtrivial.hpp"

#include <algorithm>

#include "mq/error.hpp"

namespace mq {

ProjModule projective(const MonoidTable& M, const GreenData&,
                      const SupportLattice&, const TildeLClasses& T, int X) {
  ProjModule P;
  P.lattice = X;
  P.basis = T.members[X];
  std::sort(P.basis.begin(), P.basis.end());
  std::vector<int> pos(M.n, -1);
  for (std::size_t i = 0; i < P.basis.size(); ++i)
    pos[P.basis[i]] = static_cast<int>(i);
  P.action.assign(M.n, std::vector<int>(P.basis.size(), -1));
  for (int m = 0; m < M.n; ++m)
    for (std::size_t i = 0; i < P.basis.size(); ++i)
      P.action[m][i] = pos[M.at(m, P.basis[i])];
  return P;
}

std::vector<std::vector<long long>> fixed_point_counts(
    const MonoidTable& M, const SupportLattice& L, const TildeLClasses& T) {
  std::vector<std::vector<long long>> out(
      L.k, std::vector<long long>(L.k, 0));
  for (int X = 0; X < L.k; ++X) {
    int e = L.idem[X];
    for (int Y = 0; Y < L.k; ++Y)
      for (int n : T.members[Y])
        if (M.at(e, n) == n) ++out[X][Y];
  }
  return out;
}

CartanMatrix cartan(const MonoidTable& M, const GreenData& G,
                    const SupportLattice& L) {
  TildeLClasses T = tilde_L_classes(M, G, L);
  auto m = fixed_point_counts(M, L, T);
  CartanMatrix C;
  C.c.assign(L.k, std::vector<long long>(L.k, 0));
  for (int X = 0; X < L.k; ++X)
    for (int Y = 0; Y < L.k; ++Y) {
      long long s = 0;
      for (int Z = 0; Z < L.k; ++Z)
        if (L.le(Z, X)) s += m[Z][Y] * L.mu[Z][X];
      if (s < 0)
        throw Error(ErrorKind::NegativeEntry,
                    "negative Cartan entry: internal inconsistency");
      C.c[X][Y] = s;
    }
  // the inversion must reproduce the fixed-point counts
  for (int X = 0; X < L.k; ++X)
    for (int Y = 0; Y < L.k; ++Y) {
      long long s = 0;
      for (int Z = 0; Z < L.k; ++Z)
        if (L.le(Z, X)) s += C.c[Z][Y];
      if (s != m[X][Y])
        throw Error(ErrorKind::Internal, "Moebius inversion check failed");
    }
  return C;
}

}  // namespace mq
