#include "mq/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mq/error.hpp"

namespace mq {

SupportLattice support_lattice(const MonoidTable& M, const GreenData& G) {
  SupportLattice L;
  // primary ideals are generated by the conjugacy classes of idempotents
  // whose pairwise products stay in the class
  struct Cand {
    int jclass;
    int e;  // smallest idempotent
  };
  std::vector<Cand> cands;
  for (const auto& cls : conjugacy_classes_idem(M, G)) {
    bool closed = true;
    for (int e : cls) {
      for (int f : cls)
        if (G.jClass[M.at(e, f)] != G.jClass[e]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) cands.push_back({G.jClass[cls[0]], cls[0]});
  }
  std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
    int ca = G.jIdeal[a.jclass].count(), cb = G.jIdeal[b.jclass].count();
    if (ca != cb) return ca < cb;
    return a.e < b.e;
  });
  L.k = static_cast<int>(cands.size());
  if (L.k == 0) throw Error(ErrorKind::Internal, "no primary ideals found");
  std::vector<int> latOfJclass(G.numJ, -1);
  for (int i = 0; i < L.k; ++i) {
    L.ideal.push_back(G.jIdeal[cands[i].jclass]);
    L.idem.push_back(cands[i].e);
    latOfJclass[cands[i].jclass] = i;
  }

  L.leq.assign(L.k, std::vector<char>(L.k, 0));
  for (int a = 0; a < L.k; ++a)
    for (int b = 0; b < L.k; ++b) L.leq[a][b] = L.ideal[a].subset_of(L.ideal[b]);
  L.bottom = 0;
  L.top = L.k - 1;
  for (int a = 0; a < L.k; ++a) {
    if (!L.leq[L.bottom][a] || !L.leq[a][L.top])
      throw Error(ErrorKind::Internal, "primary ideals lack top or bottom");
  }

  L.meetTab.assign(L.k, std::vector<int>(L.k, -1));
  for (int a = 0; a < L.k; ++a)
    for (int b = 0; b < L.k; ++b) {
      int best = -1;
      for (int c = 0; c < L.k; ++c)
        if (L.leq[c][a] && L.leq[c][b] && (best < 0 || L.leq[best][c])) best = c;
      // the maximum must dominate every lower bound
      for (int c = 0; c < L.k; ++c)
        if (L.leq[c][a] && L.leq[c][b] && !L.leq[c][best])
          throw Error(ErrorKind::Internal, "meet is not unique");
      L.meetTab[a][b] = best;
    }

  // σ(m): the largest primary ideal contained in MmM.  Scanning from the
  // top of the sorted list finds it; uniqueness is asserted.
  L.sigma.assign(M.n, -1);
  for (int m = 0; m < M.n; ++m) {
    const Bitset& mm = G.jIdeal[G.jClass[m]];
    int best = -1;
    for (int c = L.k - 1; c >= 0; --c)
      if (L.ideal[c].subset_of(mm)) {
        if (best < 0)
          best = c;
        else if (!L.leq[c][best])
          throw Error(ErrorKind::Internal, "sigma is not well defined");
      }
    if (best < 0) throw Error(ErrorKind::Internal, "element has no support");
    L.sigma[m] = best;
  }
  // idempotent-generated classes map to their own ideal
  for (int i = 0; i < L.k; ++i)
    if (L.sigma[L.idem[i]] != i)
      throw Error(ErrorKind::Internal, "support of chosen idempotent is wrong");

  L.sigmaIsHom = true;
  for (int a = 0; a < M.n && L.sigmaIsHom; ++a)
    for (int b = 0; b < M.n; ++b)
      if (L.sigma[M.at(a, b)] != L.meetTab[L.sigma[a]][L.sigma[b]]) {
        L.sigmaIsHom = false;
        break;
      }

  // Möbius recursion mu(X,X) = 1, mu(Z,X) = -sum_{Z<W<=X} mu(W,X)
  L.mu.assign(L.k, std::vector<long long>(L.k, 0));
  for (int X = 0; X < L.k; ++X) {
    L.mu[X][X] = 1;
    for (int Z = X - 1; Z >= 0; --Z) {
      if (!L.leq[Z][X]) continue;
      long long s = 0;
      for (int W = 0; W < L.k; ++W)
        if (W != Z && L.leq[Z][W] && L.leq[W][X]) s += L.mu[W][X];
      L.mu[Z][X] = -s;
    }
  }
  return L;
}

std::vector<std::vector<long long>> moebius(const SupportLattice& L) {
  std::vector<std::vector<long long>> mu(L.k, std::vector<long long>(L.k, 0));
  for (int X = 0; X < L.k; ++X) {
    mu[X][X] = 1;
    for (int Z = X - 1; Z >= 0; --Z) {
      if (!L.leq[Z][X]) continue;
      long long s = 0;
      for (int W = 0; W < L.k; ++W)
        if (W != Z && L.leq[Z][W] && L.leq[W][X]) s += mu[W][X];
      mu[Z][X] = -s;
    }
  }
  return mu;
}

void require_rectangular(const MonoidTable& M) {
  for (int x = 0; x < M.n; ++x)
    for (int y = 0; y < M.n; ++y) {
      int xy = omega(M, M.at(x, y));
      int yx = omega(M, M.at(y, x));
      if (M.at(M.at(xy, yx), xy) != xy)
        throw Error(ErrorKind::NotRectangular,
                    "conjugacy classes of idempotents are not subsemigroups");
    }
}

int rho(const MonoidTable& M, const SupportLattice& L, int X, int m) {
  if (!L.leq[X][L.sigma[m]]) return -1;
  int e = L.idem[X];
  return M.at(M.at(e, m), e);
}

CliffordImage clifford_image(const MonoidTable& M, const GreenData&,
                             const SupportLattice& L) {
  require_rectangular(M);
  CliffordImage C;
  std::vector<MaxSubgroup> groups;
  groups.reserve(L.k);
  for (int X = 0; X < L.k; ++X) groups.push_back(maximal_subgroup(M, L.idem[X]));

  std::map<std::pair<int, int>, int> index;  // (lattice, group element) -> id
  for (int X = 0; X < L.k; ++X)
    for (int g : groups[X].elems) {
      int id = static_cast<int>(C.latticeOf.size());
      index[{X, g}] = id;
      C.latticeOf.push_back(X);
      C.groupElt.push_back(g);
    }
  const int N = static_cast<int>(C.latticeOf.size());
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int Z = L.meetTab[C.latticeOf[i]][C.latticeOf[j]];
      int p = rho(M, L, Z, M.at(C.groupElt[i], C.groupElt[j]));
      if (p < 0) throw Error(ErrorKind::Internal, "retraction undefined");
      t[i][j] = index.at({Z, p});
    }
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i)
    labels[i] =
        "(X" + std::to_string(C.latticeOf[i]) + "," + M.label(C.groupElt[i]) + ")";
  C.monoid = from_table(t, index.at({L.top, M.identity}), labels);
  C.sigmaStar.assign(M.n, -1);
  for (int m = 0; m < M.n; ++m) {
    int X = L.sigma[m];
    C.sigmaStar[m] = index.at({X, rho(M, L, X, m)});
  }
  return C;
}

std::vector<long long> lifted_character(const MonoidTable& M,
                                        const SupportLattice& L, int X,
                                        const std::vector<long long>& chi) {
  require_rectangular(M);
  std::vector<long long> out(M.n, 0);
  for (int m = 0; m < M.n; ++m) {
    int p = rho(M, L, X, m);
    if (p >= 0) out[m] = chi[p];
  }
  return out;
}

}  // namespace mq
