#include "mq/rational.hpp"

#include <algorithm>
#include <map>

#include "mq/error.hpp"
#include "mq/fpmat.hpp"

namespace mq {

std::vector<int> rat_rref(RatMat& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int sel = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c) != 0) {
        // prefer small pivots to limit coefficient growth
        if (sel < 0 || mpz_cmpabs(A.at(i, c).get_num().get_mpz_t(), A.at(sel, c).get_num().get_mpz_t()) < 0)
          sel = i;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < A.cols; ++j) swap(A.at(sel, j), A.at(r, j));
    Rat inv = 1 / A.at(r, c);
    for (int j = c; j < A.cols; ++j) A.at(r, j) *= inv;
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || A.at(i, c) == 0) continue;
      Rat f = A.at(i, c);
      for (int j = c; j < A.cols; ++j) A.at(i, j) -= f * A.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rat_rank(RatMat A) { return static_cast<int>(rat_rref(A).size()); }

RatMat rat_nullspace(const RatMat& A0) {
  RatMat A = A0;
  auto pivots = rat_rref(A);
  std::vector<char> isPivot(A.cols, 0);
  for (int c : pivots) isPivot[c] = 1;
  std::vector<int> freeCols;
  for (int c = 0; c < A.cols; ++c)
    if (!isPivot[c]) freeCols.push_back(c);
  RatMat N(static_cast<int>(freeCols.size()), A.cols);
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    N.at(static_cast<int>(k), freeCols[k]) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      N.at(static_cast<int>(k), pivots[r]) = -A.at(static_cast<int>(r), freeCols[k]);
  }
  return N;
}

RationalSubspace make_subspace(RatMat rows) {
  rat_rref(rows);
  RationalSubspace S;
  int nonzero = 0;
  for (int i = 0; i < rows.rows; ++i) {
    bool z = true;
    for (int c = 0; c < rows.cols; ++c)
      if (rows.at(i, c) != 0) {
        z = false;
        break;
      }
    if (!z) ++nonzero;
  }
  S.basis = RatMat(nonzero, rows.cols);
  int k = 0;
  for (int i = 0; i < rows.rows; ++i) {
    bool z = true;
    for (int c = 0; c < rows.cols; ++c)
      if (rows.at(i, c) != 0) {
        z = false;
        break;
      }
    if (z) continue;
    for (int c = 0; c < rows.cols; ++c) S.basis.at(k, c) = rows.at(i, c);
    ++k;
  }
  return S;
}

bool RationalSubspace::contains(std::vector<Rat> v) const {
  // reduce against the echelon basis
  for (int i = 0; i < basis.rows; ++i) {
    int lead = -1;
    for (int c = 0; c < basis.cols; ++c)
      if (basis.at(i, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    if (v[lead] == 0) continue;
    Rat f = v[lead] / basis.at(i, lead);
    for (int c = lead; c < basis.cols; ++c) v[c] -= f * basis.at(i, c);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool RationalSubspace::equals(const RationalSubspace& o) const {
  if (dim() != o.dim() || basis.cols != o.basis.cols) return false;
  for (int i = 0; i < o.basis.rows; ++i) {
    std::vector<Rat> v(basis.cols);
    for (int c = 0; c < basis.cols; ++c) v[c] = o.basis.at(i, c);
    if (!contains(std::move(v))) return false;
  }
  return true;
}

std::vector<Rat> alg_mul(const MonoidTable& M, const std::vector<Rat>& u,
                         const std::vector<Rat>& v) {
  std::vector<Rat> w(M.n, Rat(0));
  for (int a = 0; a < M.n; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < M.n; ++b) {
      if (v[b] == 0) continue;
      w[M.at(a, b)] += u[a] * v[b];
    }
  }
  return w;
}

RationalSubspace radical(const MonoidTable& M) {
  const int n = M.n;
  // fix(x) = #{m : xm = m}; the Gram entry at (a,b) is fix(ab)
  std::vector<long long> fix(n, 0);
  for (int x = 0; x < n; ++x)
    for (int m = 0; m < n; ++m)
      if (M.at(x, m) == m) ++fix[x];
  RatMat Gm(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) Gm.at(a, b) = Rat(static_cast<long>(fix[M.at(a, b)]));
  RatMat N = rat_nullspace(Gm);
  return make_subspace(std::move(N));
}

RationalSubspace subspace_product(const MonoidTable& M,
                                  const RationalSubspace& A,
                                  const RationalSubspace& B) {
  RatMat rows(A.dim() * B.dim(), M.n);
  int k = 0;
  for (int i = 0; i < A.dim(); ++i) {
    std::vector<Rat> u(M.n);
    for (int c = 0; c < M.n; ++c) u[c] = A.basis.at(i, c);
    for (int j = 0; j < B.dim(); ++j) {
      std::vector<Rat> v(M.n);
      for (int c = 0; c < M.n; ++c) v[c] = B.basis.at(j, c);
      auto w = alg_mul(M, u, v);
      for (int c = 0; c < M.n; ++c) rows.at(k, c) = w[c];
      ++k;
    }
  }
  return make_subspace(std::move(rows));
}

std::vector<std::pair<int, int>> sigma_star_fiber_differences(
    const MonoidTable& M, const SupportLattice& L) {
  require_rectangular(M);
  std::map<std::pair<int, int>, int> rep;  // (lattice, rho value) -> element
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < M.n; ++m) {
    int X = L.sigma[m];
    int r = rho(M, L, X, m);
    auto [it, fresh] = rep.emplace(std::make_pair(X, r), m);
    if (!fresh) out.push_back({m, it->second});
  }
  return out;
}

int nilpotency_degree(const MonoidTable& M,
                      const std::vector<std::pair<int, int>>& diffGens,
                      int maxPower) {
  if (maxPower > 28)
    throw Error(ErrorKind::BadInput, "nilpotency power cap too large");
  // k-fold products of two-term +-1 vectors have coefficients bounded by
  // 2^k, so vanishing modulo this prime is vanishing over Z
  std::int64_t p = 2;
  {
    std::int64_t need = (1LL << (maxPower + 1)) + 1;
    while (true) {
      bool prime = p >= 2;
      for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (prime && p > need) break;
      ++p;
    }
  }
  Fp F{p};
  FpRowSpace space(F, M.n);
  for (auto [m, r] : diffGens) {
    std::vector<std::int64_t> v(M.n, 0);
    v[m] = 1;
    v[r] = F.sub(v[r], 1);
    space.insert(std::move(v));
  }
  for (int power = 1; power <= maxPower; ++power) {
    if (space.dim() == 0) return power;
    FpRowSpace next(F, M.n);
    for (auto [m, r] : diffGens)
      for (const auto& w : space.rows()) {
        std::vector<std::int64_t> v(M.n, 0);
        for (int c = 0; c < M.n; ++c) {
          if (!w[c]) continue;
          int mc = M.at(m, c), rc = M.at(r, c);
          v[mc] = F.add(v[mc], w[c]);
          v[rc] = F.sub(v[rc], w[c]);
        }
        next.insert(std::move(v));
      }
    space = std::move(next);
  }
  return space.dim() == 0 ? maxPower + 1 : -1;
}

namespace {

void require_multiplicative(const MonoidTable& M, const std::vector<int>& chi) {
  if (static_cast<int>(chi.size()) != M.n)
    throw Error(ErrorKind::BadInput, "character length mismatch");
  if (chi[M.identity] != 1)
    throw Error(ErrorKind::NotMultiplicative, "character misses the identity");
  for (int a = 0; a < M.n; ++a)
    for (int b = 0; b < M.n; ++b)
      if (chi[M.at(a, b)] != chi[a] * chi[b])
        throw Error(ErrorKind::NotMultiplicative,
                    "character is not multiplicative");
}

}  // namespace

long long ext1_onedim(const MonoidTable& M, const std::vector<int>& chiU,
                      const std::vector<int>& chiV) {
  require_multiplicative(M, chiU);
  require_multiplicative(M, chiV);
  const int n = M.n;
  RatMat A(n * n, n);
  int r = 0;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      // d(mk) - chiV(m) d(k) - d(m) chiU(k) = 0
      A.at(r, M.at(m, k)) += 1;
      A.at(r, k) -= chiV[m];
      A.at(r, m) -= chiU[k];
      ++r;
    }
  long long der = n - rat_rank(std::move(A));
  long long inner = (chiU == chiV) ? 0 : 1;
  return der - inner;
}

std::vector<int> sigma_indicator(const SupportLattice& L, int X) {
  std::vector<int> chi(L.sigma.size());
  for (std::size_t m = 0; m < L.sigma.size(); ++m)
    chi[m] = L.le(X, L.sigma[m]) ? 1 : 0;
  return chi;
}

void require_da(const Analysis& A) {
  if (!A.flags.da)
    throw Error(ErrorKind::NotDA,
                "oracle needs a rectangular monoid with trivial subgroups");
}

std::vector<std::vector<Rat>> lift_idempotents(const MonoidTable& M,
                                               const GreenData&,
                                               const SupportLattice& L) {
  for (int X = 0; X < L.k; ++X)
    if (maximal_subgroup(M, L.idem[X]).size() != 1)
      throw Error(ErrorKind::NotDA, "maximal subgroups must be trivial");
  require_rectangular(M);

  RationalSubspace rad = radical(M);
  auto in_rad = [&](const std::vector<Rat>& v) {
    return rad.contains(v);
  };

  std::vector<std::vector<Rat>> lifted;
  for (int X = 0; X < L.k; ++X) {
    std::vector<Rat> e(M.n, Rat(0));
    for (int Z = 0; Z < L.k; ++Z)
      if (L.le(Z, X)) e[L.idem[Z]] += Rat(static_cast<long>(L.mu[Z][X]));
    // orthogonalize against the finished ones: e <- (1-f) e (1-f)
    for (const auto& f : lifted) {
      auto fe = alg_mul(M, f, e);
      auto ef = alg_mul(M, e, f);
      auto fef = alg_mul(M, f, ef);
      for (int c = 0; c < M.n; ++c) e[c] += fef[c] - fe[c] - ef[c];
    }
    // Newton iteration e <- 3e^2 - 2e^3 reaches an exact idempotent since
    // e^2 - e lies in the nilpotent radical
    for (int it = 0; it < 64; ++it) {
      auto e2 = alg_mul(M, e, e);
      bool done = true;
      for (int c = 0; c < M.n; ++c)
        if (e2[c] != e[c]) {
          done = false;
          break;
        }
      if (done) break;
      auto e3 = alg_mul(M, e2, e);
      for (int c = 0; c < M.n; ++c) e[c] = 3 * e2[c] - 2 * e3[c];
      if (it == 63)
        throw Error(ErrorKind::Internal, "idempotent lifting did not converge");
    }
    // congruence to the Möbius combination modulo the radical
    {
      std::vector<Rat> d(M.n, Rat(0));
      for (int Z = 0; Z < L.k; ++Z)
        if (L.le(Z, X)) d[L.idem[Z]] += Rat(static_cast<long>(L.mu[Z][X]));
      for (int c = 0; c < M.n; ++c) d[c] -= e[c];
      if (!in_rad(d))
        throw Error(ErrorKind::Internal, "lift strayed from its class");
    }
    lifted.push_back(std::move(e));
  }
  // pairwise orthogonality and total sum 1
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      if (i == j) continue;
      auto pr = alg_mul(M, lifted[i], lifted[j]);
      for (int c = 0; c < M.n; ++c)
        if (pr[c] != 0)
          throw Error(ErrorKind::Internal, "lifted idempotents not orthogonal");
    }
  std::vector<Rat> sum(M.n, Rat(0));
  for (const auto& e : lifted)
    for (int c = 0; c < M.n; ++c) sum[c] += e[c];
  for (int c = 0; c < M.n; ++c)
    if (sum[c] != (c == M.identity ? 1 : 0))
      throw Error(ErrorKind::Internal, "lifted idempotents do not sum to 1");
  return lifted;
}

namespace {

QuiverGraph lattice_vertex_graph(const Analysis& A) {
  QuiverGraph Q;
  for (int X = 0; X < A.lattice.k; ++X)
    Q.vertices.push_back({X, 0, 1,
                          "X" + std::to_string(X) + ":chi0(d1)"});
  Q.arrows.assign(Q.vertices.size(),
                  std::vector<long long>(Q.vertices.size(), 0));
  return Q;
}

}  // namespace

QuiverGraph quiver_gabriel_oracle(const Analysis& A) {
  require_da(A);
  const MonoidTable& M = A.M;
  RationalSubspace rad = radical(M);
  RationalSubspace rad2 = subspace_product(M, rad, rad);
  auto idem = lift_idempotents(M, A.green, A.lattice);
  const int k = A.lattice.k;
  QuiverGraph Q = lattice_vertex_graph(A);
  int rank2 = rad2.dim();
  for (int X = 0; X < k; ++X)
    for (int Y = 0; Y < k; ++Y) {
      // dim e_Y (rad / rad^2) e_X
      RatMat rows(rad.dim() + rad2.dim(), M.n);
      int rr = 0;
      for (int i = 0; i < rad.dim(); ++i, ++rr) {
        std::vector<Rat> v(M.n);
        for (int c = 0; c < M.n; ++c) v[c] = rad.basis.at(i, c);
        auto w = alg_mul(M, idem[Y], alg_mul(M, v, idem[X]));
        for (int c = 0; c < M.n; ++c) rows.at(rr, c) = w[c];
      }
      for (int i = 0; i < rad2.dim(); ++i, ++rr)
        for (int c = 0; c < M.n; ++c) rows.at(rr, c) = rad2.basis.at(i, c);
      Q.arrows[X][Y] = rat_rank(std::move(rows)) - rank2;
      if (Q.arrows[X][Y] < 0)
        throw Error(ErrorKind::Internal, "negative sandwiched dimension");
    }
  return Q;
}

QuiverGraph quiver_ext1_oracle(const Analysis& A) {
  require_da(A);
  const int k = A.lattice.k;
  QuiverGraph Q = lattice_vertex_graph(A);
  std::vector<std::vector<int>> chars;
  for (int X = 0; X < k; ++X) chars.push_back(sigma_indicator(A.lattice, X));
  for (int X = 0; X < k; ++X)
    for (int Y = 0; Y < k; ++Y)
      Q.arrows[X][Y] = ext1_onedim(A.M, chars[X], chars[Y]);
  return Q;
}

}  // namespace mq
