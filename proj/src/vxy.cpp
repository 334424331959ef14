#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mq/error.hpp"
#include "vxy_internal.hpp"

namespace mq::detail {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

std::vector<int> sorted_sandwich(const MonoidTable& M, int f, int e) {
  std::vector<int> S;
  for (int m = 0; m < M.n; ++m)
    if (M.at(M.at(f, m), e) == m) S.push_back(m);
  return S;
}

std::vector<int> distinct_products_left(const MonoidTable& M, int e,
                                        const std::vector<char>& filter) {
  // distinct values e*m over m with filter[m]
  Bitset seen(M.n);
  std::vector<int> out;
  for (int m = 0; m < M.n; ++m) {
    if (!filter.empty() && !filter[m]) continue;
    int v = M.at(e, m);
    if (!seen.test(v)) {
      seen.set(v);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> distinct_products_right(const MonoidTable& M, int e,
                                         const std::vector<char>& filter) {
  Bitset seen(M.n);
  std::vector<int> out;
  for (int m = 0; m < M.n; ++m) {
    if (!filter.empty() && !filter[m]) continue;
    int v = M.at(m, e);
    if (!seen.test(v)) {
      seen.set(v);
      out.push_back(v);
    }
  }
  return out;
}

// elements outside the support filter of lattice element X
std::vector<char> below_filter(const Analysis& A, int X) {
  std::vector<char> out(A.M.n, 0);
  for (int m = 0; m < A.M.n; ++m)
    if (!A.lattice.le(X, A.lattice.sigma[m])) out[m] = 1;
  return out;
}

// the set ⊥Y⊥X ∩ fMe, computed through the sandwiched factor sets
Bitset dead_products(const Analysis& A, int X, int Y, int e, int f) {
  auto notY = below_filter(A, Y);
  auto notX = below_filter(A, X);
  auto left = distinct_products_left(A.M, f, notY);
  auto right = distinct_products_right(A.M, e, notX);
  Bitset dead(A.M.n);
  for (int a : left)
    for (int b : right) dead.set(A.M.at(a, b));
  return dead;
}

struct PairReps {
  // monoid elements used to act on the left and right for each class
  std::vector<int> leftRep;      // per class of G_Y
  std::vector<int> rightRepInv;  // per class of G_X, already inverted (and
                                 // conjugated when a transfer map is used)
};

PairReps make_reps(const CharTable& tY, const CharTable& tX,
                   const std::vector<int>* phi) {
  PairReps R;
  for (int c = 0; c < tY.numClasses; ++c)
    R.leftRep.push_back(tY.G.elems[tY.classRep[c]]);
  for (int c = 0; c < tX.numClasses; ++c) {
    int hpos = tX.G.inv[tX.classRep[c]];
    R.rightRepInv.push_back(phi ? (*phi)[hpos] : tX.G.elems[hpos]);
  }
  return R;
}

// permutation of the index set induced by z -> g z h'; asserts the set is
// invariant
std::vector<int> act_permutation(const MonoidTable& M,
                                 const std::vector<int>& set,
                                 const std::vector<int>& pos, int g, int hinv) {
  std::vector<int> perm(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    int im = M.at(M.at(g, set[i]), hinv);
    int p = pos[im];
    if (p < 0) throw Error(ErrorKind::Internal, "set is not action invariant");
    perm[i] = p;
  }
  return perm;
}

std::vector<int> position_map(int n, const std::vector<int>& set) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < set.size(); ++i) pos[set[i]] = static_cast<int>(i);
  return pos;
}

// conjugation witnesses x1 in fMe, x2 in eMf with x2 x1 = e, x1 x2 = f
std::pair<int, int> conjugation_witnesses(const MonoidTable& M, int e, int f) {
  if (e == f) return {e, e};
  for (int a = 0; a < M.n; ++a) {
    if (M.at(M.at(f, a), e) != a) continue;
    for (int b = 0; b < M.n; ++b) {
      if (M.at(M.at(e, b), f) != b) continue;
      if (M.at(b, a) == e && M.at(a, b) == f) return {a, b};
    }
  }
  throw Error(ErrorKind::Internal, "conjugate idempotents without witnesses");
}

}  // namespace

Analysis opposite_analysis(const Analysis& A) {
  Analysis B = analyze(opposite(A.M));
  if (B.lattice.k != A.lattice.k)
    throw Error(ErrorKind::Internal, "opposite lattice size differs");
  for (int i = 0; i < A.lattice.k; ++i)
    if (B.lattice.ideal[i] != A.lattice.ideal[i] ||
        B.lattice.idem[i] != A.lattice.idem[i])
      throw Error(ErrorKind::Internal, "opposite lattice misaligned");
  return B;
}

OppositeCtx make_opposite(const Analysis& A, const QuiverSetup& S) {
  OppositeCtx ctx{opposite_analysis(A), {}, {}};
  ctx.tablesOp.reserve(S.tables.size());
  for (const auto& T : S.tables) {
    CharTable U = T;
    for (int r = 0; r < T.rows(); ++r)
      for (int c = 0; c < T.numClasses; ++c)
        U.chars[r][c] = T.chars[r][T.classInv[c]];
    ctx.tablesOp.push_back(std::move(U));
  }
  ctx.dualRow.resize(S.tables.size());
  for (std::size_t X = 0; X < S.tables.size(); ++X)
    for (int r = 0; r < S.tables[X].rows(); ++r)
      ctx.dualRow[X].push_back(contragredient_row(S.tables[X], r));
  return ctx;
}

std::vector<std::vector<long long>> decompose(const PairModule& V,
                                              const CharTable& tY,
                                              const CharTable& tX) {
  std::vector<std::vector<long long>> mult(
      tX.rows(), std::vector<long long>(tY.rows(), 0));
  for (int u = 0; u < tX.rows(); ++u)
    for (int v = 0; v < tY.rows(); ++v) {
      auto pc = pair_char_of_irreps(tY, v, tX, u);
      mult[u][v] = multiplicity(V.character, pc, tY, tX, V.dim);
    }
  return mult;
}

PairModule perm_module_on_set(const Analysis& A, const QuiverSetup& S, int X,
                              int Y, const std::vector<int>& set) {
  const CharTable& tY = S.tables[Y];
  const CharTable& tX = S.tables[X];
  auto pos = position_map(A.M.n, set);
  auto reps = make_reps(tY, tX, nullptr);
  PairModule V;
  V.dim = static_cast<int>(set.size());
  V.character.p = S.prime;
  V.character.classesY = tY.numClasses;
  V.character.classesX = tX.numClasses;
  V.character.values.assign(std::size_t(tY.numClasses) * tX.numClasses, 0);
  for (int cy = 0; cy < tY.numClasses; ++cy)
    for (int cx = 0; cx < tX.numClasses; ++cx) {
      auto perm = act_permutation(A.M, set, pos, reps.leftRep[cy],
                                  reps.rightRepInv[cx]);
      FpMat P(V.dim, V.dim);
      for (int i = 0; i < V.dim; ++i) P.at(perm[i], i) = 1;
      V.character.at(cy, cx) = fp_trace(Fp{S.prime}, P);
      V.actions.push_back(std::move(P));
    }
  return V;
}

PairModule equal_module(const Analysis& A, const QuiverSetup& S, int X) {
  const MonoidTable& M = A.M;
  const SupportLattice& L = A.lattice;
  const CharTable& tX = S.tables[X];
  const int e = L.idem[X];

  std::vector<int> IX;
  for (int m = 0; m < M.n; ++m)
    if (M.at(M.at(e, m), e) == m && tX.G.pos(m) < 0) IX.push_back(m);
  auto pos = position_map(M.n, IX);

  UnionFind uf(static_cast<int>(IX.size()));
  // products through the lower set collapse when the total support drops
  {
    std::set<std::pair<int, int>> lefts, rights;
    for (int m = 0; m < M.n; ++m) {
      lefts.insert({L.sigma[m], M.at(e, m)});
      rights.insert({L.sigma[m], M.at(m, e)});
    }
    for (auto [s, u] : lefts)
      for (auto [t, v] : rights) {
        if (L.le(X, L.meet(s, t))) continue;  // product support still >= X
        int a = M.at(u, v);
        int b = M.at(M.at(u, e), v);
        uf.unite(pos[a], pos[b]);
      }
  }
  // the square of the complement of the support filter is a zero class
  Bitset dead = dead_products(A, X, X, e, e);
  int deadRoot = -1;
  for (std::size_t i = 0; i < IX.size(); ++i)
    if (dead.test(IX[i])) {
      if (deadRoot < 0)
        deadRoot = static_cast<int>(i);
      else
        uf.unite(deadRoot, static_cast<int>(i));
    }

  std::vector<int> classId(IX.size(), -1);
  std::vector<int> survivors;  // class -> representative position
  std::vector<char> classDead;
  {
    std::map<int, int> byRoot;
    for (std::size_t i = 0; i < IX.size(); ++i) {
      int r = uf.find(static_cast<int>(i));
      auto [it, fresh] = byRoot.emplace(r, static_cast<int>(byRoot.size()));
      classId[i] = it->second;
      if (fresh) {
        survivors.push_back(static_cast<int>(i));
        classDead.push_back(0);
      }
      if (dead.test(IX[i])) classDead[classId[i]] = 1;
    }
  }
  std::vector<int> alive;  // class id -> dense index
  std::vector<int> aliveIndex(classDead.size(), -1);
  for (std::size_t c = 0; c < classDead.size(); ++c)
    if (!classDead[c]) {
      aliveIndex[c] = static_cast<int>(alive.size());
      alive.push_back(static_cast<int>(c));
    }

  const CharTable& tY = tX;
  auto reps = make_reps(tY, tX, nullptr);
  PairModule V;
  V.dim = static_cast<int>(alive.size());
  V.character.p = S.prime;
  V.character.classesY = tY.numClasses;
  V.character.classesX = tX.numClasses;
  V.character.values.assign(std::size_t(tY.numClasses) * tX.numClasses, 0);
  for (int cy = 0; cy < tY.numClasses; ++cy)
    for (int cx = 0; cx < tX.numClasses; ++cx) {
      auto perm =
          act_permutation(M, IX, pos, reps.leftRep[cy], reps.rightRepInv[cx]);
      // the permutation must be constant on classes and preserve deadness
      std::vector<int> classImage(classDead.size(), -1);
      for (std::size_t i = 0; i < IX.size(); ++i) {
        int c = classId[i], d = classId[perm[i]];
        if (classImage[c] < 0)
          classImage[c] = d;
        else if (classImage[c] != d)
          throw Error(ErrorKind::Internal,
                      "group action does not preserve the relation");
        if (classDead[c] != classDead[d])
          throw Error(ErrorKind::Internal, "group action moves the zero class");
      }
      FpMat P(V.dim, V.dim);
      for (int c : alive) P.at(aliveIndex[classImage[c]], aliveIndex[c]) = 1;
      V.character.at(cy, cx) = fp_trace(Fp{S.prime}, P);
      V.actions.push_back(std::move(P));
    }
  return V;
}

PairModule incomparable_module(const Analysis& A, const QuiverSetup& S, int X,
                               int Y) {
  const MonoidTable& M = A.M;
  const SupportLattice& L = A.lattice;
  const CharTable& tY = S.tables[Y];
  const CharTable& tX = S.tables[X];
  const int eX = L.idem[X], eY = L.idem[Y];
  Fp F{S.prime};

  auto Sset = sorted_sandwich(M, eY, eX);
  auto pos = position_map(M.n, Sset);
  const int N = static_cast<int>(Sset.size());

  FpRowSpace W(F, N);
  Bitset dead = dead_products(A, X, Y, eX, eY);
  for (int i = 0; i < N; ++i)
    if (dead.test(Sset[i])) {
      std::vector<std::int64_t> v(N, 0);
      v[i] = 1;
      W.insert(std::move(v));
    }
  {
    auto lefts = distinct_products_left(M, eY, {});
    auto rights = distinct_products_right(M, eX, {});
    std::set<std::array<int, 4>> seen;
    for (int u : lefts)
      for (int v : rights) {
        int ueY = M.at(u, eY), eXv = M.at(eX, v);
        std::array<int, 4> t = {M.at(u, v), M.at(ueY, eXv), M.at(ueY, v),
                                M.at(u, eXv)};
        if (!seen.insert(t).second) continue;
        std::vector<std::int64_t> w(N, 0);
        w[pos[t[0]]] = F.add(w[pos[t[0]]], 1);
        w[pos[t[1]]] = F.add(w[pos[t[1]]], 1);
        w[pos[t[2]]] = F.sub(w[pos[t[2]]], 1);
        w[pos[t[3]]] = F.sub(w[pos[t[3]]], 1);
        W.insert(std::move(w));
      }
  }

  // quotient coordinates: the non-pivot positions of W
  std::vector<char> isPivot(N, 0);
  for (int c : W.pivots()) isPivot[c] = 1;
  std::vector<int> freeCols, freeIndex(N, -1);
  for (int c = 0; c < N; ++c)
    if (!isPivot[c]) {
      freeIndex[c] = static_cast<int>(freeCols.size());
      freeCols.push_back(c);
    }

  auto reps = make_reps(tY, tX, nullptr);
  PairModule V;
  V.dim = static_cast<int>(freeCols.size());
  V.character.p = S.prime;
  V.character.classesY = tY.numClasses;
  V.character.classesX = tX.numClasses;
  V.character.values.assign(std::size_t(tY.numClasses) * tX.numClasses, 0);
  for (int cy = 0; cy < tY.numClasses; ++cy)
    for (int cx = 0; cx < tX.numClasses; ++cx) {
      auto perm =
          act_permutation(M, Sset, pos, reps.leftRep[cy], reps.rightRepInv[cx]);
      // the relation span must be invariant
      for (const auto& row : W.rows()) {
        std::vector<std::int64_t> img(N, 0);
        for (int c = 0; c < N; ++c)
          if (row[c]) img[perm[c]] = F.add(img[perm[c]], row[c]);
        if (!W.contains(std::move(img)))
          throw Error(ErrorKind::Internal,
                      "group action does not preserve the relation span");
      }
      FpMat P(V.dim, V.dim);
      for (int j = 0; j < V.dim; ++j) {
        int target = perm[freeCols[j]];
        // reduce e_target modulo W
        std::vector<std::int64_t> v(N, 0);
        v[target] = 1;
        v = W.reduce(std::move(v));
        for (int c = 0; c < N; ++c)
          if (v[c]) P.at(freeIndex[c], j) = v[c];
      }
      V.character.at(cy, cx) = fp_trace(F, P);
      V.actions.push_back(std::move(P));
    }
  return V;
}

PairModule comparable_up_module(const Analysis& A, const QuiverSetup& S, int X,
                                int Y) {
  const MonoidTable& M = A.M;
  const SupportLattice& L = A.lattice;
  const CharTable& tY = S.tables[Y];
  const CharTable& tX = S.tables[X];
  const int eX = L.idem[X], eY = L.idem[Y];
  Fp F{S.prime};

  // renormalize the lower idempotent below the upper one
  const int f = M.at(M.at(eY, eX), eY);
  if (M.at(f, f) != f || L.sigma[f] != X || M.at(eY, f) != f ||
      M.at(f, eY) != f)
    throw Error(ErrorKind::NotRectangular,
                "lower idempotent cannot be renormalized");
  auto [x1, x2] = conjugation_witnesses(M, eX, f);
  std::vector<int> phi(tX.G.size());
  for (int i = 0; i < tX.G.size(); ++i)
    phi[i] = M.at(M.at(x1, tX.G.elems[i]), x2);
  for (int i = 0; i < tX.G.size(); ++i)
    for (int j = 0; j < tX.G.size(); ++j) {
      int gh = M.at(tX.G.elems[i], tX.G.elems[j]);
      if (M.at(phi[i], phi[j]) != phi[tX.G.pos(gh)])
        throw Error(ErrorKind::Internal, "conjugation transfer not multiplicative");
    }

  auto Sset = sorted_sandwich(M, eY, f);
  auto pos = position_map(M.n, Sset);
  const int N = static_cast<int>(Sset.size());

  UnionFind uf(N);
  {
    auto lefts = distinct_products_left(M, eY, {});
    auto rights = distinct_products_right(M, f, {});
    for (int u : lefts) {
      int ueY = M.at(u, eY);
      for (int v : rights) uf.unite(pos[M.at(u, v)], pos[M.at(ueY, v)]);
    }
    auto leftsBelow = distinct_products_left(M, eY, below_filter(A, Y));
    for (int u : leftsBelow) {
      int uf_ = M.at(u, f);
      for (int v : rights) uf.unite(pos[M.at(u, v)], pos[M.at(uf_, v)]);
    }
  }
  Bitset dead = dead_products(A, X, Y, f, eY);
  {
    int deadRoot = -1;
    for (int i = 0; i < N; ++i)
      if (dead.test(Sset[i])) {
        if (deadRoot < 0)
          deadRoot = i;
        else
          uf.unite(deadRoot, i);
      }
  }
  std::vector<int> classId(N, -1);
  std::vector<char> classDead;
  {
    std::map<int, int> byRoot;
    for (int i = 0; i < N; ++i) {
      int r = uf.find(i);
      auto [it, fresh] = byRoot.emplace(r, static_cast<int>(byRoot.size()));
      classId[i] = it->second;
      if (fresh) classDead.push_back(0);
      if (dead.test(Sset[i])) classDead[classId[i]] = 1;
    }
  }
  const int numClasses = static_cast<int>(classDead.size());
  std::vector<int> aliveIndex(numClasses, -1);
  std::vector<int> alive;
  for (int c = 0; c < numClasses; ++c)
    if (!classDead[c]) {
      aliveIndex[c] = static_cast<int>(alive.size());
      alive.push_back(c);
    }
  const int W = static_cast<int>(alive.size());

  // the retraction onto G_f must be constant on classes; dead classes map
  // to zero
  std::vector<int> rhoOfClass(numClasses, -2);  // -1 stands for zero
  for (int i = 0; i < N; ++i) {
    int s = Sset[i];
    int val = L.le(X, L.sigma[s]) ? M.at(f, M.at(s, f)) : -1;
    int c = classId[i];
    if (rhoOfClass[c] == -2)
      rhoOfClass[c] = val;
    else if (rhoOfClass[c] != val)
      throw Error(ErrorKind::Internal, "retraction not constant on classes");
  }
  for (int c = 0; c < numClasses; ++c)
    if (classDead[c] && rhoOfClass[c] != -1)
      throw Error(ErrorKind::Internal, "zero class with nonzero retraction");

  // kernel of the induced retraction on the span of live classes
  FpMat R(tX.G.size(), W);
  for (int c : alive) {
    int val = rhoOfClass[c];
    if (val < 0) continue;
    int gi = -1;
    for (int i = 0; i < tX.G.size(); ++i)
      if (phi[i] == val) {
        gi = i;
        break;
      }
    if (gi < 0)
      throw Error(ErrorKind::Internal, "retraction misses the subgroup");
    R.at(gi, aliveIndex[c]) = 1;
  }
  FpMat ker = fp_nullspace(F, R);
  FpRowSpace K(F, W);
  for (int i = 0; i < ker.rows; ++i) {
    std::vector<std::int64_t> v(W);
    for (int c = 0; c < W; ++c) v[c] = ker.at(i, c);
    K.insert(std::move(v));
  }

  std::vector<int> repInv(tX.numClasses);
  for (int c = 0; c < tX.numClasses; ++c)
    repInv[c] = phi[tX.G.inv[tX.classRep[c]]];
  PairModule V;
  V.dim = K.dim();
  V.character.p = S.prime;
  V.character.classesY = tY.numClasses;
  V.character.classesX = tX.numClasses;
  V.character.values.assign(std::size_t(tY.numClasses) * tX.numClasses, 0);
  for (int cy = 0; cy < tY.numClasses; ++cy) {
    int g = tY.G.elems[tY.classRep[cy]];
    for (int cx = 0; cx < tX.numClasses; ++cx) {
      auto perm = act_permutation(M, Sset, pos, g, repInv[cx]);
      std::vector<int> classImage(numClasses, -1);
      for (int i = 0; i < N; ++i) {
        int c = classId[i], d = classId[perm[i]];
        if (classImage[c] < 0)
          classImage[c] = d;
        else if (classImage[c] != d)
          throw Error(ErrorKind::Internal,
                      "group action does not preserve the relation");
        if (classDead[c] != classDead[d])
          throw Error(ErrorKind::Internal, "group action moves the zero class");
      }
      FpMat act(V.dim, V.dim);
      for (int r = 0; r < K.dim(); ++r) {
        // transform the kernel basis row and express it back in the basis
        std::vector<std::int64_t> img(W, 0);
        const auto& row = K.rows()[r];
        for (int c : alive) {
          std::int64_t coef = row[aliveIndex[c]];
          if (!coef) continue;
          img[aliveIndex[classImage[c]]] =
              F.add(img[aliveIndex[classImage[c]]], coef);
        }
        for (int t = 0; t < K.dim(); ++t) {
          std::int64_t coef = img[K.pivots()[t]];
          act.at(t, r) = coef;
          if (!coef) continue;
          const auto& basisRow = K.rows()[t];
          for (int c = 0; c < W; ++c)
            img[c] = F.sub(img[c], coef * basisRow[c] % F.p);
        }
        for (int c = 0; c < W; ++c)
          if (img[c])
            throw Error(ErrorKind::Internal, "kernel is not action invariant");
      }
      V.character.at(cy, cx) = fp_trace(F, act);
      V.actions.push_back(std::move(act));
    }
  }
  return V;
}

OrthoClasses band_orthogroup_classes(const Analysis& A, int X, int Y,
                                     bool band_rule, const MaxSubgroup* GX) {
  const MonoidTable& M = A.M;
  const SupportLattice& L = A.lattice;
  const int eX = L.idem[X], eY = L.idem[Y];

  OrthoClasses out;
  out.f = M.at(M.at(eY, eX), eY);
  const int f = out.f;
  if (M.at(f, f) != f || L.sigma[f] != X || M.at(eY, f) != f ||
      M.at(f, eY) != f)
    throw Error(ErrorKind::NotRectangular,
                "lower idempotent cannot be renormalized");
  if (GX) {
    auto [x1, x2] = conjugation_witnesses(M, eX, f);
    out.phi.resize(GX->size());
    for (int i = 0; i < GX->size(); ++i)
      out.phi[i] = M.at(M.at(x1, GX->elems[i]), x2);
    for (int i = 0; i < GX->size(); ++i)
      for (int j = 0; j < GX->size(); ++j)
        if (M.at(out.phi[i], out.phi[j]) !=
            out.phi[GX->pos(M.at(GX->elems[i], GX->elems[j]))])
          throw Error(ErrorKind::Internal,
                      "conjugation transfer not multiplicative");
  }

  // L-class of f, then its part fixed by the upper idempotent on the left
  std::vector<int> Lf;
  for (int m = 0; m < M.n; ++m)
    if (A.green.lClass[m] == A.green.lClass[f]) Lf.push_back(m);
  for (int x : Lf)
    if (M.at(eY, x) == x) out.set.push_back(x);
  auto pos = position_map(M.n, out.set);

  UnionFind uf(static_cast<int>(out.set.size()));
  {
    // e_Y m x ~ e_Y m e_Y x for all x in the L-class when sigma(m) >= X
    std::vector<char> aboveX(M.n, 0);
    for (int m = 0; m < M.n; ++m)
      if (L.le(X, L.sigma[m])) aboveX[m] = 1;
    auto lefts = distinct_products_left(M, eY, aboveX);
    for (int u : lefts) {
      int ueY = M.at(u, eY);
      for (int x : Lf) {
        int a = M.at(u, x), b = M.at(ueY, x);
        if (pos[a] < 0 || pos[b] < 0)
          throw Error(ErrorKind::Internal, "products leave the L-class");
        uf.unite(pos[a], pos[b]);
      }
    }
  }
  // common strictly-intermediate left identities merge elements
  for (int m = 0; m < M.n; ++m) {
    int ee = M.at(M.at(eY, m), eY);
    if (ee == eY || M.at(ee, ee) != ee) continue;
    int s = L.sigma[ee];
    if (!(L.le(X, s) && s != X)) continue;
    // group the fixed points, for orthogroups by their f-image
    std::map<int, int> firstByKey;
    for (std::size_t i = 0; i < out.set.size(); ++i) {
      if (M.at(ee, out.set[i]) != out.set[i]) continue;
      int key = band_rule ? 0 : M.at(f, out.set[i]);
      auto [it, fresh] = firstByKey.emplace(key, static_cast<int>(i));
      if (!fresh) uf.unite(it->second, static_cast<int>(i));
    }
  }
  out.classOf.assign(out.set.size(), -1);
  std::map<int, int> byRoot;
  for (std::size_t i = 0; i < out.set.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    auto [it, fresh] = byRoot.emplace(r, static_cast<int>(byRoot.size()));
    out.classOf[i] = it->second;
  }
  out.numClasses = static_cast<int>(byRoot.size());
  return out;
}

}  // namespace mq::detail
