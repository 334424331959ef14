#include "mq/classify.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "mq/error.hpp"
#include "mq/green.hpp"

namespace mq {

ClassFlags classify(const MonoidTable& M) {
  const int n = M.n;
  ClassFlags f;

  std::vector<int> om(n);
  for (int m = 0; m < n; ++m) om[m] = omega(M, m);

  f.band = true;
  for (int m = 0; m < n; ++m)
    if (M.at(m, m) != m) {
      f.band = false;
      break;
    }

  bool commutative = true;
  for (int a = 0; a < n && commutative; ++a)
    for (int b = 0; b < n; ++b)
      if (M.at(a, b) != M.at(b, a)) {
        commutative = false;
        break;
      }
  f.semilattice = f.band && commutative;

  if (f.band) {
    f.leftRegularBand = f.rightRegularBand = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = M.at(x, y);
        if (M.at(xy, x) != xy) f.leftRegularBand = false;
        if (M.at(x, M.at(y, x)) != M.at(y, x)) f.rightRegularBand = false;
      }
    f.regularBand = true;
    for (int x = 0; x < n && f.regularBand; ++x)
      for (int y = 0; y < n && f.regularBand; ++y) {
        int xy = M.at(x, y);
        for (int z = 0; z < n; ++z)
          // xyxzx = xyzx
          if (M.at(M.at(M.at(xy, x), z), x) != M.at(M.at(xy, z), x)) {
            f.regularBand = false;
            break;
          }
      }
  }

  f.regular = true;
  for (int m = 0; m < n && f.regular; ++m) {
    bool reg = false;
    for (int u = 0; u < n && !reg; ++u)
      if (M.at(M.at(m, u), m) == m) reg = true;
    f.regular = reg;
  }

  f.rectangular = true;
  for (int x = 0; x < n && f.rectangular; ++x)
    for (int y = 0; y < n; ++y) {
      int exy = om[M.at(x, y)], eyx = om[M.at(y, x)];
      if (M.at(M.at(exy, eyx), exy) != exy) {
        f.rectangular = false;
        break;
      }
    }

  f.dg = true;
  for (int x = 0; x < n && f.dg; ++x)
    for (int y = 0; y < n; ++y)
      if (om[M.at(x, y)] != om[M.at(y, x)]) {
        f.dg = false;
        break;
      }

  bool omega_fixes = true;  // x^w x = x for all x
  for (int x = 0; x < n; ++x)
    if (M.at(om[x], x) != x) {
      omega_fixes = false;
      break;
    }
  bool idem_closed = true;
  {
    auto E = idempotents(M);
    for (int e : E) {
      for (int g : E)
        if (M.at(M.at(e, g), M.at(e, g)) != M.at(e, g)) {
          idem_closed = false;
          break;
        }
      if (!idem_closed) break;
    }
  }
  f.orthogroup = omega_fixes && idem_closed;

  f.clifford = omega_fixes;
  if (f.clifford)
    for (int x = 0; x < n && f.clifford; ++x)
      for (int y = 0; y < n; ++y)
        if (M.at(om[x], om[y]) != M.at(om[y], om[x])) {
          f.clifford = false;
          break;
        }

  f.group = true;
  for (int x = 0; x < n; ++x)
    if (om[x] != M.identity) {
      f.group = false;
      break;
    }

  GreenData G = green(M);
  f.jTrivial = G.numJ == n;
  f.rTrivial = G.numR == n;
  f.lTrivial = G.numL == n;

  bool trivial_subgroups = true;
  for (int e : idempotents(M))
    if (maximal_subgroup(M, e).size() != 1) {
      trivial_subgroups = false;
      break;
    }
  f.da = f.rectangular && trivial_subgroups;

  f.ds = true;
  for (const auto& cls : conjugacy_classes_idem(M, G)) {
    for (int e : cls) {
      for (int g : cls)
        if (G.jClass[M.at(e, g)] != G.jClass[e]) {
          f.ds = false;
          break;
        }
      if (!f.ds) break;
    }
    if (!f.ds) break;
  }

  return f;
}

std::vector<std::pair<std::string, bool>> flag_list(const ClassFlags& f) {
  return {{"band", f.band},
          {"semilattice", f.semilattice},
          {"left_regular_band", f.leftRegularBand},
          {"right_regular_band", f.rightRegularBand},
          {"regular_band", f.regularBand},
          {"j_trivial", f.jTrivial},
          {"r_trivial", f.rTrivial},
          {"l_trivial", f.lTrivial},
          {"dg", f.dg},
          {"da", f.da},
          {"rectangular", f.rectangular},
          {"orthogroup", f.orthogroup},
          {"clifford", f.clifford},
          {"group", f.group},
          {"regular", f.regular},
          {"ds", f.ds}};
}

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
  // returns true when the classes were distinct
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smallest member as root
    parent[b] = a;
    return true;
  }
};

}  // namespace

Quotient quotient_by_pairs(const MonoidTable& M,
                           const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(M.n);
  std::queue<std::pair<int, int>> work;
  for (auto [a, b] : pairs)
    if (uf.unite(a, b)) work.push({a, b});
  // saturate: a ≡ b forces xa ≡ xb and ax ≡ bx
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop();
    for (int x = 0; x < M.n; ++x) {
      int p = M.at(x, a), q = M.at(x, b);
      if (uf.unite(p, q)) work.push({p, q});
      p = M.at(a, x);
      q = M.at(b, x);
      if (uf.unite(p, q)) work.push({p, q});
    }
  }
  std::vector<int> root(M.n), id(M.n, -1);
  int k = 0;
  for (int m = 0; m < M.n; ++m) {
    root[m] = uf.find(m);
    if (root[m] == m) id[m] = k++;
  }
  Quotient Q;
  Q.map.resize(M.n);
  for (int m = 0; m < M.n; ++m) Q.map[m] = id[root[m]];
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int m = 0; m < M.n; ++m)
    if (root[m] == m) labels[Q.map[m]] = "[" + M.label(m) + "]";
  for (int a = 0; a < M.n; ++a)
    for (int b = 0; b < M.n; ++b) {
      int& cell = t[Q.map[a]][Q.map[b]];
      cell = Q.map[M.at(a, b)];
    }
  // well-definedness of the quotient table
  for (int a = 0; a < M.n; ++a)
    for (int b = 0; b < M.n; ++b)
      if (t[Q.map[a]][Q.map[b]] != Q.map[M.at(a, b)])
        throw Error(ErrorKind::Internal, "congruence closure is not saturated");
  std::vector<int> gens;
  for (int g : M.generators) gens.push_back(Q.map[g]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Q.monoid = from_table(t, Q.map[M.identity], labels, gens);
  return Q;
}

Quotient left_quotient(const MonoidTable& M) {
  std::vector<std::pair<int, int>> pairs;
  auto E = idempotents(M);
  for (int e : E)
    for (int f : E)
      if (e < f && M.at(e, f) == f && M.at(f, e) == e) pairs.push_back({e, f});
  return quotient_by_pairs(M, pairs);
}

Quotient right_quotient(const MonoidTable& M) {
  std::vector<std::pair<int, int>> pairs;
  auto E = idempotents(M);
  for (int e : E)
    for (int f : E)
      if (e < f && M.at(e, f) == e && M.at(f, e) == f) pairs.push_back({e, f});
  return quotient_by_pairs(M, pairs);
}

}  // namespace mq
