#include "mq/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mq/error.hpp"
#include "mq/lattice.hpp"

namespace mq {

namespace {

// Tarjan SCC over an implicit graph given by a neighbor generator.
// Components are renumbered so that ids follow the smallest member.
struct Scc {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> comp, low, num, stk;
  std::vector<char> onstk;
  int counter = 0, ncomp = 0;

  explicit Scc(int n_) : n(n_), adj(n_), comp(n_, -1), low(n_), num(n_, -1),
                         onstk(n_, 0) {}

  void run() {
    for (int v = 0; v < n; ++v)
      if (num[v] < 0) dfs(v);
    // renumber by smallest member
    std::vector<int> minElt(ncomp, n);
    for (int v = 0; v < n; ++v) minElt[comp[v]] = std::min(minElt[comp[v]], v);
    std::vector<int> order(ncomp);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return minElt[a] < minElt[b]; });
    std::vector<int> newid(ncomp);
    for (int i = 0; i < ncomp; ++i) newid[order[i]] = i;
    for (int v = 0; v < n; ++v) comp[v] = newid[comp[v]];
  }

 private:
  void dfs(int root) {
    // iterative to keep stack depth bounded
    std::vector<std::pair<int, std::size_t>> call;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0) {
        num[v] = low[v] = counter++;
        stk.push_back(v);
        onstk[v] = 1;
      }
      bool descended = false;
      while (i < adj[v].size()) {
        int w = adj[v][i++];
        if (num[w] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (onstk[w]) low[v] = std::min(low[v], num[w]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        while (true) {
          int w = stk.back();
          stk.pop_back();
          onstk[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      int child = v;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[child]);
    }
  }
};

}  // namespace

Bitset right_ideal(const MonoidTable& M, int m) {
  Bitset b(M.n);
  for (int x = 0; x < M.n; ++x) b.set(M.at(m, x));
  return b;
}

Bitset left_ideal(const MonoidTable& M, int m) {
  Bitset b(M.n);
  for (int x = 0; x < M.n; ++x) b.set(M.at(x, m));
  return b;
}

Bitset two_sided_ideal(const MonoidTable& M, int m) {
  Bitset b(M.n);
  for (int x = 0; x < M.n; ++x) {
    int xm = M.at(x, m);
    for (int y = 0; y < M.n; ++y) b.set(M.at(xm, y));
  }
  return b;
}

GreenData green(const MonoidTable& M) {
  const int n = M.n;
  GreenData G;

  {  // R-classes: SCCs of m -> ma
    Scc s(n);
    for (int m = 0; m < n; ++m) {
      auto& out = s.adj[m];
      Bitset seen(n);
      for (int a = 0; a < n; ++a) {
        int v = M.at(m, a);
        if (!seen.test(v)) {
          seen.set(v);
          out.push_back(v);
        }
      }
    }
    s.run();
    G.rClass = s.comp;
    G.numR = s.ncomp;
  }
  {  // L-classes: SCCs of m -> am
    Scc s(n);
    for (int m = 0; m < n; ++m) {
      auto& out = s.adj[m];
      Bitset seen(n);
      for (int a = 0; a < n; ++a) {
        int v = M.at(a, m);
        if (!seen.test(v)) {
          seen.set(v);
          out.push_back(v);
        }
      }
    }
    s.run();
    G.lClass = s.comp;
    G.numL = s.ncomp;
  }
  Scc sj(n);
  {  // J-classes: SCCs of m -> am and m -> ma together
    for (int m = 0; m < n; ++m) {
      auto& out = sj.adj[m];
      Bitset seen(n);
      for (int a = 0; a < n; ++a) {
        int v = M.at(m, a);
        if (!seen.test(v)) {
          seen.set(v);
          out.push_back(v);
        }
        v = M.at(a, m);
        if (!seen.test(v)) {
          seen.set(v);
          out.push_back(v);
        }
      }
    }
    sj.run();
    G.jClass = sj.comp;
    G.numJ = sj.ncomp;
  }

  G.jMembers.assign(G.numJ, {});
  for (int m = 0; m < n; ++m) G.jMembers[G.jClass[m]].push_back(m);

  // reachability closure over the condensation gives the J-order
  std::vector<Bitset> below(G.numJ, Bitset(G.numJ));  // classes reachable from c
  {
    std::vector<std::vector<int>> cadj(G.numJ);
    for (int m = 0; m < n; ++m)
      for (int w : sj.adj[m])
        if (G.jClass[w] != G.jClass[m]) cadj[G.jClass[m]].push_back(G.jClass[w]);
    // DFS from each class (numJ is small)
    for (int c = 0; c < G.numJ; ++c) {
      std::vector<int> stack{c};
      below[c].set(c);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : cadj[v])
          if (!below[c].test(w)) {
            below[c].set(w);
            stack.push_back(w);
          }
      }
    }
  }
  G.jLeq.assign(G.numJ, std::vector<char>(G.numJ, 0));
  for (int a = 0; a < G.numJ; ++a)
    for (int b = 0; b < G.numJ; ++b) G.jLeq[a][b] = below[b].test(a);

  G.jIdeal.assign(G.numJ, Bitset(n));
  for (int c = 0; c < G.numJ; ++c)
    for (int d = 0; d < G.numJ; ++d)
      if (G.jLeq[d][c])
        for (int m : G.jMembers[d]) G.jIdeal[c].set(m);

  G.regular.assign(n, 0);
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u)
      if (M.at(M.at(m, u), m) == m) {
        G.regular[m] = 1;
        break;
      }
  G.jClassRegular.assign(G.numJ, 0);
  for (int m = 0; m < n; ++m)
    if (M.at(m, m) == m) G.jClassRegular[G.jClass[m]] = 1;

  return G;
}

std::vector<int> idempotents(const MonoidTable& M) {
  std::vector<int> r;
  for (int m = 0; m < M.n; ++m)
    if (M.at(m, m) == m) r.push_back(m);
  return r;
}

std::vector<std::vector<int>> conjugacy_classes_idem(const MonoidTable& M,
                                                     const GreenData& G) {
  std::map<int, std::vector<int>> byClass;
  for (int e : idempotents(M)) byClass[G.jClass[e]].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [c, v] : byClass) out.push_back(v);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

MaxSubgroup maximal_subgroup(const MonoidTable& M, int e) {
  if (M.at(e, e) != e)
    throw Error(ErrorKind::NotIdempotent,
                "element " + std::to_string(e) + " is not idempotent");
  std::vector<int> local;  // eMe
  Bitset in(M.n);
  for (int m = 0; m < M.n; ++m) {
    int x = M.at(M.at(e, m), e);
    if (!in.test(x)) {
      in.set(x);
      local.push_back(x);
    }
  }
  std::sort(local.begin(), local.end());
  MaxSubgroup G;
  G.e = e;
  G.pos_of.assign(M.n, -1);
  std::vector<int> invElt;
  for (int g : local) {
    for (int h : local)
      if (M.at(g, h) == e && M.at(h, g) == e) {
        G.elems.push_back(g);
        invElt.push_back(h);
        break;
      }
  }
  G.inv.resize(G.elems.size());
  for (std::size_t i = 0; i < G.elems.size(); ++i) G.pos_of[G.elems[i]] = int(i);
  for (std::size_t i = 0; i < G.elems.size(); ++i) {
    G.inv[i] = G.pos_of[invElt[i]];
    if (G.inv[i] < 0) throw Error(ErrorKind::Internal, "unit group not closed");
  }
  for (int g : G.elems)
    for (int h : G.elems)
      if (G.pos_of[M.at(g, h)] < 0)
        throw Error(ErrorKind::Internal, "unit group not closed under product");
  return G;
}

std::vector<int> null_elements(const MonoidTable& M) {
  std::vector<int> r;
  for (int m = 0; m < M.n; ++m) {
    bool reg = false;
    for (int u = 0; u < M.n && !reg; ++u)
      if (M.at(M.at(m, u), m) == m) reg = true;
    if (!reg) r.push_back(m);
  }
  return r;
}

namespace {

// Unique idempotent of the minimal ideal of a submonoid S, given by
// membership list.  Throws NotDG when the minimal ideal holds more than
// one idempotent.
int minimal_ideal_idempotent(const MonoidTable& M, const std::vector<int>& S) {
  // (product of all elements)^omega lies in the minimal ideal of S
  int t = S.front();
  for (std::size_t i = 1; i < S.size(); ++i) t = M.at(t, S[i]);
  int x = t;
  std::map<int, int> seen;
  int k = 1;
  while (!seen.count(x)) {
    seen[x] = k;
    x = M.at(x, t);
    ++k;
  }
  int start = seen[x];
  int period = k - start;
  int steps = period * ((start + period - 1) / period);
  x = t;
  for (int i = 1; i < steps; ++i) x = M.at(x, t);
  int s = x;  // idempotent in the minimal ideal
  // minimal ideal = S s S; collect its idempotents
  Bitset inS(M.n);
  for (int a : S) inS.set(a);
  Bitset ideal(M.n);
  for (int a : S) {
    int as = M.at(a, s);
    for (int b : S) ideal.set(M.at(as, b));
  }
  int found = -1;
  for (int m : ideal.members())
    if (M.at(m, m) == m) {
      if (found >= 0 && found != m)
        throw Error(ErrorKind::NotDG,
                    "stabilizer has more than one minimal-ideal idempotent");
      found = m;
    }
  if (found < 0) throw Error(ErrorKind::Internal, "minimal ideal has no idempotent");
  return found;
}

}  // namespace

std::pair<int, int> stab_idempotents(const MonoidTable& M, int m) {
  std::vector<int> stL, stR;
  for (int x = 0; x < M.n; ++x) {
    if (M.at(x, m) == m) stL.push_back(x);
    if (M.at(m, x) == m) stR.push_back(x);
  }
  int eL = minimal_ideal_idempotent(M, stL);
  int eR = minimal_ideal_idempotent(M, stR);
  if (M.at(eL, m) != m || M.at(m, eR) != m)
    throw Error(ErrorKind::Internal, "stabilizer idempotent does not fix element");
  return {eL, eR};
}

TildeLClasses tilde_L_classes(const MonoidTable& M, const GreenData& G,
                              const SupportLattice& L) {
  if (G.numR != M.n)
    throw Error(ErrorKind::NotRTrivial, "monoid is not R-trivial");
  const auto idem = idempotents(M);
  // group elements by their set of idempotent right stabilizers
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int m = 0; m < M.n; ++m) {
    std::vector<int> key;
    for (int e : idem)
      if (M.at(m, e) == m) key.push_back(e);
    groups[key].push_back(m);
  }
  TildeLClasses out;
  out.latticeOf.assign(M.n, -1);
  out.members.assign(L.k, {});
  for (auto& [key, mem] : groups) {
    int lat = -1;
    for (int m : mem)
      if (M.at(m, m) == m) {
        lat = L.sigma[m];
        break;
      }
    if (lat < 0)
      throw Error(ErrorKind::Internal, "class without idempotent member");
    if (!out.members[lat].empty())
      throw Error(ErrorKind::Internal, "two classes share a lattice element");
    out.members[lat] = mem;
    for (int m : mem) out.latticeOf[m] = lat;
  }
  for (int X = 0; X < L.k; ++X)
    if (out.members[X].empty())
      throw Error(ErrorKind::Internal, "lattice element without a class");
  return out;
}

}  // namespace mq
