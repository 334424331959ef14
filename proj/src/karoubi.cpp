#include "mq/karoubi.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mq/error.hpp"

namespace mq {

namespace {

void require_idem(const MonoidTable& M, int e) {
  if (e < 0 || e >= M.n || M.at(e, e) != e)
    throw Error(ErrorKind::NotIdempotent,
                "element " + std::to_string(e) + " is not idempotent");
}

// M_X as a bitset: elements whose ideal contains the J-class of the
// reference element.
Bitset support_filter(const MonoidTable& M, const GreenData& G, int e) {
  Bitset b(M.n);
  int je = G.jClass[e];
  for (int m = 0; m < M.n; ++m)
    if (G.jLeq[je][G.jClass[m]]) b.set(m);
  return b;
}

}  // namespace

std::vector<int> airr(const MonoidTable& M, const GreenData& G, int e, int f) {
  require_idem(M, e);
  require_idem(M, f);
  Bitset inX = support_filter(M, G, e);   // m with X <= sigma(m)
  Bitset inY = support_filter(M, G, f);
  // f·⊥Y and ⊥X·e; both land strictly below the respective J-classes,
  // which keeps the product loop small
  Bitset left(M.n), right(M.n);
  for (int u = 0; u < M.n; ++u) {
    if (!inY.test(u)) left.set(M.at(f, u));
    if (!inX.test(u)) right.set(M.at(u, e));
  }
  Bitset bad(M.n);
  for (int a : left.members())
    for (int b : right.members()) bad.set(M.at(a, b));
  std::vector<int> out;
  for (int m = 0; m < M.n; ++m)
    if (M.at(M.at(f, m), e) == m && !bad.test(m)) out.push_back(m);
  return out;
}

std::vector<int> irr(const MonoidTable& M, const GreenData& G, int e, int f) {
  std::vector<int> out;
  for (int m : airr(M, G, e, f))
    if (!G.regular[m]) out.push_back(m);
  return out;
}

std::vector<int> irr_dg_crosscheck(const MonoidTable& M, const GreenData& G,
                                   int e, int f) {
  require_idem(M, e);
  require_idem(M, f);
  for (const auto& cls : conjugacy_classes_idem(M, G))
    if (cls.size() != 1)
      throw Error(ErrorKind::NotDG, "idempotent conjugacy classes are not singletons");
  Bitset inX = support_filter(M, G, e);
  Bitset inY = support_filter(M, G, f);
  Bitset bad(M.n);
  for (int u = 0; u < M.n; ++u) {
    if (inY.test(u)) continue;
    for (int v = 0; v < M.n; ++v)
      if (!inX.test(v)) bad.set(M.at(u, v));
  }
  std::vector<int> out;
  for (int m = 0; m < M.n; ++m) {
    if (G.regular[m] || bad.test(m)) continue;
    auto [eL, eR] = stab_idempotents(M, m);
    if (eR == e && eL == f) out.push_back(m);
  }
  return out;
}

void validate_category(const FiniteCategorySpec& C, bool require_skeletal_ei) {
  const int no = C.num_objects;
  const int na = static_cast<int>(C.arrows.size());
  if (no <= 0) throw Error(ErrorKind::NotACategory, "category has no objects");
  for (const auto& a : C.arrows)
    if (a.src < 0 || a.src >= no || a.dst < 0 || a.dst >= no)
      throw Error(ErrorKind::NotACategory, "arrow endpoint out of range");
  if (static_cast<int>(C.identities.size()) != no)
    throw Error(ErrorKind::NotACategory, "one identity arrow per object required");
  if (static_cast<int>(C.compose.size()) != na)
    throw Error(ErrorKind::NotACategory, "composition table size mismatch");
  for (const auto& row : C.compose)
    if (static_cast<int>(row.size()) != na)
      throw Error(ErrorKind::NotACategory, "composition table is not square");

  auto comp = [&](int g, int f) { return C.compose[g][f]; };
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      int gf = comp(g, f);
      bool defined = C.arrows[f].dst == C.arrows[g].src;
      if (defined != (gf >= 0))
        throw Error(ErrorKind::NotACategory,
                    "composite defined exactly when endpoints match");
      if (gf >= 0) {
        if (gf >= na)
          throw Error(ErrorKind::NotACategory, "composite id out of range");
        if (C.arrows[gf].src != C.arrows[f].src ||
            C.arrows[gf].dst != C.arrows[g].dst)
          throw Error(ErrorKind::NotACategory, "composite has wrong endpoints");
      }
    }
  for (int o = 0; o < no; ++o) {
    int i = C.identities[o];
    if (i < 0 || i >= na || C.arrows[i].src != o || C.arrows[i].dst != o)
      throw Error(ErrorKind::NotACategory, "identity arrow endpoints wrong");
  }
  for (int f = 0; f < na; ++f) {
    if (comp(C.identities[C.arrows[f].dst], f) != f ||
        comp(f, C.identities[C.arrows[f].src]) != f)
      throw Error(ErrorKind::NotACategory, "identity law fails");
  }
  for (int h = 0; h < na; ++h)
    for (int g = 0; g < na; ++g) {
      if (comp(h, g) < 0) continue;
      for (int f = 0; f < na; ++f) {
        if (comp(g, f) < 0) continue;
        if (comp(comp(h, g), f) != comp(h, comp(g, f)))
          throw Error(ErrorKind::NotACategory, "composition is not associative");
      }
    }

  if (!require_skeletal_ei) return;

  // EI: endomorphism monoids are groups
  for (int o = 0; o < no; ++o) {
    std::vector<int> endo;
    for (int f = 0; f < na; ++f)
      if (C.arrows[f].src == o && C.arrows[f].dst == o) endo.push_back(f);
    for (int f : endo) {
      bool invertible = false;
      for (int g : endo)
        if (comp(g, f) == C.identities[o] && comp(f, g) == C.identities[o]) {
          invertible = true;
          break;
        }
      if (!invertible)
        throw Error(ErrorKind::NotEI, "an endomorphism is not invertible");
    }
  }
  // skeletal: no isomorphisms between distinct objects
  for (int f = 0; f < na; ++f) {
    int s = C.arrows[f].src, d = C.arrows[f].dst;
    if (s == d) continue;
    for (int g = 0; g < na; ++g)
      if (C.arrows[g].src == d && C.arrows[g].dst == s &&
          comp(g, f) == C.identities[s] && comp(f, g) == C.identities[d])
        throw Error(ErrorKind::NotSkeletal, "distinct objects are isomorphic");
  }
}

EiMonoid ei_to_monoid(const FiniteCategorySpec& C) {
  validate_category(C, true);
  const int na = static_cast<int>(C.arrows.size());
  const int n = na + 2;
  const int one = na, zero = na + 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, zero));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (C.compose[g][f] >= 0) t[g][f] = C.compose[g][f];
  for (int m = 0; m < n; ++m) t[one][m] = t[m][one] = m;
  t[zero][zero] = zero;
  for (int f = 0; f < na; ++f) t[zero][f] = t[f][zero] = zero;
  std::vector<std::string> labels(n);
  for (int f = 0; f < na; ++f)
    labels[f] = C.arrows[f].name.empty()
                    ? "f" + std::to_string(f)
                    : C.arrows[f].name;
  labels[one] = "1";
  labels[zero] = "z";
  EiMonoid out;
  out.monoid = from_table(t, one, labels);
  out.one = one;
  out.zero = zero;
  out.objectIdem = C.identities;
  return out;
}

FiniteCategorySpec poset_category(const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(leq.size());
  FiniteCategorySpec C;
  C.num_objects = n;
  std::map<std::pair<int, int>, int> id;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (leq[p][q]) {
        id[{p, q}] = static_cast<int>(C.arrows.size());
        C.arrows.push_back({p, q, ""});
      }
  const int na = static_cast<int>(C.arrows.size());
  C.compose.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (C.arrows[f].dst == C.arrows[g].src)
        C.compose[g][f] = id.at({C.arrows[f].src, C.arrows[g].dst});
  C.identities.resize(n);
  for (int p = 0; p < n; ++p) C.identities[p] = id.at({p, p});
  return C;
}

FiniteCategorySpec free_category(int num_nodes,
                                 const std::vector<std::pair<int, int>>& edges) {
  // enumerate all paths; BFS by length so identities come first
  FiniteCategorySpec C;
  C.num_objects = num_nodes;
  std::map<std::vector<int>, int> id;  // path as edge list, with src marker
  struct Path {
    int src, dst;
    std::vector<int> edgeSeq;
  };
  std::vector<Path> paths;
  auto add = [&](const Path& p) {
    std::vector<int> key{p.src};
    key.insert(key.end(), p.edgeSeq.begin(), p.edgeSeq.end());
    if (id.emplace(key, static_cast<int>(paths.size())).second) {
      paths.push_back(p);
      if (paths.size() > 100000)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "free category is too large; is the graph acyclic?");
      return true;
    }
    return false;
  };
  for (int v = 0; v < num_nodes; ++v) add({v, v, {}});
  std::size_t begin = 0;
  while (begin < paths.size()) {
    std::size_t end = paths.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == paths[i].dst) {
          Path q{paths[i].src, edges[e].second, paths[i].edgeSeq};
          q.edgeSeq.push_back(static_cast<int>(e));
          add(q);
        }
    begin = end;
  }
  for (const auto& p : paths) {
    std::string name;
    for (int e : p.edgeSeq) name += "e" + std::to_string(e);
    if (name.empty()) name = "id" + std::to_string(p.src);
    C.arrows.push_back({p.src, p.dst, name});
  }
  const int na = static_cast<int>(paths.size());
  C.compose.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (paths[f].dst == paths[g].src) {
        std::vector<int> key{paths[f].src};
        key.insert(key.end(), paths[f].edgeSeq.begin(), paths[f].edgeSeq.end());
        key.insert(key.end(), paths[g].edgeSeq.begin(), paths[g].edgeSeq.end());
        auto it = id.find(key);
        if (it == id.end())
          throw Error(ErrorKind::Internal, "path composition missing");
        C.compose[g][f] = it->second;
      }
  C.identities.resize(num_nodes);
  for (int v = 0; v < num_nodes; ++v) {
    C.identities[v] = id.at({v});
  }
  return C;
}

FiniteCategorySpec injections_category(int n) {
  // objects 0..n, object m standing for {0,...,m-1}
  FiniteCategorySpec C;
  C.num_objects = n + 1;
  struct Inj {
    int src, dst;
    std::vector<int> map;
  };
  std::vector<Inj> arrows;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> id;
  for (int s = 0; s <= n; ++s)
    for (int d = s; d <= n; ++d) {
      // all injections {0..s-1} -> {0..d-1}
      std::vector<int> f(s);
      std::vector<char> used(d, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == s) {
          id[{{s, d}, f}] = static_cast<int>(arrows.size());
          arrows.push_back({s, d, f});
          return;
        }
        for (int v = 0; v < d; ++v)
          if (!used[v]) {
            used[v] = 1;
            f[i] = v;
            rec(i + 1);
            used[v] = 0;
          }
      };
      rec(0);
    }
  for (const auto& a : arrows) {
    std::string name = "i" + std::to_string(a.src) + std::to_string(a.dst) + "[";
    for (std::size_t i = 0; i < a.map.size(); ++i) {
      if (i) name += ' ';
      name += std::to_string(a.map[i]);
    }
    C.arrows.push_back({a.src, a.dst, name + "]"});
  }
  const int na = static_cast<int>(arrows.size());
  C.compose.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (arrows[f].dst == arrows[g].src) {
        std::vector<int> h(arrows[f].src);
        for (int i = 0; i < arrows[f].src; ++i) h[i] = arrows[g].map[arrows[f].map[i]];
        C.compose[g][f] = id.at({{arrows[f].src, arrows[g].dst}, h});
      }
  C.identities.resize(n + 1);
  for (int m = 0; m <= n; ++m) {
    std::vector<int> idm(m);
    for (int i = 0; i < m; ++i) idm[i] = i;
    C.identities[m] = id.at({{m, m}, idm});
  }
  return C;
}

}  // namespace mq
