#include "mq/quiver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "mq/error.hpp"
#include "vxy_internal.hpp"

namespace mq {

namespace {

std::string vertex_label(int X, int r, int deg) {
  return "X" + std::to_string(X) + ":chi" + std::to_string(r) + "(d" +
         std::to_string(deg) + ")";
}

QuiverGraph lattice_skeleton(const Analysis& A) {
  QuiverGraph Q;
  for (int X = 0; X < A.lattice.k; ++X)
    Q.vertices.push_back({X, 0, 1, vertex_label(X, 0, 1)});
  Q.arrows.assign(Q.vertices.size(),
                  std::vector<long long>(Q.vertices.size(), 0));
  return Q;
}

void require_trivial_groups(const Analysis& A) {
  for (int X = 0; X < A.lattice.k; ++X)
    if (maximal_subgroup(A.M, A.lattice.idem[X]).size() != 1)
      throw Error(ErrorKind::Internal, "expected trivial maximal subgroups");
}

// run fn(i) for i in [0, n); jobs > 1 splits the range across threads
void parallel_over(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t]() {
      try {
        while (true) {
          int i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// classes of the coarse relation on e_Y M e_X used for R-trivial monoids:
// returns the number of classes not identified with the zero family
long long rtrivial_alive_classes(const Analysis& A, int X, int Y) {
  const MonoidTable& M = A.M;
  const SupportLattice& L = A.lattice;
  const int eX = L.idem[X], eY = L.idem[Y];
  std::vector<int> S;
  for (int m = 0; m < M.n; ++m)
    if (M.at(M.at(eY, m), eX) == m) S.push_back(m);
  std::vector<int> pos(M.n, -1);
  for (std::size_t i = 0; i < S.size(); ++i) pos[S[i]] = static_cast<int>(i);

  std::vector<int> parent(S.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // e_Y m n e_X ~ e_Y m e_X for sigma(m) not above Y, sigma(n) above X
  Bitset seenU(M.n), seenV(M.n);
  std::vector<int> us, vs;
  for (int m = 0; m < M.n; ++m) {
    if (!L.le(Y, L.sigma[m])) {
      int u = M.at(eY, m);
      if (!seenU.test(u)) {
        seenU.set(u);
        us.push_back(u);
      }
    }
    if (L.le(X, L.sigma[m])) {
      int v = M.at(m, eX);
      if (!seenV.test(v)) {
        seenV.set(v);
        vs.push_back(v);
      }
    }
  }
  for (int u : us) {
    int ueX = M.at(u, eX);
    for (int v : vs) unite(pos[M.at(u, v)], pos[ueX]);
  }
  // all products from below-Y times below-X form one zero family
  Bitset dead(M.n);
  {
    Bitset seenA(M.n), seenB(M.n);
    std::vector<int> as, bs;
    for (int m = 0; m < M.n; ++m) {
      if (!L.le(Y, L.sigma[m])) {
        int a = M.at(eY, m);
        if (!seenA.test(a)) {
          seenA.set(a);
          as.push_back(a);
        }
      }
      if (!L.le(X, L.sigma[m])) {
        int b = M.at(m, eX);
        if (!seenB.test(b)) {
          seenB.set(b);
          bs.push_back(b);
        }
      }
    }
    for (int a : as)
      for (int b : bs) dead.set(M.at(a, b));
  }
  int deadRoot = -1;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (dead.test(S[i])) {
      if (deadRoot < 0)
        deadRoot = static_cast<int>(i);
      else
        unite(deadRoot, static_cast<int>(i));
    }
  std::set<int> roots;
  for (std::size_t i = 0; i < S.size(); ++i) roots.insert(find(int(i)));
  return static_cast<long long>(roots.size()) - (deadRoot >= 0 ? 1 : 0);
}

}  // namespace

Analysis analyze(const MonoidTable& M) {
  Analysis A;
  A.M = M;
  A.green = green(M);
  A.lattice = support_lattice(M, A.green);
  A.flags = classify(M);
  return A;
}

std::optional<long long> QuiverGraph::path_algebra_dim() const {
  const int v = static_cast<int>(vertices.size());
  std::vector<std::vector<long long>> power(v, std::vector<long long>(v, 0));
  for (int i = 0; i < v; ++i) power[i][i] = 1;
  long long total = 0;
  for (int step = 0; step <= v; ++step) {
    long long s = 0;
    for (const auto& row : power)
      for (long long x : row) s += x;
    total += s;
    if (s == 0) return total;
    std::vector<std::vector<long long>> nxt(v, std::vector<long long>(v, 0));
    for (int i = 0; i < v; ++i)
      for (int k = 0; k < v; ++k) {
        if (!power[i][k]) continue;
        for (int j = 0; j < v; ++j)
          nxt[i][j] += power[i][k] * arrows[k][j];
      }
    power = std::move(nxt);
  }
  return std::nullopt;  // a directed cycle
}

QuiverSetup make_setup(const Analysis& A, const QuiverOptions& opt) {
  QuiverSetup S;
  S.seed = opt.seed;
  std::vector<MaxSubgroup> groups;
  long long lcmExp = 1;
  for (int X = 0; X < A.lattice.k; ++X) {
    groups.push_back(maximal_subgroup(A.M, A.lattice.idem[X]));
    long long e = group_exponent(A.M, groups.back());
    lcmExp = lcmExp / std::gcd(lcmExp, e) * e;
  }
  long long dimBound = 1;
  for (int X = 0; X < A.lattice.k; ++X)
    for (int Y = 0; Y < A.lattice.k; ++Y) {
      const int eX = A.lattice.idem[X], eY = A.lattice.idem[Y];
      long long c = 0;
      for (int m = 0; m < A.M.n; ++m)
        if (A.M.at(A.M.at(eY, m), eX) == m) ++c;
      dimBound = std::max(dimBound, c);
    }
  S.dimBound = dimBound;
  if (opt.prime) {
    S.prime = *opt.prime;
    if (S.prime <= 2 * dimBound || (S.prime - 1) % lcmExp != 0)
      throw Error(ErrorKind::BadInput,
                  "prime must exceed twice the dimension bound (" +
                      std::to_string(dimBound) + ") and be 1 mod " +
                      std::to_string(lcmExp));
  } else {
    S.prime = choose_prime(lcmExp, 2 * dimBound);
  }
  for (int X = 0; X < A.lattice.k; ++X)
    S.tables.push_back(char_table(A.M, groups[X], S.prime, opt.seed));
  return S;
}

QuiverGraph quiver_jtrivial(const Analysis& A) {
  if (!A.flags.jTrivial)
    throw Error(ErrorKind::NotJTrivial, "monoid is not J-trivial");
  QuiverGraph Q = lattice_skeleton(A);
  for (int X = 0; X < A.lattice.k; ++X)
    for (int Y = 0; Y < A.lattice.k; ++Y)
      Q.arrows[X][Y] = static_cast<long long>(
          irr(A.M, A.green, A.lattice.idem[X], A.lattice.idem[Y]).size());
  return Q;
}

QuiverGraph quiver_rtrivial(const Analysis& A, int jobs) {
  if (!A.flags.rTrivial)
    throw Error(ErrorKind::NotRTrivial, "monoid is not R-trivial");
  require_trivial_groups(A);
  QuiverGraph Q = lattice_skeleton(A);
  const int k = A.lattice.k;
  std::vector<long long> results(std::size_t(k) * k, 0);
  parallel_over(k * k, jobs, [&](int idx) {
    int X = idx / k, Y = idx % k;
    long long alive = rtrivial_alive_classes(A, X, Y);
    bool incomparable = !A.lattice.le(X, Y) && !A.lattice.le(Y, X);
    long long arrows = incomparable ? alive : alive - 1;
    if (arrows < 0)
      throw Error(ErrorKind::Internal, "negative arrow count");
    results[idx] = arrows;
  });
  for (int X = 0; X < k; ++X)
    for (int Y = 0; Y < k; ++Y) Q.arrows[X][Y] = results[X * k + Y];
  return Q;
}

QuiverGraph quiver_band(const Analysis& A, int jobs) {
  if (!A.flags.band) throw Error(ErrorKind::NotBand, "monoid is not a band");
  QuiverGraph Q = lattice_skeleton(A);
  Analysis Aop = detail::opposite_analysis(A);
  const int k = A.lattice.k;
  struct Task {
    int X, Y;
    bool viaOpposite;
  };
  std::vector<Task> tasks;
  for (int X = 0; X < k; ++X)
    for (int Y = 0; Y < k; ++Y) {
      if (X == Y || (!A.lattice.le(X, Y) && !A.lattice.le(Y, X))) continue;
      if (A.lattice.le(X, Y))
        tasks.push_back({X, Y, false});
      else
        tasks.push_back({X, Y, true});
    }
  std::vector<long long> results(tasks.size(), 0);
  parallel_over(static_cast<int>(tasks.size()), jobs, [&](int i) {
    const Task& t = tasks[i];
    const Analysis& base = t.viaOpposite ? Aop : A;
    int src = t.viaOpposite ? t.Y : t.X;
    int tgt = t.viaOpposite ? t.X : t.Y;
    auto cls = detail::band_orthogroup_classes(base, src, tgt, true, nullptr);
    results[i] = cls.numClasses - 1;
    if (results[i] < 0)
      throw Error(ErrorKind::Internal, "negative arrow count");
  });
  for (std::size_t i = 0; i < tasks.size(); ++i)
    Q.arrows[tasks[i].X][tasks[i].Y] = results[i];
  return Q;
}

namespace {

// vertex table shared by the group-aware engines
struct VertexIndex {
  std::vector<int> offset;
  QuiverGraph skeleton;
};

VertexIndex group_vertices(const Analysis& A, const QuiverSetup& S) {
  VertexIndex V;
  V.offset.assign(A.lattice.k + 1, 0);
  for (int X = 0; X < A.lattice.k; ++X) {
    V.offset[X + 1] = V.offset[X] + S.tables[X].rows();
    for (int r = 0; r < S.tables[X].rows(); ++r) {
      int d = S.tables[X].degree[r];
      V.skeleton.vertices.push_back({X, r, d, vertex_label(X, r, d)});
    }
  }
  V.skeleton.arrows.assign(V.skeleton.vertices.size(),
                           std::vector<long long>(V.skeleton.vertices.size(), 0));
  return V;
}

}  // namespace

QuiverGraph quiver_dg(const Analysis& A, const QuiverSetup& S) {
  if (!A.flags.dg) throw Error(ErrorKind::NotDG, "monoid is not in the singleton-class family");
  auto VI = group_vertices(A, S);
  QuiverGraph Q = std::move(VI.skeleton);
  for (int X = 0; X < A.lattice.k; ++X)
    for (int Y = 0; Y < A.lattice.k; ++Y) {
      auto set = irr(A.M, A.green, A.lattice.idem[X], A.lattice.idem[Y]);
      auto V = detail::perm_module_on_set(A, S, X, Y, set);
      auto mult = detail::decompose(V, S.tables[Y], S.tables[X]);
      for (int u = 0; u < S.tables[X].rows(); ++u)
        for (int v = 0; v < S.tables[Y].rows(); ++v)
          Q.arrows[VI.offset[X] + u][VI.offset[Y] + v] = mult[u][v];
    }
  return Q;
}

QuiverGraph quiver_orthogroup(const Analysis& A, const QuiverSetup& S,
                              int jobs) {
  if (!A.flags.orthogroup)
    throw Error(ErrorKind::NotOrthogroup, "monoid is not an orthogroup");
  auto ctx = detail::make_opposite(A, S);
  auto VI = group_vertices(A, S);
  QuiverGraph Q = std::move(VI.skeleton);
  const int k = A.lattice.k;
  struct Task {
    int X, Y;
    bool viaOpposite;
  };
  std::vector<Task> tasks;
  for (int X = 0; X < k; ++X)
    for (int Y = 0; Y < k; ++Y) {
      if (X == Y || (!A.lattice.le(X, Y) && !A.lattice.le(Y, X))) continue;
      tasks.push_back({X, Y, !A.lattice.le(X, Y)});
    }
  std::vector<std::vector<std::vector<long long>>> results(tasks.size());
  parallel_over(static_cast<int>(tasks.size()), jobs, [&](int i) {
    const Task& t = tasks[i];
    const Analysis& base = t.viaOpposite ? ctx.Aop : A;
    const auto& tables = t.viaOpposite ? ctx.tablesOp : S.tables;
    int src = t.viaOpposite ? t.Y : t.X;
    int tgt = t.viaOpposite ? t.X : t.Y;
    const CharTable& tSrc = tables[src];
    const CharTable& tTgt = tables[tgt];
    auto cls =
        detail::band_orthogroup_classes(base, src, tgt, false, &tSrc.G);
    // span of the differences [x] - [f x] inside the class space
    Fp F{S.prime};
    const MonoidTable& M = base.M;
    std::vector<int> pos(M.n, -1);
    for (std::size_t p = 0; p < cls.set.size(); ++p)
      pos[cls.set[p]] = static_cast<int>(p);
    std::set<int> gset(cls.phi.begin(), cls.phi.end());
    FpRowSpace span(F, cls.numClasses);
    for (std::size_t p = 0; p < cls.set.size(); ++p) {
      int x = cls.set[p];
      if (gset.count(x)) continue;
      int fx = M.at(cls.f, x);
      std::vector<std::int64_t> v(cls.numClasses, 0);
      v[cls.classOf[p]] = F.add(v[cls.classOf[p]], 1);
      int q = pos[fx];
      if (q < 0) throw Error(ErrorKind::Internal, "f-image leaves the set");
      v[cls.classOf[q]] = F.sub(v[cls.classOf[q]], 1);
      span.insert(std::move(v));
    }
    detail::PairModule V;
    V.dim = span.dim();
    V.character.p = S.prime;
    V.character.classesY = tTgt.numClasses;
    V.character.classesX = tSrc.numClasses;
    V.character.values.assign(
        std::size_t(tTgt.numClasses) * tSrc.numClasses, 0);
    for (int cy = 0; cy < tTgt.numClasses; ++cy) {
      int g = tTgt.G.elems[tTgt.classRep[cy]];
      for (int cx = 0; cx < tSrc.numClasses; ++cx) {
        int hinv = cls.phi[tSrc.G.inv[tSrc.classRep[cx]]];
        // permutation on classes
        std::vector<int> classImage(cls.numClasses, -1);
        for (std::size_t p = 0; p < cls.set.size(); ++p) {
          int im = M.at(M.at(g, cls.set[p]), hinv);
          int q = pos[im];
          if (q < 0)
            throw Error(ErrorKind::Internal, "set is not action invariant");
          int c = cls.classOf[p], d = cls.classOf[q];
          if (classImage[c] < 0)
            classImage[c] = d;
          else if (classImage[c] != d)
            throw Error(ErrorKind::Internal,
                        "group action does not preserve the relation");
        }
        FpMat act(V.dim, V.dim);
        for (int r = 0; r < span.dim(); ++r) {
          std::vector<std::int64_t> img(cls.numClasses, 0);
          const auto& row = span.rows()[r];
          for (int c = 0; c < cls.numClasses; ++c)
            if (row[c]) img[classImage[c]] = F.add(img[classImage[c]], row[c]);
          for (int t2 = 0; t2 < span.dim(); ++t2) {
            std::int64_t coef = img[span.pivots()[t2]];
            act.at(t2, r) = coef;
            if (!coef) continue;
            const auto& basisRow = span.rows()[t2];
            for (int c = 0; c < cls.numClasses; ++c)
              img[c] = F.sub(img[c], coef * basisRow[c] % F.p);
          }
          for (int c = 0; c < cls.numClasses; ++c)
            if (img[c])
              throw Error(ErrorKind::Internal,
                          "difference span is not action invariant");
        }
        V.character.at(cy, cx) = fp_trace(F, act);
        V.actions.push_back(std::move(act));
      }
    }
    results[i] = detail::decompose(V, tTgt, tSrc);
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    if (!t.viaOpposite) {
      for (int u = 0; u < S.tables[t.X].rows(); ++u)
        for (int v = 0; v < S.tables[t.Y].rows(); ++v)
          Q.arrows[VI.offset[t.X] + u][VI.offset[t.Y] + v] = results[i][u][v];
    } else {
      // arrows (X,i)->(Y,j) equal the opposite-side multiplicities at the
      // contragredient rows
      for (int iRow = 0; iRow < S.tables[t.X].rows(); ++iRow)
        for (int jRow = 0; jRow < S.tables[t.Y].rows(); ++jRow)
          Q.arrows[VI.offset[t.X] + iRow][VI.offset[t.Y] + jRow] =
              results[i][ctx.dualRow[t.Y][jRow]][ctx.dualRow[t.X][iRow]];
    }
  }
  return Q;
}

QuiverGraph quiver_rectangular(const Analysis& A, const QuiverSetup& S,
                               int jobs) {
  if (!A.flags.rectangular)
    throw Error(ErrorKind::NotRectangular, "monoid is not rectangular");
  auto ctx = detail::make_opposite(A, S);
  auto VI = group_vertices(A, S);
  QuiverGraph Q = std::move(VI.skeleton);
  const int k = A.lattice.k;
  std::vector<std::vector<std::vector<long long>>> results(
      std::size_t(k) * k);
  parallel_over(k * k, jobs, [&](int idx) {
    int X = idx / k, Y = idx % k;
    if (X == Y) {
      auto V = detail::equal_module(A, S, X);
      results[idx] = detail::decompose(V, S.tables[Y], S.tables[X]);
    } else if (A.lattice.le(X, Y)) {
      auto V = detail::comparable_up_module(A, S, X, Y);
      results[idx] = detail::decompose(V, S.tables[Y], S.tables[X]);
    } else if (A.lattice.le(Y, X)) {
      auto V = detail::comparable_up_module(ctx.Aop, S, Y, X);
      // decompose against the inverted tables on the opposite side
      results[idx] = detail::decompose(V, ctx.tablesOp[X], ctx.tablesOp[Y]);
    } else {
      auto V = detail::incomparable_module(A, S, X, Y);
      results[idx] = detail::decompose(V, S.tables[Y], S.tables[X]);
    }
  });
  for (int X = 0; X < k; ++X)
    for (int Y = 0; Y < k; ++Y) {
      const auto& mult = results[std::size_t(X) * k + Y];
      for (int u = 0; u < S.tables[X].rows(); ++u)
        for (int v = 0; v < S.tables[Y].rows(); ++v) {
          if (X == Y || A.lattice.le(X, Y) ||
              (!A.lattice.le(X, Y) && !A.lattice.le(Y, X)))
            Q.arrows[VI.offset[X] + u][VI.offset[Y] + v] = mult[u][v];
          else
            Q.arrows[VI.offset[X] + u][VI.offset[Y] + v] =
                mult[ctx.dualRow[Y][v]][ctx.dualRow[X][u]];
        }
    }
  return Q;
}

QuiverGraph quiver_ei(const FiniteCategorySpec& C, const QuiverOptions& opt) {
  EiMonoid em = ei_to_monoid(C);
  Analysis A = analyze(em.monoid);
  if (!A.flags.dg)
    throw Error(ErrorKind::Internal, "category monoid is not singleton-class");
  QuiverSetup S = make_setup(A, opt);
  QuiverGraph full = quiver_dg(A, S);
  // drop the two adjoined idempotent vertices and relabel by object
  std::vector<int> objOfLattice(A.lattice.k, -1);
  for (int X = 0; X < A.lattice.k; ++X) {
    int e = A.lattice.idem[X];
    for (std::size_t o = 0; o < em.objectIdem.size(); ++o)
      if (em.objectIdem[o] == e) objOfLattice[X] = static_cast<int>(o);
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < full.vertices.size(); ++i) {
    int X = full.vertices[i].lattice;
    if (objOfLattice[X] >= 0)
      keep.push_back(static_cast<int>(i));
    else
      for (std::size_t j = 0; j < full.vertices.size(); ++j)
        if (full.arrows[i][j] || full.arrows[j][i])
          throw Error(ErrorKind::Internal, "adjoined vertex is not isolated");
  }
  QuiverGraph Q;
  for (int i : keep) {
    QuiverVertex v = full.vertices[i];
    v.lattice = objOfLattice[v.lattice];
    v.label = "obj" + std::to_string(v.lattice) + ":chi" +
              std::to_string(v.irrep) + "(d" + std::to_string(v.degree) + ")";
    Q.vertices.push_back(v);
  }
  Q.arrows.assign(keep.size(), std::vector<long long>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      Q.arrows[a][b] = full.arrows[keep[a]][keep[b]];
  return Q;
}

VxyModule build_vxy(const Analysis& A, const QuiverSetup& S, int X, int Y) {
  if (!A.flags.rectangular)
    throw Error(ErrorKind::NotRectangular, "monoid is not rectangular");
  VxyModule out;
  detail::PairModule pm;
  if (X == Y) {
    out.caseTag = VxyCase::Equal;
    pm = detail::equal_module(A, S, X);
  } else if (A.lattice.le(X, Y)) {
    out.caseTag = VxyCase::LessXY;
    pm = detail::comparable_up_module(A, S, X, Y);
  } else if (A.lattice.le(Y, X)) {
    out.caseTag = VxyCase::LessYX;
    auto ctx = detail::make_opposite(A, S);
    pm = detail::comparable_up_module(ctx.Aop, S, Y, X);
  } else {
    out.caseTag = VxyCase::Incomparable;
    pm = detail::incomparable_module(A, S, X, Y);
  }
  out.dim = pm.dim;
  out.character = std::move(pm.character);
  out.actions = std::move(pm.actions);
  return out;
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::JTrivial: return "jtrivial";
    case Engine::RTrivial: return "rtrivial";
    case Engine::Band: return "band";
    case Engine::Orthogroup: return "orthogroup";
    case Engine::DG: return "dg";
    case Engine::Rectangular: return "rectangular";
  }
  return "?";
}

std::optional<Engine> engine_from_name(const std::string& s) {
  for (Engine e : {Engine::Auto, Engine::JTrivial, Engine::RTrivial,
                   Engine::Band, Engine::Orthogroup, Engine::DG,
                   Engine::Rectangular})
    if (s == engine_name(e)) return e;
  return std::nullopt;
}

std::vector<Engine> applicable_engines(const ClassFlags& f) {
  std::vector<Engine> out;
  if (f.jTrivial) out.push_back(Engine::JTrivial);
  if (f.band) out.push_back(Engine::Band);
  if (f.rTrivial) out.push_back(Engine::RTrivial);
  if (f.orthogroup) out.push_back(Engine::Orthogroup);
  if (f.dg) out.push_back(Engine::DG);
  if (f.rectangular) out.push_back(Engine::Rectangular);
  return out;
}

QuiverGraph quiver(const Analysis& A, Engine engine, const QuiverOptions& opt) {
  auto engines = applicable_engines(A.flags);
  if (engines.empty())
    throw Error(ErrorKind::UnsupportedClass,
                "no quiver engine applies; the monoid is not rectangular");
  Engine chosen = engine == Engine::Auto ? engines.front() : engine;
  switch (chosen) {
    case Engine::JTrivial:
      return quiver_jtrivial(A);
    case Engine::RTrivial:
      return quiver_rtrivial(A, opt.jobs);
    case Engine::Band:
      return quiver_band(A, opt.jobs);
    case Engine::Orthogroup: {
      QuiverSetup S = make_setup(A, opt);
      return quiver_orthogroup(A, S, opt.jobs);
    }
    case Engine::DG: {
      QuiverSetup S = make_setup(A, opt);
      return quiver_dg(A, S);
    }
    case Engine::Rectangular: {
      QuiverSetup S = make_setup(A, opt);
      return quiver_rectangular(A, S, opt.jobs);
    }
    case Engine::Auto:
      break;
  }
  throw Error(ErrorKind::Internal, "unreachable engine dispatch");
}

}  // namespace mq
