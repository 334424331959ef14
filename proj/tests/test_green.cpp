#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "mq/error.hpp"
#include "mq/families.hpp"
#include "mq/green.hpp"
#include "mq/lattice.hpp"

using namespace mq;

namespace {

std::vector<MonoidTable> small_corpus() {
  std::vector<MonoidTable> out;
  out.push_back(monogenic(1, 1));
  out.push_back(monogenic(2, 1));
  out.push_back(monogenic(1, 2));
  out.push_back(mab_monoid(2, 2));
  out.push_back(mab_monoid(3, 2));
  out.push_back(free_left_regular_band(2));
  out.push_back(free_left_regular_band(3));
  out.push_back(free_band_monoid(2));
  out.push_back(extensive_monoid(3));
  out.push_back(hecke_zero_monoid(2));
  out.push_back(power_monoid_zn(2));
  out.push_back(power_monoid_zn(3));
  out.push_back(dg_example(cyclic_group(2), DgMode::Conjugation));
  out.push_back(dg_example(cyclic_group(2), DgMode::Square));
  out.push_back(symmetric_group(3));
  out.push_back(injections_monoid(2));
  return out;
}

// brute-force two-sided ideal as a set
std::set<int> ideal_of(const MonoidTable& M, int m) {
  std::set<int> s;
  for (int u = 0; u < M.n; ++u)
    for (int v = 0; v < M.n; ++v) s.insert(M.at(M.at(u, m), v));
  return s;
}

std::set<int> right_of(const MonoidTable& M, int m) {
  std::set<int> s;
  for (int u = 0; u < M.n; ++u) s.insert(M.at(m, u));
  return s;
}

std::set<int> left_of(const MonoidTable& M, int m) {
  std::set<int> s;
  for (int u = 0; u < M.n; ++u) s.insert(M.at(u, m));
  return s;
}

}  // namespace

TEST_CASE("green partitions match ideal equalities") {
  for (const auto& M : small_corpus()) {
    GreenData G = green(M);
    for (int a = 0; a < M.n; ++a)
      for (int b = 0; b < M.n; ++b) {
        CHECK((G.rClass[a] == G.rClass[b]) == (right_of(M, a) == right_of(M, b)));
        CHECK((G.lClass[a] == G.lClass[b]) == (left_of(M, a) == left_of(M, b)));
        CHECK((G.jClass[a] == G.jClass[b]) == (ideal_of(M, a) == ideal_of(M, b)));
      }
    // order agrees with ideal containment
    for (int a = 0; a < M.n; ++a)
      for (int b = 0; b < M.n; ++b) {
        auto ia = ideal_of(M, a), ib = ideal_of(M, b);
        bool inc = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
        CHECK(G.jLeq[G.jClass[a]][G.jClass[b]] == inc);
      }
  }
}

TEST_CASE("green examples") {
  SUBCASE("group monoid has one class of each kind") {
    GreenData G = green(symmetric_group(3));
    CHECK(G.numR == 1);
    CHECK(G.numL == 1);
    CHECK(G.numJ == 1);
  }
  SUBCASE("singular square has three J-classes") {
    GreenData G = green(mab_monoid(2, 2));
    CHECK(G.numJ == 3);
  }
  SUBCASE("free lrb on two letters") {
    MonoidTable M = free_left_regular_band(2);
    GreenData G = green(M);
    CHECK(G.numJ == 4);  // {1}, {a}, {b}, {ab,ba}
    std::map<int, int> sizes;
    for (int c = 0; c < G.numJ; ++c) ++sizes[(int)G.jMembers[c].size()];
    CHECK(sizes[1] == 3);
    CHECK(sizes[2] == 1);
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(symmetric_group(3)) == std::vector<int>{0});
  CHECK(idempotents(mab_monoid(2, 2)).size() == 6);
  CHECK(idempotents(free_band_monoid(2)).size() == 7);
}

TEST_CASE("conjugacy classes of idempotents") {
  SUBCASE("J-trivial: singletons") {
    MonoidTable M = hecke_zero_monoid(2);
    GreenData G = green(M);
    for (const auto& cls : conjugacy_classes_idem(M, G))
      CHECK(cls.size() == 1);
  }
  SUBCASE("singular square: 1, e and the minimal ideal") {
    MonoidTable M = mab_monoid(2, 2);
    GreenData G = green(M);
    auto classes = conjugacy_classes_idem(M, G);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<int>{0});
    CHECK(classes[1] == std::vector<int>{1});
    CHECK(classes[2].size() == 4);
  }
  SUBCASE("extensive maps group by MeM comparison") {
    MonoidTable M = extensive_monoid(3);
    GreenData G = green(M);
    // independent oracle: ideal-set equality on idempotents
    std::map<std::set<int>, std::set<int>> byIdeal;
    for (int e : idempotents(M)) byIdeal[ideal_of(M, e)].insert(e);
    auto classes = conjugacy_classes_idem(M, G);
    CHECK(classes.size() == byIdeal.size());
    for (const auto& cls : classes) {
      std::set<int> s(cls.begin(), cls.end());
      bool found = false;
      for (auto& [k, v] : byIdeal) found = found || v == s;
      CHECK(found);
    }
  }
}

TEST_CASE("maximal subgroups") {
  SUBCASE("at the identity of a group") {
    MonoidTable M = symmetric_group(3);
    MaxSubgroup G = maximal_subgroup(M, 0);
    CHECK(G.size() == 6);
  }
  SUBCASE("bands have trivial subgroups") {
    MonoidTable M = free_band_monoid(2);
    for (int e : idempotents(M)) CHECK(maximal_subgroup(M, e).size() == 1);
  }
  SUBCASE("power monoid of Z/2 at the full subset") {
    MonoidTable M = power_monoid_zn(2);
    // brute-force units of eMe
    int e = 3;  // the full subset
    REQUIRE(M.at(e, e) == e);
    std::set<int> local;
    for (int m = 0; m < M.n; ++m) local.insert(M.at(M.at(e, m), e));
    std::set<int> units;
    for (int g : local)
      for (int h : local)
        if (M.at(g, h) == e && M.at(h, g) == e) units.insert(g);
    MaxSubgroup G = maximal_subgroup(M, e);
    CHECK((int)units.size() == G.size());
  }
  SUBCASE("group axioms and inverses") {
    MonoidTable M = dg_example(symmetric_group(3), DgMode::Conjugation);
    MaxSubgroup G = maximal_subgroup(M, M.identity);
    CHECK(G.size() == 6);
    for (int i = 0; i < G.size(); ++i) {
      CHECK(M.at(G.elems[i], G.elems[G.inv[i]]) == G.e);
      CHECK(M.at(G.elems[G.inv[i]], G.elems[i]) == G.e);
    }
  }
  SUBCASE("rejects non-idempotents") {
    CHECK_THROWS_AS(maximal_subgroup(monogenic(2, 1), 1), Error);
  }
}

TEST_CASE("null elements") {
  CHECK(null_elements(free_band_monoid(2)).empty());
  CHECK(null_elements(monogenic(1, 2)).empty());  // x^3 = x is regular
  CHECK(null_elements(monogenic(2, 1)) == std::vector<int>{1});
  // independent check: m in mMm by brute force
  for (const auto& M : small_corpus()) {
    auto nulls = null_elements(M);
    std::set<int> nullSet(nulls.begin(), nulls.end());
    for (int m = 0; m < M.n; ++m) {
      bool reg = false;
      for (int u = 0; u < M.n; ++u)
        if (M.at(M.at(m, u), m) == m) reg = true;
      CHECK(reg == !nullSet.count(m));
    }
  }
}

TEST_CASE("stabilizer idempotents") {
  SUBCASE("identity stabilizes itself") {
    MonoidTable M = hecke_zero_monoid(2);
    auto [l, r] = stab_idempotents(M, M.identity);
    CHECK(l == M.identity);
    CHECK(r == M.identity);
  }
  SUBCASE("x in x^3 = x^2") {
    // x^2 does not stabilize x: x^2 x = x^3 = x^2 != x, so both
    // stabilizers are {1}
    MonoidTable M = monogenic(2, 1);
    auto [l, r] = stab_idempotents(M, 1);
    CHECK(l == 0);
    CHECK(r == 0);
  }
  SUBCASE("agrees with minimal-ideal enumeration on a J-trivial monoid") {
    MonoidTable M = hecke_zero_monoid(2);
    for (int m = 0; m < M.n; ++m) {
      auto [l, r] = stab_idempotents(M, m);
      CHECK(M.at(l, m) == m);
      CHECK(M.at(m, r) == m);
      // independent route: enumerate the left stabilizer and the ideals
      // of its elements; the minimal ideal's idempotent must be l
      std::vector<int> st;
      for (int x = 0; x < M.n; ++x)
        if (M.at(x, m) == m) st.push_back(x);
      std::set<int> inSt(st.begin(), st.end());
      std::map<int, std::set<int>> ideals;
      for (int s : st) {
        std::set<int> ide;
        for (int a : st)
          for (int b : st) ide.insert(M.at(M.at(a, s), b));
        ideals[s] = ide;
      }
      std::size_t best = M.n + 1;
      for (auto& [s, ide] : ideals) best = std::min(best, ide.size());
      std::set<int> minIdeal;
      for (auto& [s, ide] : ideals)
        if (ide.size() == best) minIdeal.insert(ide.begin(), ide.end());
      std::set<int> idems;
      for (int s : minIdeal)
        if (M.at(s, s) == s && inSt.count(s)) idems.insert(s);
      CHECK(idems.size() == 1);
      CHECK(*idems.begin() == l);
    }
  }
}

TEST_CASE("tilde-L classes") {
  SUBCASE("free lrb on two letters") {
    MonoidTable M = free_left_regular_band(2);
    GreenData G = green(M);
    SupportLattice L = support_lattice(M, G);
    TildeLClasses T = tilde_L_classes(M, G, L);
    std::multiset<std::size_t> sizes;
    for (const auto& c : T.members) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2});
    int total = 0;
    for (const auto& c : T.members) total += (int)c.size();
    CHECK(total == M.n);
  }
  SUBCASE("J-trivial: classes are the fibers of the right stabilizer idempotent") {
    MonoidTable M = hecke_zero_monoid(2);
    GreenData G = green(M);
    SupportLattice L = support_lattice(M, G);
    TildeLClasses T = tilde_L_classes(M, G, L);
    for (int m = 0; m < M.n; ++m)
      for (int k = 0; k < M.n; ++k) {
        auto [lm, rm] = stab_idempotents(M, m);
        auto [lk, rk] = stab_idempotents(M, k);
        CHECK((T.latticeOf[m] == T.latticeOf[k]) == (rm == rk));
      }
  }
  SUBCASE("semilattice: singletons") {
    MonoidTable M = power_monoid_zn(1);
    GreenData G = green(M);
    SupportLattice L = support_lattice(M, G);
    TildeLClasses T = tilde_L_classes(M, G, L);
    for (const auto& c : T.members) CHECK(c.size() == 1);
  }
  SUBCASE("partition property on R-trivial corpus members") {
    for (const auto& M :
         {free_left_regular_band(3), extensive_monoid(3), hecke_zero_monoid(2)}) {
      GreenData G = green(M);
      SupportLattice L = support_lattice(M, G);
      TildeLClasses T = tilde_L_classes(M, G, L);
      int total = 0;
      for (const auto& c : T.members) total += (int)c.size();
      CHECK(total == M.n);
    }
  }
  SUBCASE("rejects non-R-trivial monoids") {
    MonoidTable M = mab_monoid(2, 2);
    GreenData G = green(M);
    SupportLattice L = support_lattice(M, G);
    CHECK_THROWS_AS(tilde_L_classes(M, G, L), Error);
  }
}

TEST_CASE("J equals D on the corpus") {
  for (const auto& M : small_corpus()) {
    GreenData G = green(M);
    for (int m = 0; m < M.n; ++m)
      for (int k = 0; k < M.n; ++k) {
        if (G.jClass[m] != G.jClass[k]) continue;
        bool witness = false;
        for (int p = 0; p < M.n && !witness; ++p)
          witness = G.rClass[m] == G.rClass[p] && G.lClass[p] == G.lClass[k];
        CHECK(witness);
      }
  }
}

TEST_CASE("stability identity") {
  for (const auto& M : small_corpus()) {
    GreenData G = green(M);
    for (int m = 0; m < M.n; ++m)
      for (int k = 0; k < M.n; ++k) {
        int mn = M.at(m, k);
        CHECK((G.jClass[mn] == G.jClass[m]) == (G.rClass[mn] == G.rClass[m]));
        int nm = M.at(k, m);
        CHECK((G.jClass[nm] == G.jClass[m]) == (G.lClass[nm] == G.lClass[m]));
      }
  }
}

TEST_CASE("conjugate idempotents have isomorphic maximal subgroups") {
  for (const auto& M : small_corpus()) {
    GreenData G = green(M);
    for (const auto& cls : conjugacy_classes_idem(M, G)) {
      MaxSubgroup G0 = maximal_subgroup(M, cls[0]);
      for (std::size_t i = 1; i < cls.size(); ++i) {
        MaxSubgroup Gi = maximal_subgroup(M, cls[i]);
        CHECK(G0.size() == Gi.size());
        // transport along witnesses a, b with ab = e, ba = f
        int e = cls[0], f = cls[i];
        int wa = -1, wb = -1;
        for (int a = 0; a < M.n && wa < 0; ++a)
          for (int b = 0; b < M.n; ++b)
            if (M.at(a, b) == e && M.at(b, a) == f) {
              wa = a;
              wb = b;
              break;
            }
        REQUIRE(wa >= 0);
        // x -> b (e x e) a maps G_e into G_f multiplicatively
        auto phi = [&](int x) {
          return M.at(M.at(wb, M.at(M.at(e, x), e)), wa);
        };
        for (int x : G0.elems)
          for (int y : G0.elems)
            CHECK(phi(M.at(x, y)) == M.at(phi(x), phi(y)));
        CHECK(phi(e) == f);
      }
    }
  }
}
