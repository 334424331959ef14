#include <doctest.h>

#include <set>

#include "mq/classify.hpp"
#include "mq/error.hpp"
#include "mq/families.hpp"
#include "mq/green.hpp"
#include "mq/lattice.hpp"

using namespace mq;

namespace {

MonoidTable brandt() {
  return from_table({{0, 1, 2, 3, 4, 5},
                     {1, 1, 2, 5, 5, 5},
                     {2, 5, 5, 1, 2, 5},
                     {3, 3, 4, 5, 5, 5},
                     {4, 5, 5, 3, 4, 5},
                     {5, 5, 5, 5, 5, 5}});
}

std::vector<MonoidTable> corpus() {
  return {monogenic(1, 1),
          monogenic(2, 1),
          monogenic(1, 2),
          mab_monoid(2, 2),
          free_left_regular_band(2),
          free_band_monoid(2),
          extensive_monoid(3),
          hecke_zero_monoid(2),
          power_monoid_zn(2),
          dg_example(cyclic_group(2), DgMode::Conjugation),
          dg_example(symmetric_group(3), DgMode::Square),
          symmetric_group(3),
          injections_monoid(2),
          brandt()};
}

}  // namespace

TEST_CASE("classification of named monoids") {
  SUBCASE("singular square") {
    ClassFlags f = classify(mab_monoid(2, 2));
    CHECK(f.band);
    CHECK(f.regularBand);
    CHECK(!f.leftRegularBand);
    CHECK(!f.rightRegularBand);
    CHECK(f.rectangular);
    CHECK(f.orthogroup);
    CHECK(!f.rTrivial);
    CHECK(f.da);
  }
  SUBCASE("extensive maps on three points") {
    ClassFlags f = classify(extensive_monoid(3));
    CHECK(f.rTrivial);
    CHECK(!f.jTrivial);
    CHECK(f.rectangular);
    CHECK(f.da);
    CHECK(!f.band);
  }
  SUBCASE("0-Hecke monoid of rank two") {
    ClassFlags f = classify(hecke_zero_monoid(2));
    CHECK(f.jTrivial);
    CHECK(f.rTrivial);
    CHECK(f.lTrivial);
    CHECK(f.dg);
    CHECK(f.da);
  }
  SUBCASE("free left regular band") {
    ClassFlags f = classify(free_left_regular_band(2));
    CHECK(f.band);
    CHECK(f.leftRegularBand);
    CHECK(f.rTrivial);
    CHECK(!f.jTrivial);
  }
  SUBCASE("groups") {
    ClassFlags f = classify(symmetric_group(3));
    CHECK(f.group);
    CHECK(f.rectangular);
    CHECK(f.dg);
    CHECK(f.clifford);
    CHECK(f.orthogroup);
    CHECK(!f.da);
  }
  SUBCASE("power monoid of Z/2 is a commutative DG monoid") {
    ClassFlags f = classify(power_monoid_zn(2));
    CHECK(f.dg);
    CHECK(f.rectangular);
    CHECK(f.ds);
  }
  SUBCASE("annihilator extension is DG but not regular") {
    ClassFlags f = classify(dg_example(cyclic_group(2), DgMode::Conjugation));
    CHECK(f.dg);
    CHECK(f.rectangular);
    CHECK(!f.regular);
    CHECK(!f.da);
  }
  SUBCASE("matrix-unit monoid fails every rectangular-type class") {
    ClassFlags f = classify(brandt());
    CHECK(!f.rectangular);
    CHECK(!f.ds);
    CHECK(!f.dg);
    CHECK(f.regular);
  }
  SUBCASE("semilattice flags") {
    ClassFlags f = classify(monogenic(1, 1));
    CHECK(f.semilattice);
    CHECK(f.band);
    CHECK(f.jTrivial);
    CHECK(f.clifford);
  }
}

TEST_CASE("flag implications hold on the corpus") {
  for (const auto& M : corpus()) {
    ClassFlags f = classify(M);
    if (f.jTrivial) {
      CHECK(f.rTrivial);
      CHECK(f.lTrivial);
      CHECK(f.dg);
    }
    if (f.rTrivial) CHECK(f.rectangular);
    if (f.band) {
      CHECK(f.orthogroup);
    }
    if (f.orthogroup) {
      CHECK(f.rectangular);
      CHECK(f.regular);
    }
    if (f.dg) CHECK(f.rectangular);
    if (f.clifford) CHECK(f.dg);
    if (f.rectangular) CHECK(f.ds);
    if (f.semilattice) {
      CHECK(f.band);
      CHECK(f.jTrivial);
    }
    if (f.group) {
      CHECK(f.clifford);
      CHECK(f.orthogroup);
    }
  }
}

TEST_CASE("the three rectangularity criteria agree") {
  // (2) conjugacy via efe = e, fef = f; (4) the omega identity;
  // (6) men = mn inside a common idempotent class
  for (const auto& M : corpus()) {
    GreenData G = green(M);
    bool crit2 = true;
    auto E = idempotents(M);
    for (int e : E)
      for (int f : E) {
        bool sameIdeal = G.jClass[e] == G.jClass[f];
        bool local = M.at(M.at(e, f), e) == e && M.at(M.at(f, e), f) == f;
        if (sameIdeal != local) crit2 = false;
      }
    bool crit4 = true;
    for (int x = 0; x < M.n; ++x)
      for (int y = 0; y < M.n; ++y) {
        int exy = omega(M, M.at(x, y)), eyx = omega(M, M.at(y, x));
        if (M.at(M.at(exy, eyx), exy) != exy) crit4 = false;
      }
    bool crit6 = true;
    for (int e : E)
      for (int m = 0; m < M.n; ++m) {
        if (G.jClass[m] != G.jClass[e]) continue;
        for (int n = 0; n < M.n; ++n) {
          if (G.jClass[n] != G.jClass[e]) continue;
          if (M.at(M.at(m, e), n) != M.at(m, n)) crit6 = false;
        }
      }
    CHECK(crit2 == crit4);
    CHECK(crit4 == crit6);
    CHECK(classify(M).rectangular == crit4);
  }
}

TEST_CASE("left and right quotients") {
  SUBCASE("left regular bands keep their size on the left quotient") {
    MonoidTable M = free_left_regular_band(3);
    Quotient Q = left_quotient(M);
    CHECK(Q.monoid.n == M.n);
  }
  SUBCASE("singular square collapses to four elements on the left") {
    MonoidTable M = mab_monoid(2, 2);
    Quotient Q = left_quotient(M);
    CHECK(Q.monoid.n == 4);
    CHECK(classify(Q.monoid).leftRegularBand);
    // no two-element right-zero subsemigroup remains
    auto E = idempotents(Q.monoid);
    for (int e : E)
      for (int f : E)
        if (e != f)
          CHECK(!(Q.monoid.at(e, f) == f && Q.monoid.at(f, e) == e));
  }
  SUBCASE("right-zero pair with identity collapses to the two-chain") {
    MonoidTable M = from_table({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
    Quotient Q = left_quotient(M);
    CHECK(Q.monoid.n == 2);
    CHECK(classify(Q.monoid).semilattice);
  }
  SUBCASE("quotient maps are surjective homomorphisms") {
    for (const auto& M : {mab_monoid(3, 2), free_band_monoid(2),
                          extensive_monoid(3)}) {
      for (auto Q : {left_quotient(M), right_quotient(M)}) {
        std::set<int> image(Q.map.begin(), Q.map.end());
        CHECK((int)image.size() == Q.monoid.n);
        for (int a = 0; a < M.n; ++a)
          for (int b = 0; b < M.n; ++b)
            CHECK(Q.map[M.at(a, b)] == Q.monoid.at(Q.map[a], Q.map[b]));
      }
    }
  }
  SUBCASE("rectangular is closed under the quotients") {
    for (const auto& M : {mab_monoid(2, 2), free_band_monoid(2),
                          free_left_regular_band(3)}) {
      CHECK(classify(left_quotient(M).monoid).rectangular);
      CHECK(classify(right_quotient(M).monoid).rectangular);
    }
  }
  SUBCASE("quotients preserve the support lattice and simple count") {
    for (const auto& M :
         {mab_monoid(3, 2), free_band_monoid(2), extensive_monoid(3)}) {
      GreenData G = green(M);
      SupportLattice L = support_lattice(M, G);
      for (auto Q : {left_quotient(M), right_quotient(M)}) {
        GreenData Gq = green(Q.monoid);
        SupportLattice Lq = support_lattice(Q.monoid, Gq);
        REQUIRE(Lq.k == L.k);
        // image ideals match the quotient's primary ideals one-to-one
        std::vector<int> match(L.k, -1);
        for (int X = 0; X < L.k; ++X) {
          Bitset img(Q.monoid.n);
          for (int m : L.ideal[X].members()) img.set(Q.map[m]);
          for (int Y = 0; Y < Lq.k; ++Y)
            if (Lq.ideal[Y] == img) match[X] = Y;
          REQUIRE(match[X] >= 0);
        }
        for (int X = 0; X < L.k; ++X)
          for (int Y = 0; Y < L.k; ++Y)
            CHECK(L.le(X, Y) == Lq.le(match[X], match[Y]));
        // matching subgroup orders give matching simple-module counts
        for (int X = 0; X < L.k; ++X)
          CHECK(maximal_subgroup(M, L.idem[X]).size() ==
                maximal_subgroup(Q.monoid, Lq.idem[match[X]]).size());
      }
    }
  }
}
