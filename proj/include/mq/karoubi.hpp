#ifndef MQ_KAROUBI_HPP
#define MQ_KAROUBI_HPP

#include <string>
#include <vector>

#include "mq/green.hpp"
#include "mq/lattice.hpp"
#include "mq/monoid.hpp"

namespace mq {

/// Almost-irreducible morphisms e -> f of the Karoubi envelope:
/// fMe minus the product set ⊥Y·⊥X, where X = MeM, Y = MfM and ⊥ is the
/// complement of the support filter.  Sorted element list.
std::vector<int> airr(const MonoidTable& M, const GreenData& G, int e, int f);

/// Irreducible morphisms: the null elements of airr(e, f).
std::vector<int> irr(const MonoidTable& M, const GreenData& G, int e, int f);

/// Independent route for monoids whose idempotent conjugacy classes are
/// singletons: elements m with e_R(m) = e, e_L(m) = f, m outside ⊥Y⊥X and
/// m null.  Must agree with irr().
std::vector<int> irr_dg_crosscheck(const MonoidTable& M, const GreenData& G,
                                   int e, int f);

/// A finite category presented by arrow data.  compose[g][f] is the id of
/// g∘f when dst(f) = src(g), and -1 otherwise.
struct FiniteCategorySpec {
  int num_objects = 0;
  std::vector<std::string> object_names;  // optional, may be empty
  struct Arrow {
    int src = 0, dst = 0;
    std::string name;  // optional
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> compose;
  std::vector<int> identities;  // per object, an arrow id
};

/// Category axioms plus the skeletal and EI conditions; throws on failure.
void validate_category(const FiniteCategorySpec& C, bool require_skeletal_ei);

/// The monoid on arrows ∪ {z} ∪ {1}: undefined composites become z and a
/// fresh identity is adjoined.  objectIdem maps each object to the monoid
/// element of its identity arrow; one and zero are the adjoined elements.
struct EiMonoid {
  MonoidTable monoid;
  std::vector<int> objectIdem;
  int one = 0;
  int zero = 0;
};

EiMonoid ei_to_monoid(const FiniteCategorySpec& C);

/// Poset on {0..n-1} as a category: one arrow p -> q per pair p <= q.
FiniteCategorySpec poset_category(const std::vector<std::vector<char>>& leq);

/// Free category on a quiver given by edges src -> dst; must be acyclic.
FiniteCategorySpec free_category(int num_nodes,
                                 const std::vector<std::pair<int, int>>& edges);

/// Objects {0},...,{0..n-1} plus the empty set, arrows the injections.
FiniteCategorySpec injections_category(int n);

}  // namespace mq

#endif
