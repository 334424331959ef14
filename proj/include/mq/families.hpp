#ifndef MQ_FAMILIES_HPP
#define MQ_FAMILIES_HPP

#include <string>
#include <vector>

#include "mq/monoid.hpp"

namespace mq {

/// Free left regular band monoid on n letters: repetition-free words,
/// product keeps the first occurrence of each letter.
MonoidTable free_left_regular_band(int n);

/// Free band on n letters with an adjoined identity.
MonoidTable free_band_monoid(int n);

/// The monoid {1, e} ∪ A×B where A×B is a rectangular band,
/// e(x,y) = (a0,y) and (x,y)e = (x,y).  mab(2,2) is the singular square
/// with identity.
MonoidTable mab_monoid(int a, int b);

/// All extensive maps on {0,...,n-1} (maps with f(i) <= i), acting on the
/// right; n! elements.
MonoidTable extensive_monoid(int n);

/// 0-Hecke monoid of the symmetric group S_{n+1} (Coxeter type A_n),
/// realized by its length-increasing action on permutations.
MonoidTable hecke_zero_monoid(int n);

/// Power monoid of Z/n: all subsets under sumset multiplication.
MonoidTable power_monoid_zn(int n);

/// Cyclic group Z/n as a monoid table.
MonoidTable cyclic_group(int n);

/// Symmetric group S_n as a monoid table (permutations in lex order).
MonoidTable symmetric_group(int n);

enum class DgMode {
  Conjugation,  // annihilator part is G with action (g,h)x = gxh^{-1}
  Square,       // annihilator part is G x G with the regular action
};

/// The monoid G ∪ X ∪ {z}: group of units G, a G×G-set X with X² = {z},
/// and z a multiplicative zero.  Its idempotents 1, z are central.
MonoidTable dg_example(const MonoidTable& group, DgMode mode);

/// Monogenic monoid with x^{index+period} = x^{index}; size index+period.
MonoidTable monogenic(int index, int period);

/// Monoid of the category of injections between {0},...,{0..n-1} plus the
/// empty set (adjoined zero and identity).
MonoidTable injections_monoid(int n);

/// Dispatch by family name; args are decimal integers or, for the dg
/// families, a group name among z2..z6, s3, s4.
MonoidTable gen_family(const std::string& name,
                       const std::vector<std::string>& args);

std::vector<std::string> family_names();

}  // namespace mq

#endif
