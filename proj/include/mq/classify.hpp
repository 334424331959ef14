#ifndef MQ_CLASSIFY_HPP
#define MQ_CLASSIFY_HPP

#include <string>
#include <vector>

#include "mq/monoid.hpp"

namespace mq {

/// Membership flags for the monoid classes the quiver engines dispatch
/// on.  All are decided by exhaustive identity checks.
struct ClassFlags {
  bool band = false;
  bool semilattice = false;
  bool leftRegularBand = false;
  bool rightRegularBand = false;
  bool regularBand = false;
  bool jTrivial = false;
  bool rTrivial = false;
  bool lTrivial = false;
  bool dg = false;
  bool da = false;
  bool rectangular = false;  // DO: conjugacy classes of idempotents are bands
  bool orthogroup = false;
  bool clifford = false;
  bool group = false;
  bool regular = false;  // von Neumann regular
  bool ds = false;
};

ClassFlags classify(const MonoidTable& M);

std::vector<std::pair<std::string, bool>> flag_list(const ClassFlags& f);

/// Quotient of M by the smallest congruence identifying the listed pairs.
/// Classes are numbered by smallest member, so element order is canonical.
struct Quotient {
  MonoidTable monoid;
  std::vector<int> map;  // element of M -> element of quotient
};

Quotient quotient_by_pairs(const MonoidTable& M,
                           const std::vector<std::pair<int, int>>& pairs);

/// M_l: quotient collapsing every two-element right-zero subsemigroup.
Quotient left_quotient(const MonoidTable& M);
/// M_r: quotient collapsing every two-element left-zero subsemigroup.
Quotient right_quotient(const MonoidTable& M);

}  // namespace mq

#endif
