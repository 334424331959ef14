#ifndef MQ_MONOID_HPP
#define MQ_MONOID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mq {

/// A finite monoid given by its full multiplication table over element
/// indices 0..n-1.  Immutable after construction; all structure
/// computations take it by const reference.
struct MonoidTable {
  int n = 0;
  std::vector<int> mul;  // row-major n*n
  int identity = 0;
  std::vector<std::string> labels;  // empty or size n
  std::vector<int> generators;      // may be empty

  int at(int a, int b) const { return mul[std::size_t(a) * n + b]; }

  std::string label(int m) const {
    return labels.empty() ? std::to_string(m) : labels[m];
  }
};

/// Generating set of a transformation monoid: total maps on
/// {0,...,degree-1}, acting on the right (points written to the left).
struct TransformationGen {
  int degree = 1;
  std::vector<std::vector<int>> maps;
};

/// Validate a raw table: square, entries in range, associative, with
/// identity.  If `identity` is given it is checked, otherwise located.
/// Element order is preserved.
MonoidTable from_table(const std::vector<std::vector<int>>& table,
                       std::optional<int> identity = std::nullopt,
                       std::vector<std::string> labels = {},
                       std::vector<int> generators = {});

/// Close a set of transformations under composition.  The identity map is
/// adjoined as element 0 if not generated.  Elements are ordered
/// breadth-first by word length with generator-order tie break, so the
/// output is reproducible.
MonoidTable from_transformations(const TransformationGen& gens,
                                 std::size_t max_size = 100000);

/// The unique idempotent power of m, found by cycle detection on the
/// power sequence.
int omega(const MonoidTable& M, int m);

/// Table with reversed multiplication; identity, labels and generators
/// are kept.
MonoidTable opposite(const MonoidTable& M);

/// Order of m in the cyclic subsemigroup sense: least (i, p) with
/// m^{i+p} = m^i.  Returned as index/period.
std::pair<int, int> index_period(const MonoidTable& M, int m);

}  // namespace mq

#endif
