#ifndef MQ_IO_HPP
#define MQ_IO_HPP

#include <string>

#include "mq/grouprep.hpp"
#include "mq/karoubi.hpp"
#include "mq/lattice.hpp"
#include "mq/monoid.hpp"
#include "mq/quiver.hpp"
#include "mq/rtrivial.hpp"

namespace mq {

/// Kind of an input file, decided by its fields: "table" for monoids,
/// "transformations" for generator files, "objects" for categories.
enum class InputKind { Monoid, Transformations, Category };

InputKind detect_input(const std::string& json_text);

std::string monoid_to_json(const MonoidTable& M);
MonoidTable monoid_from_json(const std::string& text);

/// Transformation files carry an explicit one_based flag.
MonoidTable transformations_from_json(const std::string& text,
                                      std::size_t max_size = 100000);

FiniteCategorySpec category_from_json(const std::string& text);

/// Loads any of the three kinds; categories go through the arrow monoid.
MonoidTable load_monoid(const std::string& text, bool adjoin_identity,
                        std::size_t max_size);

std::string quiver_to_json(const QuiverGraph& Q);
std::string quiver_to_dot(const QuiverGraph& Q);
std::string quiver_to_text(const QuiverGraph& Q);

std::string lattice_to_json(const MonoidTable& M, const SupportLattice& L);
std::string lattice_to_dot(const MonoidTable& M, const SupportLattice& L);

std::string matrix_to_text(const std::vector<std::vector<long long>>& m,
                           const std::vector<std::string>& names);
std::string matrix_to_json(const std::vector<std::vector<long long>>& m,
                           const std::vector<std::string>& names);

std::string green_to_dot(const MonoidTable& M, const GreenData& G);

/// Debug dump of a character table: classes, sizes, degrees and rows.
std::string char_table_to_json(const CharTable& T);

}  // namespace mq

#endif
