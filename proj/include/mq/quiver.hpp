#ifndef MQ_QUIVER_HPP
#define MQ_QUIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mq/classify.hpp"
#include "mq/green.hpp"
#include "mq/grouprep.hpp"
#include "mq/karoubi.hpp"
#include "mq/lattice.hpp"
#include "mq/monoid.hpp"

namespace mq {

/// Shared structural data for one monoid.
struct Analysis {
  MonoidTable M;
  GreenData green;
  SupportLattice lattice;
  ClassFlags flags;
};

Analysis analyze(const MonoidTable& M);

struct QuiverVertex {
  int lattice = 0;
  int irrep = 0;
  int degree = 1;
  std::string label;
  bool operator==(const QuiverVertex& o) const {
    return lattice == o.lattice && irrep == o.irrep && degree == o.degree;
  }
};

/// Vertices in lattice-major order; arrows[i][j] counts arrows i -> j.
struct QuiverGraph {
  std::vector<QuiverVertex> vertices;
  std::vector<std::vector<long long>> arrows;

  bool operator==(const QuiverGraph& o) const {
    return vertices == o.vertices && arrows == o.arrows;
  }
  long long total_arrows() const {
    long long t = 0;
    for (const auto& row : arrows)
      for (long long v : row) t += v;
    return t;
  }
  /// Dimension of the path algebra; empty when the quiver has a directed
  /// cycle (counting paths weighted by arrow multiplicities).
  std::optional<long long> path_algebra_dim() const;
};

struct QuiverOptions {
  std::optional<std::int64_t> prime;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Character tables of all maximal subgroups at one shared prime, plus
/// the dimension bound the prime was chosen for.
struct QuiverSetup {
  std::int64_t prime = 0;
  std::uint64_t seed = 1;
  std::vector<CharTable> tables;  // per lattice element
  long long dimBound = 0;
};

QuiverSetup make_setup(const Analysis& A, const QuiverOptions& opt = {});

enum class VxyCase { Incomparable, Equal, LessXY, LessYX };

/// The module representing outer derivations for an ordered lattice pair,
/// realized over F_p with action matrices at conjugacy class pair
/// representatives of G_Y x G_X and the corresponding character.
struct VxyModule {
  VxyCase caseTag = VxyCase::Incomparable;
  int dim = 0;
  PairCharacter character;
  std::vector<FpMat> actions;  // index cY * classesX + cX

  const FpMat& action(int cy, int cx) const {
    return actions[std::size_t(cy) * character.classesX + cx];
  }
};

/// Requires a rectangular monoid.  For comparable pairs the generator
/// idempotent of the lower element is renormalized under the upper one;
/// the case with the source above the target is run on the opposite
/// monoid.
VxyModule build_vxy(const Analysis& A, const QuiverSetup& S, int X, int Y);

QuiverGraph quiver_jtrivial(const Analysis& A);
QuiverGraph quiver_rtrivial(const Analysis& A, int jobs = 1);
QuiverGraph quiver_band(const Analysis& A, int jobs = 1);
QuiverGraph quiver_orthogroup(const Analysis& A, const QuiverSetup& S,
                              int jobs = 1);
QuiverGraph quiver_dg(const Analysis& A, const QuiverSetup& S);
QuiverGraph quiver_rectangular(const Analysis& A, const QuiverSetup& S,
                               int jobs = 1);

/// Quiver of the category algebra of a finite skeletal EI-category:
/// computed on the arrow monoid and stripped of the two adjoined
/// idempotent vertices.  Vertex lattice ids are object ids.
QuiverGraph quiver_ei(const FiniteCategorySpec& C, const QuiverOptions& opt = {});

enum class Engine { Auto, JTrivial, RTrivial, Band, Orthogroup, DG, Rectangular };

const char* engine_name(Engine e);
std::optional<Engine> engine_from_name(const std::string& s);

/// Engines valid for the given flags, most specific first.
std::vector<Engine> applicable_engines(const ClassFlags& f);

/// Dispatch: most specific applicable engine, or the requested one.
QuiverGraph quiver(const Analysis& A, Engine engine = Engine::Auto,
                   const QuiverOptions& opt = {});

}  // namespace mq

#endif
