#pragma once

#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

/// Exact minimum feedback vertex set: subset enumeration for small n, cycle
/// branching for larger sparse instances (subcubic inputs comfortably reach
/// a few dozen vertices). CapacityError above cap.
std::vector<int> min_fvs_exact(const Graph& g, int cap = 64);

/// Rewrites a feedback vertex set of a connected subcubic graph (neither a
/// tree nor a cycle) so that every member has degree 3, without growing it.
/// A degree-<=2 member walks along its chain of degree-2 vertices to the
/// nearest degree-3 vertex; members on no cycle are dropped.
std::vector<int> normalize_degree3(const Graph& g, std::vector<int> f);

/// Working state of the transformation. Invariants, re-checked after every
/// step: F is a feedback vertex set of host whose members all have degree 3;
/// J is a subset of F; J is independent and host - J is connected.
struct TransformState {
  const Graph* host;
  std::vector<int> f;
  std::vector<int> j;

  void validate() const;  // throws std::logic_error on a broken invariant
};

/// Moves vertices from F into J until host - J is a nice cactus. |F| never
/// grows; state invariants hold after every step.
TransformState make_nice_cactus(TransformState state);

/// Finishes the transformation once host - J is a nice cactus, returning an
/// independent feedback vertex set of size <= |F| whose members all have
/// degree 3 in host.
std::vector<int> complete_ifvs(const TransformState& state);

struct IfvsResult {
  enum class Outcome { Solution, NoIfvsK4 };
  Outcome outcome;
  std::vector<int> set;
  bool degree3_only = false;
  int min_fvs_size = 0;  // size certificate: minimum feedback vertex set
};

/// Minimum independent feedback vertex set of a connected subcubic graph.
/// K4 has none; on a very nice cactus the solution takes the vertex of each
/// cycle farthest from vertex 0 (degree-2 members are unavoidable there);
/// otherwise the seed-and-transform pipeline yields a degree-3-only set of
/// minimum feedback vertex set size. ValidationError on disconnected or
/// non-subcubic input.
IfvsResult min_ifvs_subcubic(const Graph& g);

}  // namespace starfree
