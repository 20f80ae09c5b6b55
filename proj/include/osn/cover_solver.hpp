// Copyright 2026 The osn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OSN_COVER_SOLVER_HPP_
#define OSN_COVER_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "osn/plane_graph.hpp"
#include "osn/split_engine.hpp"

namespace osn {

struct FvsSolution {
  std::vector<FaceId> nodes;  // sorted
  // Dual edges that survive removal of `nodes`; they form a forest.
  std::vector<std::pair<FaceId, FaceId>> forest;
};

// True when removing `nodes` leaves no cycle. Parallel edges count as
// 2-cycles and self-loops as 1-cycles.
bool is_feedback_vertex_set(const DualGraph& dual, std::span<const FaceId> nodes);

/// Exact minimum feedback vertex set of a loopless multigraph.
///
/// Branch and bound over "delete / keep" decisions with the usual
/// reductions (drop nodes of degree <= 1, bypass degree-2 nodes, force the
/// endpoint of a self-loop) and a cycle-rank lower bound. Among all optima
/// the lexicographically least node set is returned. Throws SelfLoopPresent.
FvsSolution min_fvs(const DualGraph& dual);

// Smallest FVS size only; same search without the tie-breaking pass.
std::size_t min_fvs_size(const DualGraph& dual);

// Throws NotBiconnected, InvalidCover if `solution` is not an FVS of the
// dual, and CertificateFailure if the induced cover fails verification.
FaceCover fvs_to_cover(const PlaneGraph& graph, const FvsSolution& solution);

struct OsnResult {
  std::size_t osn = 0;
  FaceCover cover;
  SplitSequence splits;
  PlaneGraph outerplane;  // the graph after replaying `splits`
};

// Throws NotBiconnected. Graphs without an outer face get the default one.
OsnResult solve_osn(const PlaneGraph& graph);

// Exhaustive oracles. They use nothing from the solver above.
inline constexpr std::size_t kDefaultCfcFaceCap = 20;
inline constexpr std::size_t kDefaultSplitFaceCap = 10;

// Smallest connected face cover; equal sizes are ordered lexicographically.
// Throws CapExceeded.
FaceCover brute_min_cfc(const PlaneGraph& graph, std::size_t face_cap = kDefaultCfcFaceCap);

// Least number of splits reaching an outerplane graph, by iterative
// deepening over every split of every vertex. nullopt when none exists
// within `k_max`. Throws CapExceeded.
std::optional<std::size_t> brute_osn_by_splits(const PlaneGraph& graph, std::size_t k_max,
                                               std::size_t face_cap = kDefaultSplitFaceCap);

}  // namespace osn

#endif  // OSN_COVER_SOLVER_HPP_
