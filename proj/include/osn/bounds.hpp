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

#ifndef OSN_BOUNDS_HPP_
#define OSN_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "osn/plane_graph.hpp"

namespace osn {

using Rational = boost::rational<std::int64_t>;

std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);
std::string to_string(const Rational& r);

// Upper bound on osn for maximal planar graphs, chosen by minimum degree:
// 3 -> (3n - 10) / 4, 4 -> (2n - 7) / 3, 5 -> (4n - 13) / 7.
// Throws NotMaximalPlanar.
Rational upper_bound(const PlaneGraph& graph);

// (n - 3) / 2 for maximal planar graphs on n vertices.
Rational lower_bound_generic(std::size_t n);

// (2 n_d - 8) / 3 = 3^d - 1 for the complete planar 3-tree T_d.
Rational lower_bound_3tree(int depth);

// Shortest cycle of the dual; parallel edges give 2.
std::size_t dual_girth(const PlaneGraph& graph);

// Below this order the upper bound is reported, not enforced.
inline constexpr std::size_t kUpperBoundThreshold = 8;

struct BoundReport {
  std::size_t n = 0;
  std::size_t min_degree = 0;
  Rational lower_generic;
  std::optional<Rational> lower_family;
  std::optional<Rational> upper;
  std::optional<std::size_t> osn;
  // Human-readable notes on bounds that osn does not satisfy.
  std::vector<std::string> violations;

  // True when every applicable bound holds, with the upper bound only
  // counted from kUpperBoundThreshold vertices on.
  bool consistent() const;
};

// lower_generic and upper need a maximal planar graph; for other inputs they
// are left as (n - 3) / 2 and nullopt and no violation is recorded for them.
BoundReport bound_report(const PlaneGraph& graph, std::optional<int> tree_depth,
                         std::optional<std::size_t> osn);

}  // namespace osn

#endif  // OSN_BOUNDS_HPP_
