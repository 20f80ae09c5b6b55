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

#include "osn/bounds.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "osn/error.hpp"
#include "osn/generators.hpp"

namespace osn {

std::int64_t floor(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

std::int64_t ceil(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ? q + 1 : q;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational upper_bound(const PlaneGraph& graph) {
  if (!is_maximal_planar(graph)) fail(ErrorKind::NotMaximalPlanar, "graph is not a triangulation");
  const auto n = static_cast<std::int64_t>(graph.num_vertices());
  switch (min_degree(graph)) {
    case 3: return Rational(3 * n - 10, 4);
    case 4: return Rational(2 * n - 7, 3);
    case 5: return Rational(4 * n - 13, 7);
    default:
      fail(ErrorKind::NotMaximalPlanar, "minimum degree outside 3..5");
  }
}

Rational lower_bound_generic(std::size_t n) {
  return Rational(static_cast<std::int64_t>(n) - 3, 2);
}

Rational lower_bound_3tree(int depth) {
  const auto n = static_cast<std::int64_t>(complete_3tree_order(depth));
  return Rational(2 * n - 8, 3);
}

std::size_t dual_girth(const PlaneGraph& graph) {
  const DualGraph d = dual_graph_of(graph);
  std::map<FaceId, std::size_t> index;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) index[d.nodes[i]] = i;
  const auto n = d.nodes.size();
  // Adjacency by edge id so parallel edges stay distinct.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto a = index[d.edges[e].first], b = index[d.edges[e].second];
    if (a == b) return 1;
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> via(n, std::numeric_limits<std::size_t>::max());
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& [y, e] : adj[x]) {
        if (e == via[x]) continue;
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

bool BoundReport::consistent() const { return violations.empty(); }

BoundReport bound_report(const PlaneGraph& graph, std::optional<int> tree_depth,
                         std::optional<std::size_t> osn) {
  BoundReport r;
  r.n = graph.num_vertices();
  r.min_degree = min_degree(graph);
  r.lower_generic = lower_bound_generic(r.n);
  r.osn = osn;
  const bool maximal = is_maximal_planar(graph) && r.min_degree >= 3 && r.min_degree <= 5;
  if (maximal) r.upper = upper_bound(graph);
  if (tree_depth) r.lower_family = lower_bound_3tree(*tree_depth);
  if (!osn) return r;

  const auto value = static_cast<std::int64_t>(*osn);
  if (maximal && value < ceil(r.lower_generic)) {
    r.violations.push_back("osn " + std::to_string(value) + " below generic lower bound " +
                           to_string(r.lower_generic));
  }
  if (r.lower_family && value < ceil(*r.lower_family)) {
    r.violations.push_back("osn " + std::to_string(value) + " below 3-tree lower bound " +
                           to_string(*r.lower_family));
  }
  if (r.upper && value > floor(*r.upper) && r.n >= kUpperBoundThreshold) {
    r.violations.push_back("osn " + std::to_string(value) + " above upper bound " +
                           to_string(*r.upper));
  }
  return r;
}

}  // namespace osn
