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

#include "osn/cover_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

#include "osn/error.hpp"

namespace osn {

namespace {

// Dense multigraph used by the FVS search. Node i is dual.nodes[i].
class Work {
 public:
  explicit Work(int n)
      : n_(n), mult_(static_cast<std::size_t>(n) * n, 0), loops_(n, 0), degree_(n, 0),
        alive_(n, 1), forbidden_(n, 0) {}

  int size() const { return n_; }
  bool alive(int v) const { return alive_[v] != 0; }
  bool forbidden(int v) const { return forbidden_[v] != 0; }
  void forbid(int v) { forbidden_[v] = 1; }
  int degree(int v) const { return degree_[v]; }
  int mult(int a, int b) const { return mult_[index(a, b)]; }

  void add_edge(int a, int b) {
    if (a == b) {
      ++loops_[a];
      degree_[a] += 2;
      return;
    }
    ++mult_[index(a, b)];
    ++mult_[index(b, a)];
    ++degree_[a];
    ++degree_[b];
  }

  void remove(int v) {
    for (int u = 0; u < n_; ++u) {
      const int m = mult_[index(v, u)];
      if (m == 0) continue;
      degree_[u] -= m;
      mult_[index(v, u)] = 0;
      mult_[index(u, v)] = 0;
    }
    loops_[v] = 0;
    degree_[v] = 0;
    alive_[v] = 0;
  }

  // Applies the reductions in place. Returns false when no FVS within
  // `budget` avoiding the forbidden nodes can exist.
  bool reduce(int& budget) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        if (!alive_[v]) continue;
        if (loops_[v] > 0) {
          if (forbidden_[v] || --budget < 0) return false;
          remove(v);
          changed = true;
        } else if (degree_[v] <= 1) {
          remove(v);
          changed = true;
        } else if (degree_[v] == 2) {
          int a = -1, b = -1;
          for (int u = 0; u < n_; ++u) {
            const int m = mult_[index(v, u)];
            if (m == 2) a = b = u;
            if (m == 1) (a == -1 ? a : b) = u;
          }
          if (a == b) {
            // v and a form a 2-cycle and every cycle through v meets a.
            const int drop = forbidden_[a] ? v : a;
            if (forbidden_[drop] || --budget < 0) return false;
            remove(drop);
            changed = true;
          } else if (forbidden_[v] || !forbidden_[a] || !forbidden_[b]) {
            remove(v);
            add_edge(a, b);
            changed = true;
          }
        }
      }
    }
    return !forbidden_cycle();
  }

  bool forbidden_cycle() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int a = 0; a < n_; ++a) {
      if (!alive_[a] || !forbidden_[a]) continue;
      for (int b = a + 1; b < n_; ++b) {
        if (!alive_[b] || !forbidden_[b]) continue;
        const int m = mult(a, b);
        if (m == 0) continue;
        if (m >= 2) return true;
        const int ra = root(a), rb = root(b);
        if (ra == rb) return true;
        parent[ra] = rb;
      }
    }
    return false;
  }

  // m - n + c over the alive part.
  int cycle_rank() const {
    int nodes = 0, edges = 0, components = 0;
    std::vector<char> seen(n_, 0);
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      ++nodes;
      edges += loops_[v];
      for (int u = v + 1; u < n_; ++u) edges += mult(v, u);
      if (seen[v]) continue;
      ++components;
      std::vector<int> stack{v};
      seen[v] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
          if (alive_[u] && !seen[u] && mult(x, u) > 0) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
    }
    return edges - nodes + components;
  }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_;
  std::vector<int> mult_;
  std::vector<int> loops_;
  std::vector<int> degree_;
  std::vector<char> alive_;
  std::vector<char> forbidden_;
};

bool has_fvs_within(Work w, int budget) {
  if (budget < 0 || !w.reduce(budget)) return false;
  const int rank = w.cycle_rank();
  if (rank == 0) return true;
  if (budget == 0) return false;

  // Deleting a node of degree d lowers the cycle rank by at most d - 1.
  std::vector<int> gains;
  int pick = -1;
  for (int v = 0; v < w.size(); ++v) {
    if (!w.alive(v) || w.forbidden(v)) continue;
    gains.push_back(w.degree(v) - 1);
    if (pick == -1 || w.degree(v) > w.degree(pick)) pick = v;
  }
  if (pick == -1) return false;
  std::sort(gains.begin(), gains.end(), std::greater<>());
  const auto take = std::min<std::size_t>(gains.size(), static_cast<std::size_t>(budget));
  if (std::accumulate(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(take), 0) <
      rank) {
    return false;
  }

  Work without = w;
  without.remove(pick);
  if (has_fvs_within(std::move(without), budget - 1)) return true;
  w.forbid(pick);
  return has_fvs_within(std::move(w), budget);
}

Work make_work(const DualGraph& dual) {
  const int n = static_cast<int>(dual.nodes.size());
  Work w(n);
  auto index_of = [&](FaceId f) {
    auto it = std::lower_bound(dual.nodes.begin(), dual.nodes.end(), f);
    if (it == dual.nodes.end() || *it != f) {
      fail(ErrorKind::UnknownFace, "dual edge references unknown node " + std::to_string(f));
    }
    return static_cast<int>(it - dual.nodes.begin());
  };
  for (const auto& [a, b] : dual.edges) {
    if (a == b) {
      fail(ErrorKind::SelfLoopPresent,
           "dual self-loop at " + std::to_string(a) + " (the primal has a bridge)");
    }
    w.add_edge(index_of(a), index_of(b));
  }
  return w;
}

void require_sorted_nodes(const DualGraph& dual) {
  if (!std::is_sorted(dual.nodes.begin(), dual.nodes.end()) ||
      std::adjacent_find(dual.nodes.begin(), dual.nodes.end()) != dual.nodes.end()) {
    fail(ErrorKind::UnknownFace, "dual nodes must be sorted and distinct");
  }
}

std::size_t optimum_size(const Work& w) {
  for (int k = 0;; ++k) {
    if (has_fvs_within(w, k)) return static_cast<std::size_t>(k);
  }
}

}  // namespace

bool is_feedback_vertex_set(const DualGraph& dual, std::span<const FaceId> nodes) {
  std::vector<FaceId> removed(nodes.begin(), nodes.end());
  std::sort(removed.begin(), removed.end());
  auto gone = [&](FaceId f) { return std::binary_search(removed.begin(), removed.end(), f); };
  std::unordered_map<FaceId, FaceId> parent;
  for (const FaceId f : dual.nodes) parent[f] = f;
  std::function<FaceId(FaceId)> root = [&](FaceId x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& [a, b] : dual.edges) {
    if (gone(a) || gone(b)) continue;
    const FaceId ra = root(a), rb = root(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

std::size_t min_fvs_size(const DualGraph& dual) {
  require_sorted_nodes(dual);
  return optimum_size(make_work(dual));
}

FvsSolution min_fvs(const DualGraph& dual) {
  require_sorted_nodes(dual);
  const Work base = make_work(dual);
  const std::size_t k = optimum_size(base);

  // Fix nodes in id order: take a node whenever an optimum extends the
  // choices so far with it, otherwise forbid it.
  FvsSolution solution;
  Work w = base;
  int remaining = static_cast<int>(k);
  for (int v = 0; v < w.size() && remaining > 0; ++v) {
    Work with = w;
    with.remove(v);
    if (has_fvs_within(with, remaining - 1)) {
      w = std::move(with);
      --remaining;
      solution.nodes.push_back(dual.nodes[v]);
    } else {
      w.forbid(v);
    }
  }
  if (!is_feedback_vertex_set(dual, solution.nodes) || solution.nodes.size() != k) {
    fail(ErrorKind::CertificateFailure, "tie-breaking pass lost optimality");
  }
  for (const auto& e : dual.edges) {
    if (!std::binary_search(solution.nodes.begin(), solution.nodes.end(), e.first) &&
        !std::binary_search(solution.nodes.begin(), solution.nodes.end(), e.second)) {
      solution.forest.push_back(e);
    }
  }
  return solution;
}

FaceCover fvs_to_cover(const PlaneGraph& graph, const FvsSolution& solution) {
  if (!is_biconnected(graph)) fail(ErrorKind::NotBiconnected, "input has a cut vertex");
  if (!is_feedback_vertex_set(dual_graph_of(graph), solution.nodes)) {
    fail(ErrorKind::InvalidCover, "node set is not a feedback vertex set of the dual");
  }
  try {
    return make_face_cover(graph, solution.nodes);
  } catch (const Error& e) {
    fail(ErrorKind::CertificateFailure, e.what());
  }
}

OsnResult solve_osn(const PlaneGraph& input) {
  if (!is_biconnected(input)) fail(ErrorKind::NotBiconnected, "input has a cut vertex");
  const PlaneGraph graph = with_default_outer_face(input);
  const FvsSolution fvs = min_fvs(dual(graph));

  OsnResult result{fvs.nodes.size() - 1, fvs_to_cover(graph, fvs), {}, graph};
  result.splits = realize_cover(graph, result.cover);
  result.outerplane = replay(graph, result.splits);
  if (!is_outerplane(result.outerplane)) {
    fail(ErrorKind::NotOuterplane, "realized split sequence does not reach outerplanarity");
  }
  return result;
}

FaceCover brute_min_cfc(const PlaneGraph& graph, std::size_t face_cap) {
  const auto faces = graph.face_ids();
  const auto n = graph.num_vertices();
  if (faces.size() > face_cap) {
    fail(ErrorKind::CapExceeded, std::to_string(faces.size()) + " faces exceed the cap of " +
                                     std::to_string(face_cap));
  }
  if (n > 64) fail(ErrorKind::CapExceeded, "more than 64 vertices");

  std::vector<std::uint64_t> mask(faces.size(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const VertexId v : graph.face(faces[i]).incident_vertices) mask[i] |= 1ULL << v;
  }
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;

  auto connected = [&](const std::vector<std::size_t>& pick) {
    std::uint64_t reached = mask[pick[0]];
    std::vector<char> in(pick.size(), 0);
    in[0] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 1; j < pick.size(); ++j) {
        if (!in[j] && (mask[pick[j]] & reached)) {
          in[j] = 1;
          reached |= mask[pick[j]];
          grew = true;
        }
      }
    }
    return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
  };

  for (std::size_t size = 1; size <= faces.size(); ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t covered = 0;
      for (const auto i : pick) covered |= mask[i];
      if (covered == all && connected(pick)) {
        std::vector<FaceId> chosen;
        for (const auto i : pick) chosen.push_back(faces[i]);
        return make_face_cover(graph, chosen);
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == faces.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  fail(ErrorKind::InvalidCover, "graph has no connected face cover");
}

namespace {

// Name-based key: splits that commute reach the same key.
std::string state_key(const PlaneGraph& g) {
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
  std::string key;
  for (const VertexId v : order) {
    key += g.name(v);
    key += ':';
    const auto rot = g.rotation(v);
    std::size_t start = 0;
    for (std::size_t k = 1; k < rot.size(); ++k) {
      if (g.name(rot[k]) < g.name(rot[start])) start = k;
    }
    for (std::size_t k = 0; k < rot.size(); ++k) {
      key += g.name(rot[(start + k) % rot.size()]);
      key += ',';
    }
    key += ';';
  }
  return key;
}

class SplitSearch {
 public:
  bool reachable(const PlaneGraph& g, std::size_t depth) {
    if (is_outerplane(g)) return true;
    if (depth == 0) return false;
    auto key = state_key(g);
    if (auto it = explored_.find(key); it != explored_.end() && it->second >= depth) {
      return false;
    }
    explored_[std::move(key)] = depth;
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
      const int d = static_cast<int>(g.degree(v));
      if (d < 2) continue;
      for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
          if (g.corner_face(v, a) == g.corner_face(v, b)) continue;
          if (reachable(split_at_corners(g, v, a, b).graph, depth - 1)) return true;
        }
      }
    }
    return false;
  }

 private:
  // Largest remaining depth already shown not to reach outerplanarity.
  std::unordered_map<std::string, std::size_t> explored_;
};

}  // namespace

std::optional<std::size_t> brute_osn_by_splits(const PlaneGraph& graph, std::size_t k_max,
                                               std::size_t face_cap) {
  if (graph.num_faces() > face_cap) {
    fail(ErrorKind::CapExceeded, std::to_string(graph.num_faces()) +
                                     " faces exceed the cap of " + std::to_string(face_cap));
  }
  SplitSearch search;
  for (std::size_t depth = 0; depth <= k_max; ++depth) {
    if (search.reachable(graph, depth)) return depth;
  }
  return std::nullopt;
}

}  // namespace osn
