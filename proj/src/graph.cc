/*
 * Copyright 2026 The Rationale Eval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rationale/graph.h"

#include <algorithm>
#include <functional>
#include <queue>

namespace rationale {

Digraph::Digraph(std::size_t n, std::span<const IndexEdge> edges)
    : out_(n), in_(n) {
  for (const IndexEdge& e : edges) AddEdge(e.from, e.to);
}

void Digraph::AddEdge(std::size_t from, std::size_t to) {
  if (HasEdge(from, to)) return;
  out_[from].push_back(to);
  in_[to].push_back(from);
  ++edge_count_;
}

bool Digraph::HasEdge(std::size_t from, std::size_t to) const {
  const auto& succ = out_[from];
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

Digraph Digraph::Symmetrized() const {
  Digraph out(size());
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : out_[u]) {
      out.AddEdge(u, v);
      out.AddEdge(v, u);
    }
  }
  return out;
}

namespace {

std::vector<bool> Search(std::size_t n, std::span<const std::size_t> starts,
                         const std::function<const std::vector<std::size_t>&(
                             std::size_t)>& next) {
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t s : starts) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : next(u)) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<bool> ReachableFrom(const Digraph& g,
                                std::span<const std::size_t> starts) {
  return Search(g.size(), starts,
                [&g](std::size_t u) -> const std::vector<std::size_t>& {
                  return g.Successors(u);
                });
}

std::vector<bool> CanReach(const Digraph& g, std::size_t target) {
  const std::size_t start[] = {target};
  return Search(g.size(), start,
                [&g](std::size_t u) -> const std::vector<std::size_t>& {
                  return g.Predecessors(u);
                });
}

std::optional<std::vector<std::size_t>> FindCycle(const Digraph& g) {
  enum class Color { kWhite, kGrey, kBlack };
  const std::size_t n = g.size();
  std::vector<Color> color(n, Color::kWhite);
  std::vector<std::size_t> parent(n, n);

  // Iterative DFS; frames hold (node, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != Color::kWhite) continue;
    color[root] = Color::kGrey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      const auto& succ = g.Successors(u);
      if (pos == succ.size()) {
        color[u] = Color::kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t v = succ[pos++];
      if (color[v] == Color::kGrey) {
        std::vector<std::size_t> cycle;
        for (std::size_t w = u; w != v; w = parent[w]) cycle.push_back(w);
        cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[v] == Color::kWhite) {
        color[v] = Color::kGrey;
        parent[v] = u;
        stack.push_back({v, 0});
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> FindUndirectedCycle(
    std::size_t n, std::span<const IndexEdge> edges) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const IndexEdge& e = edges[i];
    if (e.from == e.to) return std::vector<std::size_t>{e.from};
    adj[e.from].push_back({e.to, i});
    adj[e.to].push_back({e.from, i});
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> parent_edge(n, edges.size());
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::size_t> stack = {root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, edge] : adj[u]) {
        if (edge == parent_edge[u]) continue;
        if (seen[v]) {
          // Tree path meet -> ... -> u, then the edge to v, then v's tree
          // path back up to just below meet.
          std::vector<bool> above_u(n, false);
          for (std::size_t w = u; w != n; w = parent[w]) above_u[w] = true;
          std::vector<std::size_t> down;
          std::size_t meet = v;
          while (!above_u[meet]) {
            down.push_back(meet);
            meet = parent[meet];
          }
          std::vector<std::size_t> cycle;
          for (std::size_t w = u; w != meet; w = parent[w]) cycle.push_back(w);
          cycle.push_back(meet);
          std::reverse(cycle.begin(), cycle.end());
          cycle.insert(cycle.end(), down.begin(), down.end());
          return cycle;
        }
        seen[v] = true;
        parent[v] = u;
        parent_edge[v] = edge;
        stack.push_back(v);
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> CycleNodes(const Digraph& g) {
  // Tarjan's strongly connected components, iterative.
  const std::size_t n = g.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false), on_cycle(n, false);
  std::vector<std::size_t> component_stack;
  std::size_t counter = 0;

  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    component_stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      const auto& succ = g.Successors(u);
      if (pos < succ.size()) {
        const std::size_t v = succ[pos++];
        if (index[v] == kUnset) {
          index[v] = low[v] = counter++;
          component_stack.push_back(v);
          on_stack[v] = true;
          frames.push_back({v, 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const std::size_t done = u;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t caller = frames.back().first;
        low[caller] = std::min(low[caller], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = component_stack.back();
          component_stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        if (component.size() > 1 || g.HasEdge(done, done)) {
          for (std::size_t c : component) on_cycle[c] = true;
        }
      }
    }
  }
  return on_cycle;
}

std::optional<std::vector<std::size_t>> TopologicalOrder(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indegree(n);
  std::queue<std::size_t> ready;
  for (std::size_t u = 0; u < n; ++u) {
    indegree[u] = g.Predecessors(u).size();
    if (indegree[u] == 0) ready.push(u);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t u = ready.front();
    ready.pop();
    order.push_back(u);
    for (std::size_t v : g.Successors(u)) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<bool> WeakComponent(const Digraph& g, std::size_t node) {
  const Digraph both = g.Symmetrized();
  const std::size_t start[] = {node};
  return ReachableFrom(both, start);
}

std::size_t LongestPathLength(const Digraph& g) {
  const auto order = TopologicalOrder(g);
  if (!order) return g.size();
  std::vector<std::size_t> depth(g.size(), 0);
  std::size_t best = 0;
  for (std::size_t u : *order) {
    for (std::size_t v : g.Successors(u)) {
      depth[v] = std::max(depth[v], depth[u] + 1);
      best = std::max(best, depth[v]);
    }
  }
  return best;
}

}  // namespace rationale
