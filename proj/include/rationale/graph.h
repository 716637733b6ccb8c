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

#ifndef RATIONALE_GRAPH_H_
#define RATIONALE_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rationale/model.h"

namespace rationale {

// Small adjacency-list digraph over nodes 0..n-1. Parallel edges are dropped.
class Digraph {
 public:
  explicit Digraph(std::size_t n = 0) : out_(n), in_(n) {}
  Digraph(std::size_t n, std::span<const IndexEdge> edges);

  void AddEdge(std::size_t from, std::size_t to);

  std::size_t size() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::size_t>& Successors(std::size_t u) const {
    return out_[u];
  }
  const std::vector<std::size_t>& Predecessors(std::size_t u) const {
    return in_[u];
  }
  bool HasEdge(std::size_t from, std::size_t to) const;

  // Graph with every edge also present reversed.
  Digraph Symmetrized() const;

 private:
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::size_t edge_count_ = 0;
};

// Forward reachability (each start reaches itself).
std::vector<bool> ReachableFrom(const Digraph& g,
                                std::span<const std::size_t> starts);

// Nodes that can reach `target` (target included).
std::vector<bool> CanReach(const Digraph& g, std::size_t target);

// One directed cycle as a node sequence [v0, v1, ..., vk] with an edge from
// each node to the next and from vk back to v0; nullopt when acyclic.
std::optional<std::vector<std::size_t>> FindCycle(const Digraph& g);

// Cycle in an undirected reading of `edges` (self-loops and repeated pairs
// count); nullopt when the undirected graph is a forest.
std::optional<std::vector<std::size_t>> FindUndirectedCycle(
    std::size_t n, std::span<const IndexEdge> edges);

// Nodes on at least one directed cycle (nontrivial SCC or self-loop).
std::vector<bool> CycleNodes(const Digraph& g);

// Kahn order; nullopt when cyclic.
std::optional<std::vector<std::size_t>> TopologicalOrder(const Digraph& g);

// Weakly connected component containing `node`.
std::vector<bool> WeakComponent(const Digraph& g, std::size_t node);

// Number of edges on the longest path (graph must be acyclic).
std::size_t LongestPathLength(const Digraph& g);

}  // namespace rationale

#endif  // RATIONALE_GRAPH_H_
