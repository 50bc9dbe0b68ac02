#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lfm/core/candidates.hpp"

namespace lfm::model {

// Undirected graph whose edges are the pairs that carry a posterior. Edge i
// corresponds to gamma(i). Triangles are the triples of nodes whose three
// connecting pairs are all edges; only those are subject to transitivity.
class PairGraph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;
  using Triangle = std::array<std::uint32_t, 3>;  // edge indices (uv, uw, vw)

  PairGraph() = default;
  PairGraph(std::size_t n_nodes, std::vector<Edge> edges);

  // Tuples become nodes (left and right ids never alias); candidate i is edge i.
  static PairGraph from_candidates(const CandidateSet& candidates);

  std::size_t n_nodes() const { return n_nodes_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<std::uint32_t>& triangles_of(std::uint32_t edge) const {
    return edge_triangles_[edge];
  }
  // Component id per node (connected components of the edge set).
  const std::vector<std::uint32_t>& components() const { return component_; }

 private:
  std::size_t n_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<std::uint32_t>> edge_triangles_;
  std::vector<std::uint32_t> component_;
};

}  // namespace lfm::model
