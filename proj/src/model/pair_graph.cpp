#include "lfm/model/pair_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "lfm/core/error.hpp"

namespace lfm::model {

PairGraph::PairGraph(std::size_t n_nodes, std::vector<Edge> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)), edge_triangles_(edges_.size()) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n_nodes_);  // (nbr, edge)
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u >= n_nodes_ || v >= n_nodes_ || u == v) {
      throw Error(Errc::invalid_argument, "pair graph edge out of range or a self loop");
    }
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i].first == a[i - 1].first) throw Error(Errc::invalid_argument, "duplicate pair graph edge");
    }
  }

  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u > v) std::swap(u, v);
    // Common neighbours w > v, so each triangle is found once from its lowest edge.
    const auto& au = adj[u];
    const auto& av = adj[v];
    std::size_t i = 0, j = 0;
    while (i < au.size() && j < av.size()) {
      if (au[i].first < av[j].first) ++i;
      else if (av[j].first < au[i].first) ++j;
      else {
        if (au[i].first > v) {
          const auto t = static_cast<std::uint32_t>(triangles_.size());
          triangles_.push_back({e, au[i].second, av[j].second});
          for (auto edge : triangles_.back()) edge_triangles_[edge].push_back(t);
        }
        ++i;
        ++j;
      }
    }
  }

  component_.resize(n_nodes_);
  std::iota(component_.begin(), component_.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (component_[x] != x) x = component_[x] = component_[component_[x]];
    return x;
  };
  for (auto [u, v] : edges_) {
    auto a = find(u), b = find(v);
    if (a != b) component_[std::max(a, b)] = std::min(a, b);
  }
  for (std::uint32_t x = 0; x < n_nodes_; ++x) component_[x] = find(x);
}

PairGraph PairGraph::from_candidates(const CandidateSet& candidates) {
  std::map<std::string, std::uint32_t> nodes;
  auto node = [&](const std::string& key) {
    return nodes.emplace(key, static_cast<std::uint32_t>(nodes.size())).first->second;
  };
  std::vector<Edge> edges;
  edges.reserve(candidates.size());
  for (const auto& p : candidates.pairs()) {
    edges.emplace_back(node("L\x1f" + p.left_id), node("R\x1f" + p.right_id));
  }
  return PairGraph(nodes.size(), std::move(edges));
}

}  // namespace lfm::model
