// Copyright 2026 The Plexflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLEXFLOW_UTIL_TOPO_SORT_HPP_
#define PLEXFLOW_UTIL_TOPO_SORT_HPP_

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

namespace plexflow {

// Kahn's algorithm over `nodes` using only edges whose endpoints are both in
// `nodes`. Among ready nodes the smallest (operator<) goes first, so the
// result is unique. Returns nullopt if the induced subgraph has a cycle.
template <typename T>
std::optional<std::vector<T>> topo_sort(const std::set<T>& nodes,
                                        const std::multimap<T, T>& edges) {
  std::map<T, int> indegree;
  for (const T& n : nodes) indegree[n] = 0;
  for (const auto& [from, to] : edges) {
    if (nodes.count(from) != 0 && nodes.count(to) != 0) ++indegree[to];
  }
  std::priority_queue<T, std::vector<T>, std::greater<T>> ready;
  for (const auto& [n, d] : indegree) {
    if (d == 0) ready.push(n);
  }
  std::vector<T> order;
  while (!ready.empty()) {
    T n = ready.top();
    ready.pop();
    order.push_back(n);
    auto [lo, hi] = edges.equal_range(n);
    for (auto it = lo; it != hi; ++it) {
      if (nodes.count(it->second) == 0) continue;
      if (--indegree[it->second] == 0) ready.push(it->second);
    }
  }
  if (order.size() != nodes.size()) return std::nullopt;
  return order;
}

}  // namespace plexflow

#endif  // PLEXFLOW_UTIL_TOPO_SORT_HPP_
