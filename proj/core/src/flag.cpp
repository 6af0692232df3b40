#include "hochster/flag.hpp"

#include <algorithm>
#include <functional>

#include "hochster/errors.hpp"

namespace hochster {

bool is_polygon_subcomplex(const SimplicialComplex& K, VertexSet I) {
  if (I.size() < 4 || !I.is_subset_of(K.vertices())) return false;
  for (VertexSet f : K.facets())
    if ((f & I).size() >= 3) return false;
  const auto adj = adjacency(K);
  for (int v : I.labels())
    if ((adj[v - 1] & I).size() != 2) return false;
  // Degree two everywhere; connected means a single cycle.
  VertexSet seen = VertexSet::singleton(I.min()), frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.labels()) next |= adj[v - 1] & I;
    frontier = next - seen;
    seen |= next;
  }
  return seen == I;
}

namespace {

std::optional<VertexSet> shortest_induced_cycle(const SimplicialComplex& K, int u, int v) {
  const auto adj = adjacency(K);
  const int m = K.ground_size();
  // Induced u-v paths, stored as the vertex set of their interior.
  std::vector<VertexSet> interiors;
  std::vector<int> path{u};
  VertexSet on_path = VertexSet::singleton(u);
  std::function<void()> extend = [&] {
    if (static_cast<int>(path.size()) > m) return;
    const int last = path.back();
    if (adj[last - 1].contains(v)) {
      VertexSet interior = on_path - VertexSet::singleton(u);
      interiors.push_back(interior);
      return;  // continuing past a neighbour of v would create a chord
    }
    VertexSet earlier = on_path - VertexSet::singleton(last);
    for (int x : (adj[last - 1] - on_path).labels()) {
      if (x == v || adj[x - 1].intersects(earlier)) continue;
      path.push_back(x);
      on_path.insert(x);
      extend();
      on_path.erase(x);
      path.pop_back();
    }
  };
  extend();
  std::sort(interiors.begin(), interiors.end(), [](VertexSet a, VertexSet b) { return popcount_less(a, b); });
  std::optional<VertexSet> best;
  for (std::size_t i = 0; i < interiors.size(); ++i) {
    for (std::size_t j = i + 1; j < interiors.size(); ++j) {
      VertexSet p = interiors[i], q = interiors[j];
      int total = p.size() + q.size() + 2;
      if (best && total >= best->size()) break;
      if (p.intersects(q)) continue;
      bool chord = false;
      for (int x : p.labels())
        if (adj[x - 1].intersects(q)) {
          chord = true;
          break;
        }
      if (chord) continue;
      VertexSet cycle = p | q | VertexSet{u, v};
      if (is_polygon_subcomplex(K, cycle)) best = cycle;
    }
  }
  return best;
}

}  // namespace

VertexSet belt_through_missing_edge(const SimplicialComplex& K, VertexSet edge) {
  if (edge.size() != 2 || K.contains(edge) || !edge.is_subset_of(K.vertices()))
    fail(ErrorCode::not_found, edge.to_string() + " is not a missing edge");
  const int u = edge.min(), v = edge.max();
  if (auto cycle = shortest_induced_cycle(K, u, v)) return *cycle;
  if (K.ground_size() <= 20) {
    const VertexSet rest = K.vertices() - edge;
    std::vector<VertexSet> candidates;
    const std::uint64_t full = rest.bits();
    for (std::uint64_t s = full;; s = (s - 1) & full) {
      candidates.emplace_back(s);
      if (s == 0) break;
    }
    std::sort(candidates.begin(), candidates.end(), popcount_less);
    for (VertexSet c : candidates)
      if (is_polygon_subcomplex(K, c | edge)) return c | edge;
  }
  fail(ErrorCode::not_found, "no belt through " + edge.to_string());
}

std::vector<VertexSet> find_belts(const SimplicialComplex& K, int n) {
  std::vector<VertexSet> out;
  const auto verts = K.vertices().labels();
  const int k = static_cast<int>(verts.size());
  if (n < 4 || n > k) return out;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    VertexSet I;
    for (int i : idx) I.insert(verts[i]);
    if (is_polygon_subcomplex(K, I)) out.push_back(I);
    int i = n - 1;
    while (i >= 0 && idx[i] == k - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), popcount_less);
  return out;
}

bool is_flag_by_cliques(const SimplicialComplex& K) {
  const auto adj = adjacency(K);
  for (VertexSet f : K.faces()) {
    VertexSet common = K.vertices();
    for (int v : f.labels()) common &= adj[v - 1];
    for (int w : common.labels())
      if (!K.contains(f | VertexSet::singleton(w))) return false;
  }
  return true;
}

}  // namespace hochster
