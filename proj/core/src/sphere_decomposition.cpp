#include "hochster/sphere_decomposition.hpp"

#include <algorithm>

#include "hochster/constructions.hpp"
#include "hochster/errors.hpp"

namespace hochster {

namespace {

bool is_circle(const SimplicialComplex& L) {
  if (L.dimension() != 1 || !is_pure(L)) return false;
  const auto adj = adjacency(L);
  for (int v : L.vertices().labels())
    if (adj[v - 1].size() != 2) return false;
  VertexSet seen = VertexSet::singleton(L.vertices().min()), frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.labels()) next |= adj[v - 1];
    frontier = next - seen;
    seen |= next;
  }
  return seen == L.vertices();
}

void split(const SimplicialComplex& K, std::vector<SimplicialComplex>& out) {
  const auto triangles = empty_triangles(K);
  if (triangles.empty()) {
    out.push_back(K);
    return;
  }
  const VertexSet T = triangles.front();
  const auto adj = adjacency(K);
  VertexSet remaining = K.vertices() - T;
  std::vector<VertexSet> components;
  while (!remaining.empty()) {
    VertexSet comp = VertexSet::singleton(remaining.min()), frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.labels()) next |= adj[v - 1] & remaining;
      frontier = next - comp;
      comp |= next;
    }
    components.push_back(comp);
    remaining = remaining - comp;
  }
  if (components.size() != 2) fail(ErrorCode::not_a_sphere, "empty triangle does not separate into two sides");
  for (VertexSet side : components) {
    const VertexSet support = side | T;
    std::vector<VertexSet> facets{T};
    for (VertexSet f : K.facets())
      if (f.is_subset_of(support)) facets.push_back(f);
    SimplicialComplex piece = compact(SimplicialComplex::from_facets(K.ground_size(), std::move(facets)));
    if (!is_two_sphere(piece)) fail(ErrorCode::not_a_sphere, "split produced a non-sphere");
    split(piece, out);
  }
}

}  // namespace

bool is_two_sphere(const SimplicialComplex& K) {
  if (K.dimension() != 2 || !is_closed_pseudomanifold(K) || euler_characteristic(K) != 2) return false;
  for (int v : K.vertices().labels())
    if (!is_circle(link(K, VertexSet::singleton(v)))) return false;
  return true;
}

std::vector<VertexSet> empty_triangles(const SimplicialComplex& K) {
  std::vector<VertexSet> out;
  const auto adj = adjacency(K);
  for (int a : K.vertices().labels())
    for (int b : adj[a - 1].labels()) {
      if (b <= a) continue;
      for (int c : (adj[a - 1] & adj[b - 1]).labels()) {
        if (c <= b) continue;
        VertexSet t{a, b, c};
        if (!K.contains(t)) out.push_back(t);
      }
    }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<SimplicialComplex> irreducible_decomposition(const SimplicialComplex& K) {
  if (!is_two_sphere(K)) fail(ErrorCode::not_a_sphere, "input is not a simplicial 2-sphere");
  std::vector<SimplicialComplex> out;
  split(compact(K), out);
  return out;
}

}  // namespace hochster
