#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "hochster/vertex_set.hpp"

namespace hochster {

// Finite abstract simplicial complex on the ground set [m].
// Facets are kept inclusion-maximal and sorted lexicographically.
// The empty complex {∅} has no facets.
class SimplicialComplex {
 public:
  SimplicialComplex() : SimplicialComplex(0, {}) {}

  // Normalizes: drops empty and non-maximal facets, deduplicates.
  // Throws InvalidVertex if a facet leaves [m], UnsupportedSize if m > 63.
  static SimplicialComplex from_facets(int m, std::vector<VertexSet> facets);
  static SimplicialComplex empty(int m) { return from_facets(m, {}); }

  int ground_size() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  VertexSet vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.size(); }
  VertexSet ghost_vertices() const { return VertexSet::full(m_) - vertices_; }
  int dimension() const { return dim_; }
  bool is_empty() const { return facets_.empty(); }

  bool contains(VertexSet sigma) const;

  // Every face including ∅, ordered by (size, bits).
  const std::vector<VertexSet>& faces() const;
  std::vector<VertexSet> faces_of_dimension(int d) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(int m, std::vector<VertexSet> facets);

  struct FaceTable {
    std::vector<VertexSet> ordered;
    std::unordered_set<VertexSet, VertexSetHash> lookup;
  };

  int m_ = 0;
  int dim_ = -1;
  VertexSet vertices_;
  std::vector<VertexSet> facets_;
  std::shared_ptr<const FaceTable> faces_;  // absent when the complex is too large to tabulate
};

SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexSet I);
SimplicialComplex link(const SimplicialComplex& K, VertexSet sigma);
SimplicialComplex star(const SimplicialComplex& K, VertexSet sigma);

// f_vector[i] = number of i-dimensional faces, i = 0..dim.
std::vector<long long> f_vector(const SimplicialComplex& K);
bool is_pure(const SimplicialComplex& K);
long long euler_characteristic(const SimplicialComplex& K);
long long edge_count(const SimplicialComplex& K);
bool is_q_neighborly(const SimplicialComplex& K, int q);

// Minimal non-faces supported on the vertex set (ghost vertices are not counted).
std::vector<VertexSet> missing_faces(const SimplicialComplex& K);
bool is_flag(const SimplicialComplex& K);

// Pure, and every codimension-one face lies in exactly two facets.
bool is_closed_pseudomanifold(const SimplicialComplex& K);
// Some vertex lies in every facet.
bool is_cone(const SimplicialComplex& K);

// Adjacency bitmasks of the 1-skeleton, indexed by label-1.
std::vector<VertexSet> adjacency(const SimplicialComplex& K);

}  // namespace hochster
