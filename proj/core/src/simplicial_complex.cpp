#include "hochster/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

constexpr std::size_t face_table_limit = std::size_t{1} << 22;

}  // namespace

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : labels()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
  while (!a.empty() && !b.empty()) {
    int x = a.min(), y = b.min();
    if (x != y) return x < y;
    a.erase(x);
    b.erase(y);
  }
  return a.empty() && !b.empty();
}

std::vector<VertexSet> subsets_in_order(int m) {
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) out.emplace_back(b);
  std::stable_sort(out.begin(), out.end(), popcount_less);
  return out;
}

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> facets)
    : m_(m), facets_(std::move(facets)) {
  for (VertexSet f : facets_) {
    vertices_ |= f;
    dim_ = std::max(dim_, f.size() - 1);
  }
  std::size_t estimate = 1;
  for (VertexSet f : facets_) {
    estimate += std::size_t{1} << std::min(f.size(), 40);
    if (estimate > face_table_limit) break;
  }
  if (estimate <= face_table_limit) {
    auto table = std::make_shared<FaceTable>();
    table->lookup.insert(VertexSet{});
    for (VertexSet f : facets_) {
      std::uint64_t full = f.bits();
      for (std::uint64_t s = full;; s = (s - 1) & full) {
        table->lookup.insert(VertexSet(s));
        if (s == 0) break;
      }
    }
    table->ordered.assign(table->lookup.begin(), table->lookup.end());
    std::sort(table->ordered.begin(), table->ordered.end(), popcount_less);
    faces_ = std::move(table);
  }
}

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<VertexSet> facets) {
  if (m < 0 || m > max_ground_size)
    fail(ErrorCode::unsupported_size, "ground size " + std::to_string(m) + " outside 0.." +
                                          std::to_string(max_ground_size));
  const VertexSet ground = VertexSet::full(m);
  for (VertexSet f : facets)
    if (!f.is_subset_of(ground))
      fail(ErrorCode::invalid_vertex, "facet " + f.to_string() + " leaves [" + std::to_string(m) + "]");
  std::erase_if(facets, [](VertexSet f) { return f.empty(); });
  std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : facets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [f](VertexSet g) { return f.is_subset_of(g); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return SimplicialComplex(m, std::move(kept));
}

bool SimplicialComplex::contains(VertexSet sigma) const {
  if (faces_) return faces_->lookup.count(sigma) != 0;
  if (sigma.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [sigma](VertexSet f) { return sigma.is_subset_of(f); });
}

const std::vector<VertexSet>& SimplicialComplex::faces() const {
  if (!faces_) fail(ErrorCode::unsupported_size, "complex too large to enumerate its faces");
  return faces_->ordered;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces())
    if (f.size() == d + 1) out.push_back(f);
  return out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexSet I) {
  std::vector<VertexSet> facets;
  facets.reserve(K.facets().size());
  for (VertexSet f : K.facets()) facets.push_back(f & I);
  return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& K, VertexSet sigma) {
  if (!K.contains(sigma)) fail(ErrorCode::not_a_simplex, sigma.to_string() + " is not a face");
  std::vector<VertexSet> facets;
  for (VertexSet f : K.facets())
    if (sigma.is_subset_of(f)) facets.push_back(f - sigma);
  return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

SimplicialComplex star(const SimplicialComplex& K, VertexSet sigma) {
  if (!K.contains(sigma)) fail(ErrorCode::not_a_simplex, sigma.to_string() + " is not a face");
  std::vector<VertexSet> facets;
  for (VertexSet f : K.facets())
    if (sigma.is_subset_of(f)) facets.push_back(f);
  return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

std::vector<long long> f_vector(const SimplicialComplex& K) {
  std::vector<long long> f(K.dimension() + 1, 0);
  for (VertexSet s : K.faces())
    if (!s.empty()) ++f[s.size() - 1];
  return f;
}

bool is_pure(const SimplicialComplex& K) {
  return std::all_of(K.facets().begin(), K.facets().end(),
                     [&](VertexSet f) { return f.size() == K.dimension() + 1; });
}

long long euler_characteristic(const SimplicialComplex& K) {
  long long chi = 0;
  auto f = f_vector(K);
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

long long edge_count(const SimplicialComplex& K) {
  auto f = f_vector(K);
  return f.size() > 1 ? f[1] : 0;
}

std::vector<VertexSet> missing_faces(const SimplicialComplex& K) {
  std::unordered_set<VertexSet, VertexSetHash> found;
  const auto verts = K.vertices().labels();
  for (VertexSet f : K.faces()) {
    for (int v : verts) {
      if (f.contains(v)) continue;
      VertexSet n = f;
      n.insert(v);
      if (K.contains(n) || found.count(n)) continue;
      bool minimal = true;
      for (int w : n.labels()) {
        VertexSet sub = n;
        sub.erase(w);
        if (!K.contains(sub)) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.insert(n);
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), popcount_less);
  return out;
}

bool is_flag(const SimplicialComplex& K) {
  auto mf = missing_faces(K);
  return std::all_of(mf.begin(), mf.end(), [](VertexSet s) { return s.size() == 2; });
}

bool is_q_neighborly(const SimplicialComplex& K, int q) {
  if (q <= 0) return true;
  for (VertexSet n : missing_faces(K))
    if (n.size() <= q) return false;
  return true;
}

bool is_closed_pseudomanifold(const SimplicialComplex& K) {
  if (K.is_empty() || !is_pure(K)) return false;
  std::unordered_map<VertexSet, std::vector<int>, VertexSetHash> ridges;
  const auto& facets = K.facets();
  for (int i = 0; i < static_cast<int>(facets.size()); ++i)
    for (int v : facets[i].labels()) {
      VertexSet r = facets[i];
      r.erase(v);
      ridges[r].push_back(i);
    }
  std::vector<int> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [r, owners] : ridges) {
    if (owners.size() != 2) return false;
    parent[find(owners[0])] = find(owners[1]);
  }
  int root = find(0);
  for (int i = 1; i < static_cast<int>(facets.size()); ++i)
    if (find(i) != root) return false;
  return true;
}

bool is_cone(const SimplicialComplex& K) {
  if (K.is_empty()) return false;
  VertexSet common = K.facets().front();
  for (VertexSet f : K.facets()) common &= f;
  return !common.empty();
}

std::vector<VertexSet> adjacency(const SimplicialComplex& K) {
  std::vector<VertexSet> adj(K.ground_size());
  for (VertexSet f : K.facets())
    for (int v : f.labels()) adj[v - 1] |= f - VertexSet::singleton(v);
  return adj;
}

}  // namespace hochster
