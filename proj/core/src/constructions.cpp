#include "hochster/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

VertexSet shift(VertexSet s, int offset) { return VertexSet(s.bits() << offset); }

VertexSet map_set(VertexSet s, const std::vector<int>& image) {
  VertexSet out;
  for (int v : s.labels()) out.insert(image[v - 1]);
  return out;
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
  const int m = K1.ground_size() + K2.ground_size();
  if (m > max_ground_size) fail(ErrorCode::unsupported_size, "join exceeds the ground size limit");
  std::vector<VertexSet> f1 = K1.facets(), f2 = K2.facets();
  if (f1.empty()) f1.push_back(VertexSet{});
  if (f2.empty()) f2.push_back(VertexSet{});
  std::vector<VertexSet> facets;
  for (VertexSet a : f1)
    for (VertexSet b : f2) facets.push_back(a | shift(b, K1.ground_size()));
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& K) {
  return join(K, SimplicialComplex::from_facets(1, {VertexSet{1}}));
}

SimplicialComplex suspension(const SimplicialComplex& K) {
  return join(K, SimplicialComplex::from_facets(2, {VertexSet{1}, VertexSet{2}}));
}

FacetMatching order_preserving_matching(VertexSet f2, VertexSet f1) {
  auto a = f2.labels(), b = f1.labels();
  if (a.size() != b.size()) fail(ErrorCode::invalid_connected_sum, "facets of different sizes");
  FacetMatching out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], b[i]);
  return out;
}

SimplicialComplex connected_sum(const SimplicialComplex& K1, VertexSet f1, const SimplicialComplex& K2,
                                VertexSet f2, const FacetMatching& matching) {
  if (!is_pure(K1) || !is_pure(K2) || K1.dimension() != K2.dimension() || K1.is_empty())
    fail(ErrorCode::invalid_connected_sum, "complexes must be pure of equal dimension");
  auto is_facet = [](const SimplicialComplex& K, VertexSet f) {
    return std::find(K.facets().begin(), K.facets().end(), f) != K.facets().end();
  };
  if (!is_facet(K1, f1) || !is_facet(K2, f2))
    fail(ErrorCode::invalid_connected_sum, "gluing simplices must be facets");
  std::vector<int> image(K2.ground_size(), 0);
  VertexSet seen_src, seen_dst;
  for (auto [src, dst] : matching) {
    if (src < 1 || src > K2.ground_size() || !f2.contains(src) || !f1.contains(dst) || seen_src.contains(src) ||
        seen_dst.contains(dst))
      fail(ErrorCode::invalid_connected_sum, "matching is not a bijection f2 -> f1");
    seen_src.insert(src);
    seen_dst.insert(dst);
    image[src - 1] = dst;
  }
  if (seen_src != f2 || seen_dst != f1) fail(ErrorCode::invalid_connected_sum, "matching is not a bijection f2 -> f1");
  int next = K1.ground_size();
  for (int v = 1; v <= K2.ground_size(); ++v)
    if (!f2.contains(v)) image[v - 1] = ++next;
  if (next > max_ground_size) fail(ErrorCode::unsupported_size, "connected sum exceeds the ground size limit");
  std::vector<VertexSet> facets;
  for (VertexSet f : K1.facets())
    if (f != f1) facets.push_back(f);
  for (VertexSet f : K2.facets())
    if (f != f2) facets.push_back(map_set(f, image));
  return SimplicialComplex::from_facets(next, std::move(facets));
}

SimplicialComplex connected_sum(const SimplicialComplex& K1, const SimplicialComplex& K2) {
  if (K1.is_empty() || K2.is_empty()) fail(ErrorCode::invalid_connected_sum, "empty complex");
  VertexSet f1 = K1.facets().front(), f2 = K2.facets().front();
  return connected_sum(K1, f1, K2, f2, order_preserving_matching(f2, f1));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& K, VertexSet sigma) {
  if (sigma.empty() || !K.contains(sigma)) fail(ErrorCode::not_a_simplex, sigma.to_string() + " is not a face");
  if (sigma.size() == 1) return K;
  const int m = K.ground_size() + 1;
  if (m > max_ground_size) fail(ErrorCode::unsupported_size, "subdivision exceeds the ground size limit");
  const VertexSet apex = VertexSet::singleton(m);
  std::vector<VertexSet> facets;
  for (VertexSet f : K.facets()) {
    if (!sigma.is_subset_of(f)) {
      facets.push_back(f);
      continue;
    }
    for (int v : sigma.labels()) facets.push_back((f - VertexSet::singleton(v)) | apex);
  }
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& image, int new_m) {
  std::vector<VertexSet> facets;
  for (VertexSet f : K.facets()) facets.push_back(map_set(f, image));
  return SimplicialComplex::from_facets(new_m, std::move(facets));
}

SimplicialComplex compact(const SimplicialComplex& K) {
  std::vector<int> image(K.ground_size(), 0);
  int next = 0;
  for (int v : K.vertices().labels()) image[v - 1] = ++next;
  return relabel(K, image, next);
}

std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a_in, const SimplicialComplex& b_in) {
  const SimplicialComplex a = compact(a_in), b = compact(b_in);
  const int n = a.ground_size();
  if (n != b.ground_size() || a.facets().size() != b.facets().size() || f_vector(a) != f_vector(b))
    return std::nullopt;
  auto degree_profile = [](const SimplicialComplex& K) {
    std::vector<std::multiset<int>> prof(K.ground_size());
    for (VertexSet f : K.facets())
      for (int v : f.labels()) prof[v - 1].insert(f.size());
    return prof;
  };
  const auto pa = degree_profile(a), pb = degree_profile(b);
  const auto adj_a = adjacency(a), adj_b = adjacency(b);
  std::set<VertexSet, decltype(&lex_less)> facets_b(b.facets().begin(), b.facets().end(), &lex_less);

  std::vector<int> image(n, 0);
  VertexSet used;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;

  auto consistent = [&](int depth) {
    int v = order[depth];
    int w = image[v - 1];
    for (int k = 0; k < depth; ++k) {
      int u = order[k];
      if (adj_a[v - 1].contains(u) != adj_b[w - 1].contains(image[u - 1])) return false;
    }
    return true;
  };
  std::function<bool(int)> search = [&](int depth) -> bool {
    if (depth == n) {
      for (VertexSet f : a.facets())
        if (!facets_b.count(map_set(f, image))) return false;
      return true;
    }
    int v = order[depth];
    for (int w = 1; w <= n; ++w) {
      if (used.contains(w) || pa[v - 1] != pb[w - 1]) continue;
      image[v - 1] = w;
      if (!consistent(depth)) continue;
      used.insert(w);
      if (search(depth + 1)) return true;
      used.erase(w);
    }
    image[v - 1] = 0;
    return false;
  };
  if (!search(0)) return std::nullopt;
  // Express the bijection on the original labels.
  std::vector<int> ca(a_in.ground_size(), 0), cb_inv(n + 1, 0);
  int next = 0;
  for (int v : a_in.vertices().labels()) ca[v - 1] = ++next;
  next = 0;
  for (int v : b_in.vertices().labels()) cb_inv[++next] = v;
  std::vector<int> out(a_in.ground_size(), 0);
  for (int v : a_in.vertices().labels()) out[v - 1] = cb_inv[image[ca[v - 1] - 1]];
  return out;
}

}  // namespace hochster
