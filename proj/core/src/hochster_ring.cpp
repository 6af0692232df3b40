#include "hochster/hochster_ring.hpp"

#include <cstdlib>

namespace hochster {

int default_jobs() {
  if (const char* env = std::getenv("HOCHSTER_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<VertexSet> subsets_by_popcount(int m) {
  if (m > 30) fail(ErrorCode::unsupported_size, "too many subsets to enumerate");
  std::vector<VertexSet> out;
  out.reserve((std::size_t{1} << m) - 1);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) out.emplace_back(s);
  std::stable_sort(out.begin(), out.end(), popcount_less);
  return out;
}

ChainComplex restricted_chain_complex(const SimplicialComplex& K, VertexSet J) {
  std::vector<VertexSet> faces;
  for (VertexSet f : K.faces())
    if (f.is_subset_of(J)) faces.push_back(f);
  return ChainComplex(K.ground_size(), faces);
}

std::map<int, int> BigradedBetti::betti() const {
  std::map<int, int> out{{0, 1}};
  for (const auto& e : entries)
    if (e.rank > 0) out[e.total_degree()] += e.rank;
  return out;
}

std::vector<int> BigradedBetti::betti_vector() const {
  const auto b = betti();
  std::vector<int> out(b.rbegin()->first + 1, 0);
  for (auto [p, r] : b) out[p] = r;
  return out;
}

std::map<int, std::vector<mpz_class>> BigradedBetti::torsion() const {
  std::map<int, std::vector<mpz_class>> out;
  for (const auto& e : entries)
    for (const auto& t : e.torsion) out[e.total_degree()].push_back(t);
  for (auto& [p, factors] : out) std::sort(factors.begin(), factors.end());
  return out;
}

BigradedBetti bigraded_betti(const SimplicialComplex& K, const Coefficients& coeff, int jobs) {
  const auto subsets = subsets_by_popcount(K.ground_size());
  std::vector<std::vector<BigradedEntry>> slots(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t k) {
    const ChainComplex C = restricted_chain_complex(K, subsets[k]);
    const HomologySummary h = reduced_homology(C, coeff);
    const int top = C.top_degree();
    for (int d = -1; d <= top + 1; ++d) {
      BigradedEntry e{subsets[k], d, h.rank(d), h.torsion_in(d - 1)};
      if (e.rank > 0 || !e.torsion.empty()) slots[k].push_back(std::move(e));
    }
  });
  BigradedBetti out;
  out.m = K.ground_size();
  out.coefficients = coeff;
  for (auto& s : slots)
    for (auto& e : s) out.entries.push_back(std::move(e));
  return out;
}

}  // namespace hochster
