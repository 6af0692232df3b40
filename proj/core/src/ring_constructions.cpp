#include "hochster/ring_constructions.hpp"

#include <map>

namespace hochster {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<SphereProductTerm> connected_sum_sphere_terms(int m1, int m2, int n) {
  const int N = m1 + m2 - 2 * n;
  std::vector<SphereProductTerm> out;
  for (int i = 2; i <= N; ++i) {
    const long long lambda = binomial(N, i) - binomial(m1 - n, i) - binomial(m2 - n, i);
    if (lambda < 0) fail(ErrorCode::internal_inconsistency, "negative sphere-product multiplicity");
    if (lambda > 0) out.emplace_back(i + 1, m1 + m2 - i - 1, lambda);
  }
  return out;
}

std::vector<SphereProductTerm> stellar_sphere_terms(const std::vector<long long>& f, int m, int n, int s) {
  if (s > m) fail(ErrorCode::invalid_argument, "s exceeds the vertex count");
  std::map<std::pair<int, int>, long long> merged;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; j <= m - s; ++j) {
      if (i + j < 1) continue;
      const long long count = f[i] * binomial(m - s, j);
      const int a = i + j + 2, b = m + n - i - j - 1;
      if (b < 1) fail(ErrorCode::invalid_argument, "sphere-product term out of range");
      merged[{a, b}] += count;
    }
  }
  std::vector<SphereProductTerm> out;
  for (const auto& [ab, count] : merged) out.emplace_back(ab.first, ab.second, count);
  return out;
}

std::vector<SphereProductTerm> boundary_simplex_sum_terms(int m, int n) {
  std::vector<SphereProductTerm> out;
  for (int j = 1; j <= m - n; ++j) out.emplace_back(j + 2, m + n - j - 1, binomial(m - n, j));
  return out;
}

std::optional<std::vector<int>> match_factors(const std::vector<RingFingerprint>& F1,
                                              const std::vector<RingFingerprint>& F2) {
  const int n = static_cast<int>(F1.size());
  if (n != static_cast<int>(F2.size())) return std::nullopt;
  std::vector<int> owner(n, -1);  // owner[j] = index in F1 matched to F2[j]
  // Free partners are tried first so identical lists give the identity.
  std::function<bool(int, std::vector<bool>&)> augment = [&](int i, std::vector<bool>& seen) {
    for (int j = 0; j < n; ++j)
      if (owner[j] < 0 && F1[i] == F2[j]) {
        owner[j] = i;
        return true;
      }
    for (int j = 0; j < n; ++j) {
      if (seen[j] || !(F1[i] == F2[j])) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(owner[j], seen)) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    if (!augment(i, seen)) return std::nullopt;
  }
  std::vector<int> result(n);
  for (int j = 0; j < n; ++j) result[owner[j]] = j;
  return result;
}

}  // namespace hochster
