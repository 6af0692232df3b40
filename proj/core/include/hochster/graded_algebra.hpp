#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/sparse.hpp"

namespace hochster {

// Isomorphism invariants of a finite graded algebra. Only nonzero entries are kept.
struct RingFingerprint {
  std::map<int, int> hilbert;                    // degree → dimension
  std::map<std::pair<int, int>, int> mult_rank;  // (i ≤ j) → rank of A^i ⊗ A^j → A^{i+j}
  std::map<int, int> decomposable;               // k → dim (A·A)^k

  int total_dimension() const {
    int s = 0;
    for (auto [d, n] : hilbert) s += n;
    return s;
  }
  std::string to_string() const;
  friend bool operator==(const RingFingerprint&, const RingFingerprint&) = default;
};

inline bool fingerprints_equal(const RingFingerprint& a, const RingFingerprint& b) { return a == b; }

// Finite graded algebra given by a homogeneous basis and structure constants.
// The reduced rings used here are non-unital.
template <class R>
class GradedAlgebra {
 public:
  using value_type = typename R::value_type;
  struct BasisElement {
    int degree = 0;
    std::string label;
  };
  using Row = std::vector<std::pair<int, SparseVec<R>>>;  // (j, e_i·e_j), sorted by j

  explicit GradedAlgebra(R F = R{}) : F_(std::move(F)) {}

  const R& field() const { return F_; }
  int add_basis(int degree, std::string label) {
    basis_.push_back({degree, std::move(label)});
    rows_.emplace_back();
    return static_cast<int>(basis_.size()) - 1;
  }
  // Appends e_i·e_j; callers add each pair once, with j increasing per row.
  void set_product(int i, int j, SparseVec<R> v) {
    if (v.empty()) return;
    for (const auto& [k, c] : v)
      if (basis_[k].degree != basis_[i].degree + basis_[j].degree)
        fail(ErrorCode::internal_inconsistency, "product does not respect the grading");
    auto& row = rows_[i];
    if (!row.empty() && row.back().first >= j) {
      auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, int x) { return e.first < x; });
      if (it != row.end() && it->first == j) {
        it->second = std::move(v);
        return;
      }
      row.insert(it, {j, std::move(v)});
      return;
    }
    row.emplace_back(j, std::move(v));
  }

  int dimension() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(int i) const { return basis_[i].degree; }
  const Row& row(int i) const { return rows_[i]; }

  const SparseVec<R>& product(int i, int j) const {
    static const SparseVec<R> zero;
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, int x) { return e.first < x; });
    return (it != row.end() && it->first == j) ? it->second : zero;
  }

  SparseVec<R> multiply(const SparseVec<R>& a, const SparseVec<R>& b) const {
    SparseAccumulator<R> acc(F_);
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) {
        const auto& p = product(i, j);
        if (!p.empty()) acc.add_scaled(p, F_.mul(x, y));
      }
    return acc.take();
  }

  std::map<int, int> hilbert() const {
    std::map<int, int> h;
    for (const auto& e : basis_) ++h[e.degree];
    return h;
  }
  int dimension_in_degree(int d) const {
    int n = 0;
    for (const auto& e : basis_) n += e.degree == d;
    return n;
  }
  std::vector<int> elements_of_degree(int d) const {
    std::vector<int> out;
    for (int i = 0; i < dimension(); ++i)
      if (basis_[i].degree == d) out.push_back(i);
    return out;
  }
  // Highest degree present; nullopt for the zero algebra.
  std::optional<int> top_degree() const {
    std::optional<int> top;
    for (const auto& e : basis_)
      if (!top || e.degree > *top) top = e.degree;
    return top;
  }
  std::size_t nonzero_products() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  bool is_homogeneous(const SparseVec<R>& v) const {
    for (const auto& [i, x] : v)
      if (basis_[i].degree != basis_[v.front().first].degree) return false;
    return true;
  }

  // Number of basis pairs violating e_i e_j = (−1)^{|i||j|} e_j e_i.
  long long commutativity_violations() const {
    long long bad = 0;
    for (int i = 0; i < dimension(); ++i)
      for (int j = i; j < dimension(); ++j) {
        SparseVec<R> ij = product(i, j), ji = product(j, i);
        if ((degree(i) * degree(j)) % 2 != 0) ji = sparse_scale(F_, ji, F_.neg(F_.one()));
        if (ij != ji) ++bad;
      }
    return bad;
  }

  // Exhaustive when dim³ ≤ budget, otherwise `samples` random basis triples.
  long long associativity_violations(long long budget = 8'000'000, int samples = 20000,
                                     unsigned seed = 12345) const {
    const long long n = dimension();
    long long bad = 0;
    auto check = [&](int i, int j, int k) {
      SparseVec<R> left = multiply(product(i, j), SparseVec<R>{{k, F_.one()}});
      SparseVec<R> right = multiply(SparseVec<R>{{i, F_.one()}}, product(j, k));
      if (left != right) ++bad;
    };
    if (n * n * n <= budget) {
      for (int i = 0; i < n; ++i)
        for (const auto& [j, p] : rows_[i])
          for (int k = 0; k < n; ++k) check(i, j, k);
      // Triples with e_i e_j = 0 only need the right-hand side to vanish.
      for (int j = 0; j < n; ++j)
        for (const auto& [k, p] : rows_[j])
          for (int i = 0; i < n; ++i)
            if (product(i, j).empty() && !multiply(SparseVec<R>{{i, F_.one()}}, p).empty()) ++bad;
      return bad;
    }
    if (n == 0) return 0;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    for (int s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
    return bad;
  }

 private:
  R F_;
  std::vector<BasisElement> basis_;
  std::vector<Row> rows_;
};

// Ranks computed over the field.
template <class R>
RingFingerprint fingerprint(const GradedAlgebra<R>& A) {
  static_assert(R::is_field);
  const R& F = A.field();
  RingFingerprint fp;
  fp.hilbert = A.hilbert();
  std::map<std::pair<int, int>, SparseEchelon<R>> mult;
  std::map<int, SparseEchelon<R>> dec;
  for (int i = 0; i < A.dimension(); ++i) {
    const int di = A.degree(i);
    for (const auto& [j, p] : A.row(i)) {
      const int dj = A.degree(j);
      const int target_dim = fp.hilbert[di + dj];
      auto& d = dec.try_emplace(di + dj, F).first->second;
      if (d.rank() < target_dim) d.add(p);
      if (di > dj) continue;
      auto& mm = mult.try_emplace({di, dj}, F).first->second;
      if (mm.rank() < target_dim) mm.add(p);
    }
  }
  for (auto& [key, e] : mult)
    if (e.rank() > 0) fp.mult_rank[key] = e.rank();
  for (auto& [key, e] : dec)
    if (e.rank() > 0) fp.decomposable[key] = e.rank();
  for (auto it = fp.hilbert.begin(); it != fp.hilbert.end();)
    it = it->second == 0 ? fp.hilbert.erase(it) : std::next(it);
  return fp;
}

// Integral structure constants viewed over ℚ.
GradedAlgebra<Rationals> to_rationals(const GradedAlgebra<Integers>& A);
RingFingerprint fingerprint(const GradedAlgebra<Integers>& A);

}  // namespace hochster
