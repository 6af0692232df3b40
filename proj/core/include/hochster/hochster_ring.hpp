#pragma once

#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "hochster/graded_algebra.hpp"
#include "hochster/homology.hpp"
#include "hochster/parallel.hpp"

namespace hochster {

// Nonempty subsets of [m] ordered by popcount, then numerically.
std::vector<VertexSet> subsets_by_popcount(int m);

// Faces of K inside J, as a chain complex of K_J.
ChainComplex restricted_chain_complex(const SimplicialComplex& K, VertexSet J);

struct BigradedEntry {
  VertexSet J;
  int d = 0;  // reduced cohomological degree on K_J
  int rank = 0;
  std::vector<mpz_class> torsion;

  int total_degree() const { return J.size() + d + 1; }
  // Tor index i with Tor^{-i,2J}; total degree = -i + 2|J|.
  int tor_i() const { return J.size() - d - 1; }
};

struct BigradedBetti {
  int m = 0;
  Coefficients coefficients;
  std::vector<BigradedEntry> entries;  // J ≠ ∅ with nonzero rank or torsion

  // Total degree → rank, including the unit in degree 0.
  std::map<int, int> betti() const;
  std::vector<int> betti_vector() const;  // index = degree 0..top
  std::map<int, std::vector<mpz_class>> torsion() const;
};

BigradedBetti bigraded_betti(const SimplicialComplex& K, const Coefficients& coeff, int jobs = 1);

// Reduced cohomology ring of the moment-angle complex in the subset
// decomposition. Basis elements are grouped in blocks (J, d) ordered by J
// (popcount, then numeric) and then d; degree = |J| + d + 1.
template <class R>
class HochsterRing {
 public:
  using value_type = typename R::value_type;
  struct Block {
    VertexSet J;
    int d = 0;
    int offset = 0;
    int size = 0;
    int subset = 0;  // index into the per-subset data
    int total_degree() const { return J.size() + d + 1; }
  };

  HochsterRing(const SimplicialComplex& K, R F = R{}, int jobs = 1);

  const R& field() const { return F_; }
  const SimplicialComplex& complex() const { return K_; }
  int dimension() const { return dimension_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_of(int index) const;
  int degree(int index) const { return blocks_[block_of(index)].total_degree(); }
  std::optional<int> find_block(VertexSet J, int d) const;
  std::map<int, int> hilbert() const;
  std::optional<int> top_degree() const;

  const ChainComplex& chain_complex(int block) const { return data_[blocks_[block].subset].C; }
  const QuotientBasis<R>& cohomology(int block) const { return *basis_[block]; }

  // Star products of all basis pairs of two blocks: entry r·size_b + s holds
  // the target-block coordinates of e_{a,r} * e_{b,s}. Empty if the target
  // block does not exist or the supports overlap.
  std::vector<Vec<R>> block_products(int a, int b) const;

  SparseVec<R> multiply_basis(int i, int j) const;
  SparseVec<R> multiply(const SparseVec<R>& u, const SparseVec<R>& v) const;

  GradedAlgebra<R> to_algebra(int jobs = 1) const;

  // Fingerprint computed block by block with early stopping. With drop_top
  // the result equals the fingerprint of the quotient by the top class.
  RingFingerprint fingerprint(bool drop_top = false, int jobs = 1) const;

  long long commutativity_violations() const;
  long long associativity_violations(int samples, unsigned seed = 2024) const;

 private:
  struct SubsetData {
    VertexSet J;
    ChainComplex C;
  };

  std::pair<int, int> blocks_at(VertexSet J) const;  // [first, last)

  SimplicialComplex K_;
  R F_;
  std::vector<SubsetData> data_;
  std::vector<Block> blocks_;
  std::vector<std::shared_ptr<const QuotientBasis<R>>> basis_;
  std::unordered_map<std::uint64_t, std::pair<int, int>> by_subset_;
  int dimension_ = 0;
};

// ---------------------------------------------------------------------------

template <class R>
HochsterRing<R>::HochsterRing(const SimplicialComplex& K, R F, int jobs) : K_(K), F_(std::move(F)) {
  const auto subsets = subsets_by_popcount(K.ground_size());
  struct Slot {
    ChainComplex C;
    std::vector<std::pair<int, std::shared_ptr<const QuotientBasis<R>>>> classes;
  };
  std::vector<Slot> slots(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t k) {
    Slot& slot = slots[k];
    slot.C = restricted_chain_complex(K_, subsets[k]);
    for (int d = -1; d <= slot.C.top_degree(); ++d) {
      auto basis = std::make_shared<QuotientBasis<R>>(cohomology_basis(F_, slot.C, d));
      if (basis->size() > 0) slot.classes.emplace_back(d, std::move(basis));
    }
  });
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    Slot& slot = slots[k];
    if (slot.classes.empty()) continue;
    const int subset = static_cast<int>(data_.size());
    data_.push_back({subsets[k], std::move(slot.C)});
    const int first = static_cast<int>(blocks_.size());
    for (auto& [d, basis] : slot.classes) {
      blocks_.push_back({subsets[k], d, dimension_, basis->size(), subset});
      dimension_ += basis->size();
      basis_.push_back(std::move(basis));
    }
    by_subset_[subsets[k].bits()] = {first, static_cast<int>(blocks_.size())};
  }
}

template <class R>
int HochsterRing<R>::block_of(int index) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](int x, const Block& b) { return x < b.offset; });
  return static_cast<int>(it - blocks_.begin()) - 1;
}

template <class R>
std::pair<int, int> HochsterRing<R>::blocks_at(VertexSet J) const {
  auto it = by_subset_.find(J.bits());
  return it == by_subset_.end() ? std::pair{0, 0} : it->second;
}

template <class R>
std::optional<int> HochsterRing<R>::find_block(VertexSet J, int d) const {
  auto [first, last] = blocks_at(J);
  for (int b = first; b < last; ++b)
    if (blocks_[b].d == d) return b;
  return std::nullopt;
}

template <class R>
std::map<int, int> HochsterRing<R>::hilbert() const {
  std::map<int, int> h;
  for (const auto& b : blocks_) h[b.total_degree()] += b.size;
  return h;
}

template <class R>
std::optional<int> HochsterRing<R>::top_degree() const {
  std::optional<int> top;
  for (const auto& b : blocks_)
    if (!top || b.total_degree() > *top) top = b.total_degree();
  return top;
}

template <class R>
std::vector<Vec<R>> HochsterRing<R>::block_products(int a, int b) const {
  const Block& A = blocks_[a];
  const Block& B = blocks_[b];
  if (A.J.intersects(B.J)) return {};
  const auto t = find_block(A.J | B.J, A.d + B.d + 1);
  if (!t) return {};
  const ChainComplex& CA = chain_complex(a);
  const ChainComplex& CB = chain_complex(b);
  const ChainComplex& CT = chain_complex(*t);
  const bool negative = (A.J.size() * (B.d + 1) + crossing_count(A.J, B.J)) % 2;
  std::vector<Vec<R>> out;
  out.reserve(static_cast<std::size_t>(A.size) * B.size);
  for (const auto& u : basis_[a]->representatives)
    for (const auto& v : basis_[b]->representatives) {
      Vec<R> coords = basis_[*t]->coordinates(F_, union_product(F_, CA, A.J, A.d, u, CB, B.J, B.d, v, CT));
      if (negative)
        for (auto& x : coords) x = F_.neg(x);
      out.push_back(std::move(coords));
    }
  return out;
}

template <class R>
SparseVec<R> HochsterRing<R>::multiply_basis(int i, int j) const {
  const int a = block_of(i), b = block_of(j);
  const auto products = block_products(a, b);
  if (products.empty()) return {};
  const auto t = *find_block(blocks_[a].J | blocks_[b].J, blocks_[a].d + blocks_[b].d + 1);
  const Vec<R>& coords = products[(i - blocks_[a].offset) * blocks_[b].size + (j - blocks_[b].offset)];
  return sparse_from_dense(F_, coords, blocks_[t].offset);
}

template <class R>
SparseVec<R> HochsterRing<R>::multiply(const SparseVec<R>& u, const SparseVec<R>& v) const {
  SparseAccumulator<R> acc(F_);
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v) acc.add_scaled(multiply_basis(i, j), F_.mul(x, y));
  return acc.take();
}

template <class R>
GradedAlgebra<R> HochsterRing<R>::to_algebra(int jobs) const {
  using Row = std::vector<std::pair<int, SparseVec<R>>>;
  std::vector<std::vector<Row>> rows(blocks_.size());
  parallel_for(blocks_.size(), jobs, [&](std::size_t a) {
    const Block& A = blocks_[a];
    rows[a].assign(A.size, {});
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const Block& B = blocks_[b];
      const auto products = block_products(static_cast<int>(a), static_cast<int>(b));
      if (products.empty()) continue;
      const int t = *find_block(A.J | B.J, A.d + B.d + 1);
      for (int r = 0; r < A.size; ++r)
        for (int s = 0; s < B.size; ++s) {
          SparseVec<R> v = sparse_from_dense(F_, products[r * B.size + s], blocks_[t].offset);
          if (!v.empty()) rows[a][r].emplace_back(B.offset + s, std::move(v));
        }
    }
  });
  GradedAlgebra<R> G(F_);
  for (const auto& B : blocks_)
    for (int r = 0; r < B.size; ++r)
      G.add_basis(B.total_degree(), B.J.to_string() + "^" + std::to_string(B.d) + "#" + std::to_string(r + 1));
  for (std::size_t a = 0; a < blocks_.size(); ++a)
    for (int r = 0; r < blocks_[a].size; ++r)
      for (auto& [j, v] : rows[a][r]) G.set_product(blocks_[a].offset + r, j, std::move(v));
  return G;
}

template <class R>
RingFingerprint HochsterRing<R>::fingerprint(bool drop_top, int jobs) const {
  static_assert(R::is_field);
  RingFingerprint fp;
  fp.hilbert = hilbert();
  const auto top = top_degree();
  if (drop_top) {
    if (!top || fp.hilbert[*top] != 1) fail(ErrorCode::not_poincare_candidate, "top degree is not one-dimensional");
    fp.hilbert.erase(*top);
  }
  struct Partial {
    int decomposable = 0;
    std::map<std::pair<int, int>, int> mult;
  };
  std::vector<Partial> partial(blocks_.size());
  parallel_for(blocks_.size(), jobs, [&](std::size_t t) {
    const Block& T = blocks_[t];
    if (drop_top && T.total_degree() == *top) return;
    EchelonBasis<R> dec(F_, T.size);
    std::map<std::pair<int, int>, EchelonBasis<R>> mult;
    const std::uint64_t full = T.J.bits();
    for (std::uint64_t sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
      const VertexSet JA(sub), JB(full & ~sub);
      auto [fa, la] = blocks_at(JA);
      for (int a = fa; a < la; ++a) {
        const int db = T.d - blocks_[a].d - 1;
        const auto b = find_block(JB, db);
        if (!b) continue;
        const int da = blocks_[a].total_degree(), dbt = blocks_[*b].total_degree();
        // Graded commutativity: (a, b) and (b, a) span the same image.
        if (da > dbt || (da == dbt && JA.bits() > JB.bits())) continue;
        auto& m = mult.try_emplace({da, dbt}, F_, T.size).first->second;
        if (m.rank() == T.size && dec.rank() == T.size) continue;
        for (auto& v : block_products(a, *b)) {
          if (dec.rank() < T.size) dec.add(v);
          if (m.rank() < T.size) m.add(std::move(v));
        }
      }
    }
    partial[t].decomposable = dec.rank();
    for (auto& [key, e] : mult)
      if (e.rank() > 0) partial[t].mult[key] = e.rank();
  });
  for (std::size_t t = 0; t < blocks_.size(); ++t) {
    if (partial[t].decomposable > 0) fp.decomposable[blocks_[t].total_degree()] += partial[t].decomposable;
    for (const auto& [key, r] : partial[t].mult) fp.mult_rank[key] += r;
  }
  return fp;
}

template <class R>
long long HochsterRing<R>::commutativity_violations() const {
  long long bad = 0;
  for (std::size_t a = 0; a < blocks_.size(); ++a)
    for (std::size_t b = a; b < blocks_.size(); ++b) {
      const auto ab = block_products(static_cast<int>(a), static_cast<int>(b));
      const auto ba = block_products(static_cast<int>(b), static_cast<int>(a));
      if (ab.size() != ba.size()) {
        ++bad;
        continue;
      }
      if (ab.empty()) continue;
      const Block& A = blocks_[a];
      const Block& B = blocks_[b];
      const bool odd = (A.total_degree() * B.total_degree()) % 2;
      for (int r = 0; r < A.size; ++r)
        for (int s = 0; s < B.size; ++s) {
          const Vec<R>& x = ab[r * B.size + s];
          const Vec<R>& y = ba[s * A.size + r];
          for (std::size_t k = 0; k < x.size(); ++k)
            if (!F_.equal(x[k], odd ? F_.neg(y[k]) : y[k])) {
              ++bad;
              break;
            }
        }
    }
  return bad;
}

template <class R>
long long HochsterRing<R>::associativity_violations(int samples, unsigned seed) const {
  if (dimension_ == 0) return 0;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, dimension_ - 1);
  long long bad = 0;
  for (int s = 0; s < samples; ++s) {
    // Bias toward disjoint supports so that most triples are nontrivial.
    int i = pick(rng), j = pick(rng), k = pick(rng);
    for (int tries = 0; tries < 50; ++tries) {
      const VertexSet I = blocks_[block_of(i)].J, J = blocks_[block_of(j)].J, L = blocks_[block_of(k)].J;
      if (!I.intersects(J) && !(I | J).intersects(L)) break;
      i = pick(rng), j = pick(rng), k = pick(rng);
    }
    const SparseVec<R> ei{{i, F_.one()}}, ek{{k, F_.one()}};
    if (multiply(multiply_basis(i, j), ek) != multiply(ei, multiply_basis(j, k))) ++bad;
  }
  return bad;
}

}  // namespace hochster
