#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hochster/coefficients.hpp"

namespace hochster {

// Sorted by index, no explicit zeros.
template <class R>
using SparseVec = std::vector<std::pair<int, typename R::value_type>>;

template <class R>
SparseVec<R> sparse_from_dense(const R& F, const std::vector<typename R::value_type>& v, int offset = 0) {
  SparseVec<R> out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!F.is_zero(v[i])) out.emplace_back(offset + i, v[i]);
  return out;
}

// a + c·b
template <class R>
SparseVec<R> sparse_axpy(const R& F, const SparseVec<R>& a, const typename R::value_type& c, const SparseVec<R>& b) {
  SparseVec<R> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto v = F.mul(c, b[j].second);
      if (!F.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      auto v = F.add(a[i].second, F.mul(c, b[j].second));
      if (!F.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class R>
SparseVec<R> sparse_scale(const R& F, const SparseVec<R>& a, const typename R::value_type& c) {
  SparseVec<R> out;
  if (F.is_zero(c)) return out;
  for (const auto& [i, v] : a) {
    auto w = F.mul(c, v);
    if (!F.is_zero(w)) out.emplace_back(i, std::move(w));
  }
  return out;
}

// Accumulates Σ c_k v_k into an ordered map, then flattens.
template <class R>
class SparseAccumulator {
 public:
  explicit SparseAccumulator(R F) : F_(std::move(F)) {}
  void add(int index, const typename R::value_type& v) {
    if (F_.is_zero(v)) return;
    auto [it, inserted] = acc_.try_emplace(index, v);
    if (!inserted) it->second = F_.add(it->second, v);
  }
  void add_scaled(const SparseVec<R>& vec, const typename R::value_type& c) {
    for (const auto& [i, v] : vec) add(i, F_.mul(c, v));
  }
  SparseVec<R> take() {
    SparseVec<R> out;
    for (auto& [i, v] : acc_)
      if (!F_.is_zero(v)) out.emplace_back(i, std::move(v));
    acc_.clear();
    return out;
  }

 private:
  R F_;
  std::map<int, typename R::value_type> acc_;
};

// Incremental span over a field. Stored rows have leading coefficient 1 at
// their pivot and only larger indices otherwise.
template <class R>
class SparseEchelon {
 public:
  explicit SparseEchelon(R F) : F_(std::move(F)) {}

  // Reduces v until no stored pivot index remains in it.
  SparseVec<R> reduce(const SparseVec<R>& v) const {
    std::map<int, typename R::value_type> w(v.begin(), v.end());
    auto it = w.begin();
    while (it != w.end()) {
      if (F_.is_zero(it->second)) {
        it = w.erase(it);
        continue;
      }
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const auto c = it->second;
      const int key = it->first;
      for (const auto& [idx, val] : p->second) {
        if (idx == key) continue;
        auto [slot, inserted] = w.try_emplace(idx, F_.neg(F_.mul(c, val)));
        if (!inserted) slot->second = F_.sub(slot->second, F_.mul(c, val));
      }
      it = w.erase(it);
    }
    return SparseVec<R>(w.begin(), w.end());
  }

  bool add(const SparseVec<R>& v) {
    SparseVec<R> r = reduce(v);
    if (r.empty()) return false;
    const auto inv = F_.inv(r.front().second);
    for (auto& [i, x] : r) x = F_.mul(x, inv);
    const int pivot = r.front().first;
    pivots_.emplace(pivot, std::move(r));
    return true;
  }

  bool contains(const SparseVec<R>& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(pivots_.size()); }
  bool is_pivot(int index) const { return pivots_.count(index) != 0; }

 private:
  R F_;
  std::unordered_map<int, SparseVec<R>> pivots_;
};

}  // namespace hochster
