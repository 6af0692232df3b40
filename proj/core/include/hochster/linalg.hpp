#pragma once

#include <utility>
#include <vector>

#include "hochster/coefficients.hpp"
#include "hochster/errors.hpp"

namespace hochster {

template <class R>
using Vec = std::vector<typename R::value_type>;

// Dense row-major matrix over a coefficient policy.
template <class R>
struct Matrix {
  using value_type = typename R::value_type;

  int rows = 0;
  int cols = 0;
  std::vector<value_type> data;

  Matrix() = default;
  Matrix(int r, int c, const value_type& fill) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}
  static Matrix zeros(const R& F, int r, int c) { return Matrix(r, c, F.zero()); }
  static Matrix identity(const R& F, int n) {
    Matrix I = zeros(F, n, n);
    for (int i = 0; i < n; ++i) I(i, i) = F.one();
    return I;
  }

  value_type& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const value_type& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  Vec<R> column(int j) const {
    Vec<R> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) out.push_back((*this)(i, j));
    return out;
  }
  Matrix transpose() const {
    Matrix t;
    t.rows = cols;
    t.cols = rows;
    t.data.reserve(data.size());
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) t.data.push_back((*this)(i, j));
    return t;
  }
  static Matrix from_columns(const R& F, int n, const std::vector<Vec<R>>& columns) {
    Matrix M = zeros(F, n, static_cast<int>(columns.size()));
    for (int j = 0; j < M.cols; ++j)
      for (int i = 0; i < n; ++i) M(i, j) = columns[j][i];
    return M;
  }
};

template <class R>
Matrix<R> multiply(const R& F, const Matrix<R>& A, const Matrix<R>& B) {
  Matrix<R> C = Matrix<R>::zeros(F, A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const auto& a = A(i, k);
      if (F.is_zero(a)) continue;
      for (int j = 0; j < B.cols; ++j)
        if (!F.is_zero(B(k, j))) C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
    }
  return C;
}

template <class R>
Vec<R> apply(const R& F, const Matrix<R>& A, const Vec<R>& x) {
  Vec<R> y(A.rows, F.zero());
  for (int j = 0; j < A.cols; ++j) {
    if (F.is_zero(x[j])) continue;
    for (int i = 0; i < A.rows; ++i)
      if (!F.is_zero(A(i, j))) y[i] = F.add(y[i], F.mul(A(i, j), x[j]));
  }
  return y;
}

template <class R>
bool is_zero_vector(const R& F, const Vec<R>& v) {
  for (const auto& x : v)
    if (!F.is_zero(x)) return false;
  return true;
}

// Gauss(-Jordan) elimination in place over a field; returns pivot columns.
template <class R>
std::vector<int> row_reduce(const R& F, Matrix<R>& A, bool reduced = true) {
  static_assert(R::is_field);
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int pick = -1;
    for (int i = row; i < A.rows; ++i)
      if (!F.is_zero(A(i, col))) {
        pick = i;
        break;
      }
    if (pick < 0) continue;
    if (pick != row)
      for (int j = 0; j < A.cols; ++j) std::swap(A(pick, j), A(row, j));
    const auto inv = F.inv(A(row, col));
    for (int j = col; j < A.cols; ++j)
      if (!F.is_zero(A(row, j))) A(row, j) = F.mul(A(row, j), inv);
    for (int i = reduced ? 0 : row + 1; i < A.rows; ++i) {
      if (i == row || F.is_zero(A(i, col))) continue;
      const auto factor = A(i, col);
      for (int j = col; j < A.cols; ++j)
        if (!F.is_zero(A(row, j))) A(i, j) = F.sub(A(i, j), F.mul(factor, A(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class R>
int rank(const R& F, Matrix<R> A) {
  return static_cast<int>(row_reduce(F, A, false).size());
}

// Basis of {x : A x = 0}.
template <class R>
std::vector<Vec<R>> kernel_basis(const R& F, Matrix<R> A) {
  const auto pivots = row_reduce(F, A, true);
  std::vector<bool> is_pivot(A.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec<R>> out;
  for (int free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<R> x(A.cols, F.zero());
    x[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F.neg(A(static_cast<int>(r), free));
    out.push_back(std::move(x));
  }
  return out;
}

// A maximal independent subset of the columns of A.
template <class R>
std::vector<Vec<R>> image_basis(const R& F, const Matrix<R>& A) {
  Matrix<R> work = A;
  std::vector<Vec<R>> out;
  for (int p : row_reduce(F, work, false)) out.push_back(A.column(p));
  return out;
}

// Some x with A x = b; throws NoSolution.
template <class R>
Vec<R> solve(const R& F, const Matrix<R>& A, const Vec<R>& b) {
  Matrix<R> aug = Matrix<R>::zeros(F, A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  const auto pivots = row_reduce(F, aug, true);
  if (!pivots.empty() && pivots.back() == A.cols) fail(ErrorCode::no_solution, "inconsistent linear system");
  Vec<R> x(A.cols, F.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), A.cols);
  return x;
}

// Inverse of a square invertible matrix.
template <class R>
Matrix<R> inverse(const R& F, const Matrix<R>& A) {
  const int n = A.rows;
  Matrix<R> aug = Matrix<R>::zeros(F, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = F.one();
  }
  const auto pivots = row_reduce(F, aug, true);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    fail(ErrorCode::invalid_argument, "matrix is singular");
  Matrix<R> inv = Matrix<R>::zeros(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Incrementally built basis with rows reduced against earlier pivots.
template <class R>
class EchelonBasis {
 public:
  EchelonBasis(R F, int n) : F_(std::move(F)), n_(n) {}

  // Reduces v in place against the stored rows; returns true if it was independent.
  bool add(Vec<R> v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    const auto inv = F_.inv(v[p]);
    for (auto& x : v)
      if (!F_.is_zero(x)) x = F_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  bool contains(Vec<R> v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }
  void reduce(Vec<R>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (F_.is_zero(c)) continue;
      const auto& row = rows_[r];
      for (int j = 0; j < n_; ++j)
        if (!F_.is_zero(row[j])) v[j] = F_.sub(v[j], F_.mul(c, row[j]));
    }
  }
  int rank() const { return static_cast<int>(rows_.size()); }
  int dimension() const { return n_; }

 private:
  int first_nonzero(const Vec<R>& v) const {
    for (int j = 0; j < n_; ++j)
      if (!F_.is_zero(v[j])) return j;
    return -1;
  }

  R F_;
  int n_;
  std::vector<Vec<R>> rows_;
  std::vector<int> pivots_;
};

// Basis of a quotient space S/W together with a coordinate functional.
// The functional is stored compactly: coords(x) = compact · x[support].
template <class R>
struct QuotientBasis {
  int ambient = 0;
  std::vector<Vec<R>> representatives;
  std::vector<int> support;
  Matrix<R> compact;

  int size() const { return static_cast<int>(representatives.size()); }

  Vec<R> coordinates(const R& F, const Vec<R>& x) const {
    Vec<R> out(representatives.size(), F.zero());
    for (int c = 0; c < compact.cols; ++c) {
      const auto& xv = x[support[c]];
      if (F.is_zero(xv)) continue;
      for (int r = 0; r < compact.rows; ++r)
        if (!F.is_zero(compact(r, c))) out[r] = F.add(out[r], F.mul(compact(r, c), xv));
    }
    return out;
  }

  // Dense k × ambient functional.
  Matrix<R> functional(const R& F) const {
    Matrix<R> out = Matrix<R>::zeros(F, size(), ambient);
    for (int r = 0; r < compact.rows; ++r)
      for (int c = 0; c < compact.cols; ++c) out(r, support[c]) = compact(r, c);
    return out;
  }
};

// space spans S, subspace spans W ⊆ S (both inside F^n).
template <class R>
QuotientBasis<R> quotient_coordinates(const R& F, int n, const std::vector<Vec<R>>& space,
                                      const std::vector<Vec<R>>& subspace) {
  static_assert(R::is_field);
  EchelonBasis<R> span(F, n);
  std::vector<Vec<R>> w_basis, reps;
  for (const auto& w : subspace)
    if (span.add(w)) w_basis.push_back(w);
  for (const auto& s : space)
    if (span.add(s)) reps.push_back(s);
  QuotientBasis<R> out;
  out.ambient = n;
  out.representatives = reps;
  if (reps.empty()) {
    out.compact = Matrix<R>::zeros(F, 0, 0);
    return out;
  }
  std::vector<Vec<R>> columns = w_basis;
  columns.insert(columns.end(), reps.begin(), reps.end());
  const int t = static_cast<int>(columns.size());
  Matrix<R> Mt = Matrix<R>::from_columns(F, n, columns).transpose();
  Matrix<R> work = Mt;
  out.support = row_reduce(F, work, false);
  Matrix<R> MP = Matrix<R>::zeros(F, t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) MP(i, j) = Mt(j, out.support[i]);
  Matrix<R> inv = inverse(F, MP);
  const int k = static_cast<int>(reps.size());
  out.compact = Matrix<R>::zeros(F, k, t);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < t; ++c) out.compact(r, c) = inv(t - k + r, c);
  return out;
}

// (ker A)/(im B) for composable A∘B = 0 over a field.
template <class R>
QuotientBasis<R> field_subquotient(const R& F, int n, const Matrix<R>& A, const Matrix<R>& B) {
  std::vector<Vec<R>> cycles;
  if (A.rows == 0) {
    for (int i = 0; i < n; ++i) {
      Vec<R> e(n, F.zero());
      e[i] = F.one();
      cycles.push_back(std::move(e));
    }
  } else {
    cycles = kernel_basis(F, A);
  }
  std::vector<Vec<R>> boundaries = B.cols == 0 ? std::vector<Vec<R>>{} : image_basis(F, B);
  return quotient_coordinates(F, n, cycles, boundaries);
}

}  // namespace hochster
