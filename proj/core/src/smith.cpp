#include "hochster/smith.hpp"

#include <utility>

namespace hochster {

namespace {

class Reducer {
 public:
  Reducer(IntMatrix A, bool transforms) : A_(std::move(A)), track_(transforms) {
    const Integers Z;
    if (track_) {
      U_ = IntMatrix::identity(Z, A_.rows);
      U_inv_ = U_;
      V_ = IntMatrix::identity(Z, A_.cols);
      V_inv_ = V_;
    }
  }

  SmithForm run() {
    const int limit = std::min(A_.rows, A_.cols);
    int t = 0;
    for (; t < limit; ++t) {
      auto [pi, pj] = smallest(t, t);
      if (pi < 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      while (true) {
        bool clean = true;
        for (int i = t + 1; i < A_.rows; ++i) {
          if (A_(i, t) == 0) continue;
          mpz_class q = A_(i, t) / A_(t, t);
          if (q != 0) add_row(i, t, -q);
          if (A_(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < A_.cols; ++j) {
          if (A_(t, j) == 0) continue;
          mpz_class q = A_(t, j) / A_(t, t);
          if (q != 0) add_col(j, t, -q);
          if (A_(t, j) != 0) clean = false;
        }
        if (!clean) {
          // Move the smallest remainder in row/column t onto the diagonal.
          int bi = t, bj = t;
          for (int i = t + 1; i < A_.rows; ++i)
            if (A_(i, t) != 0 && abs(A_(i, t)) < abs(A_(bi, bj))) bi = i, bj = t;
          for (int j = t + 1; j < A_.cols; ++j)
            if (A_(t, j) != 0 && abs(A_(t, j)) < abs(A_(bi, bj))) bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        int bad = -1;
        for (int i = t + 1; i < A_.rows && bad < 0; ++i)
          for (int j = t + 1; j < A_.cols; ++j)
            if (A_(i, j) % A_(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1);
      }
      if (A_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    for (int i = 0; i < t; ++i) out.invariant_factors.push_back(A_(i, i));
    if (track_) {
      out.U = std::move(U_);
      out.U_inv = std::move(U_inv_);
      out.V = std::move(V_);
      out.V_inv = std::move(V_inv_);
    }
    return out;
  }

 private:
  std::pair<int, int> smallest(int r0, int c0) const {
    int bi = -1, bj = -1;
    for (int i = r0; i < A_.rows; ++i)
      for (int j = c0; j < A_.cols; ++j) {
        if (A_(i, j) == 0) continue;
        if (bi < 0 || abs(A_(i, j)) < abs(A_(bi, bj))) {
          bi = i;
          bj = j;
          if (abs(A_(i, j)) == 1) return {bi, bj};
        }
      }
    return {bi, bj};
  }

  static void row_swap(IntMatrix& M, int a, int b) {
    for (int j = 0; j < M.cols; ++j) std::swap(M(a, j), M(b, j));
  }
  static void col_swap(IntMatrix& M, int a, int b) {
    for (int i = 0; i < M.rows; ++i) std::swap(M(i, a), M(i, b));
  }
  // row_i += q·row_j
  static void row_add(IntMatrix& M, int i, int j, const mpz_class& q) {
    for (int c = 0; c < M.cols; ++c)
      if (M(j, c) != 0) M(i, c) += q * M(j, c);
  }
  // col_i += q·col_j
  static void col_add(IntMatrix& M, int i, int j, const mpz_class& q) {
    for (int r = 0; r < M.rows; ++r)
      if (M(r, j) != 0) M(r, i) += q * M(r, j);
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    row_swap(A_, a, b);
    if (track_) {
      row_swap(U_, a, b);
      col_swap(U_inv_, a, b);
    }
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    col_swap(A_, a, b);
    if (track_) {
      col_swap(V_, a, b);
      row_swap(V_inv_, a, b);
    }
  }
  void add_row(int i, int j, const mpz_class& q) {
    row_add(A_, i, j, q);
    if (track_) {
      row_add(U_, i, j, q);
      col_add(U_inv_, j, i, -q);
    }
  }
  void add_col(int i, int j, const mpz_class& q) {
    col_add(A_, i, j, q);
    if (track_) {
      col_add(V_, i, j, q);
      row_add(V_inv_, j, i, -q);
    }
  }
  void negate_row(int i) {
    for (int c = 0; c < A_.cols; ++c) A_(i, c) = -A_(i, c);
    if (track_) {
      for (int c = 0; c < U_.cols; ++c) U_(i, c) = -U_(i, c);
      for (int r = 0; r < U_inv_.rows; ++r) U_inv_(r, i) = -U_inv_(r, i);
    }
  }

  IntMatrix A_;
  bool track_;
  IntMatrix U_, U_inv_, V_, V_inv_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix A, bool with_transforms) {
  return Reducer(std::move(A), with_transforms).run();
}

IntMatrix smith_diagonal(const SmithForm& S, int rows, int cols) {
  IntMatrix D = IntMatrix::zeros(Integers{}, rows, cols);
  for (int i = 0; i < S.rank; ++i) D(i, i) = S.invariant_factors[i];
  return D;
}

QuotientBasis<Integers> integer_subquotient(int n, const IntMatrix& A, const IntMatrix& B) {
  const Integers Z;
  IntMatrix V, V_inv;
  int r = 0;
  if (A.rows == 0 || A.cols == 0) {
    V = V_inv = IntMatrix::identity(Z, n);
  } else {
    SmithForm S = smith_normal_form(A, true);
    r = S.rank;
    V = std::move(*S.V);
    V_inv = std::move(*S.V_inv);
  }
  const int k = n - r;
  QuotientBasis<Integers> out;
  out.ambient = n;
  for (int j = 0; j < n; ++j) out.support.push_back(j);
  if (k == 0) {
    out.compact = IntMatrix::zeros(Z, 0, n);
    return out;
  }
  // Boundaries in kernel coordinates.
  IntMatrix C = IntMatrix::zeros(Z, k, B.cols);
  if (B.cols > 0) {
    IntMatrix VB = multiply(Z, V_inv, B);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < B.cols; ++j) C(i, j) = VB(r + i, j);
  }
  IntMatrix U2, U2_inv;
  int r2 = 0;
  if (B.cols == 0) {
    U2 = U2_inv = IntMatrix::identity(Z, k);
  } else {
    SmithForm S2 = smith_normal_form(C, true);
    for (const auto& d : S2.invariant_factors)
      if (d != 1) fail(ErrorCode::torsion_unsupported, "integral cohomology has torsion");
    r2 = S2.rank;
    U2 = std::move(*S2.U);
    U2_inv = std::move(*S2.U_inv);
  }
  const int h = k - r2;
  for (int c = 0; c < h; ++c) {
    Vec<Integers> rep(n, 0);
    for (int i = 0; i < k; ++i) {
      const mpz_class& coeff = U2_inv(i, r2 + c);
      if (coeff == 0) continue;
      for (int row = 0; row < n; ++row)
        if (V(row, r + i) != 0) rep[row] += coeff * V(row, r + i);
    }
    out.representatives.push_back(std::move(rep));
  }
  out.compact = IntMatrix::zeros(Z, h, n);
  for (int c = 0; c < h; ++c)
    for (int i = 0; i < k; ++i) {
      const mpz_class& u = U2(r2 + c, i);
      if (u == 0) continue;
      for (int col = 0; col < n; ++col)
        if (V_inv(r + i, col) != 0) out.compact(c, col) += u * V_inv(r + i, col);
    }
  return out;
}

}  // namespace hochster
