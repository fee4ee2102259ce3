#include "motzeta/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace motzeta {

IntVec make_vec(std::initializer_list<long> entries) {
  IntVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scaled(const IntVec& v, const Int& c) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

IntVec negated(const IntVec& v) { return scaled(v, Int(-1)); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------- IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major)
    : IntMat(rows, cols) {
  if (row_major.size() != rows * cols) throw DimensionError("IntMat: entry count mismatch");
  std::size_t k = 0;
  for (long e : row_major) data_[k++] = e;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(std::size_t rows, const std::vector<IntVec>& columns) {
  IntMat m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMat IntMat::from_rows(std::size_t cols, const std::vector<IntVec>& rows) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("from_rows: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::column(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> cs;
  cs.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw DimensionError("IntMat product: dimension mismatch");
  IntMat r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw DimensionError("IntMat*vector: dimension mismatch");
  IntVec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool IntMat::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  return os << ']';
}

// ---------------------------------------------------------------- content

Content content_primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return {g, v};
  IntVec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(p[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return {g, p};
}

IntVec primitive(const IntVec& v) { return content_primitive(v).primitive; }

// ---------------------------------------------------------------- column ops

namespace {

void column_combine(IntMat& M, std::size_t k, std::size_t j, const Int& a, const Int& b,
                    const Int& c, const Int& d) {
  // (col_k, col_j) <- (a col_k + b col_j, c col_k + d col_j)
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Int x = M(i, k), y = M(i, j);
    M(i, k) = a * x + b * y;
    M(i, j) = c * x + d * y;
  }
}

void column_axpy(IntMat& M, std::size_t target, std::size_t source, const Int& q) {
  // col_target -= q col_source
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, target) -= q * M(i, source);
}

void column_negate(IntMat& M, std::size_t j) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, j) = -M(i, j);
}

void column_swap(IntMat& M, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}

void row_axpy(IntMat& M, std::size_t target, std::size_t source, const Int& q) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(target, j) -= q * M(source, j);
}

void row_negate(IntMat& M, std::size_t i) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = -M(i, j);
}

void row_swap(IntMat& M, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& A) {
  IntMat H = A;
  IntMat U = IntMat::identity(A.cols());
  std::size_t k = 0;
  for (std::size_t i = 0; i < H.rows() && k < H.cols(); ++i) {
    for (std::size_t j = k + 1; j < H.cols(); ++j) {
      if (H(i, j) == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), H(i, k).get_mpz_t(), H(i, j).get_mpz_t());
      Int a_g = H(i, k) / g, b_g = H(i, j) / g;
      column_combine(H, k, j, x, y, -b_g, a_g);
      column_combine(U, k, j, x, y, -b_g, a_g);
    }
    if (H(i, k) == 0) continue;
    if (H(i, k) < 0) {
      column_negate(H, k);
      column_negate(U, k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Int q = floor_div(H(i, j), H(i, k));
      if (q == 0) continue;
      column_axpy(H, j, k, q);
      column_axpy(U, j, k, q);
    }
    ++k;
  }
  return {std::move(H), std::move(U)};
}

SmithResult smith_normal_form(const IntMat& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMat S = A;
  IntMat U = IntMat::identity(m), Uinv = IntMat::identity(m), V = IntMat::identity(n);

  auto row_op = [&](std::size_t target, std::size_t source, const Int& q) {
    row_axpy(S, target, source, q);
    row_axpy(U, target, source, q);
    // inverse operation on the right: col_source += q col_target
    column_axpy(Uinv, source, target, -q);
  };
  auto col_op = [&](std::size_t target, std::size_t source, const Int& q) {
    column_axpy(S, target, source, q);
    column_axpy(V, target, source, q);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // pick a nonzero entry of minimal absolute value in the trailing block
    bool found = false;
    while (true) {
      std::size_t pi = 0, pj = 0;
      found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (!found || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) break;
      if (pi != t) {
        row_swap(S, pi, t);
        row_swap(U, pi, t);
        column_swap(Uinv, pi, t);
      }
      if (pj != t) {
        column_swap(S, pj, t);
        column_swap(V, pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        row_op(i, t, floor_div(S(i, t), S(t, t)));
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        col_op(j, t, floor_div(S(t, j), S(t, t)));
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            row_op(t, i, Int(-1));  // row_t += row_i
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found) break;
    if (S(t, t) < 0) {
      row_negate(S, t);
      row_negate(U, t);
      column_negate(Uinv, t);
    }
  }
  std::size_t r = 0;
  while (r < std::min(m, n) && S(r, r) != 0) ++r;
  return {std::move(S), std::move(U), std::move(V), std::move(Uinv), r};
}

Int torsion_order(const IntMat& A) {
  SmithResult snf = smith_normal_form(A);
  Int prod = 1;
  for (std::size_t i = 0; i < snf.rank; ++i) prod *= snf.S(i, i);
  return prod;
}

std::size_t rank(const IntMat& A) { return smith_normal_form(A).rank; }

Int determinant(const IntMat& A) {
  if (A.rows() != A.cols()) throw DimensionError("determinant: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMat M = A;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      row_swap(M, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
  if (A.rows() != b.size()) throw DimensionError("solve_integer: dimension mismatch");
  HermiteResult hnf = hermite_normal_form(A);
  const IntMat& H = hnf.H;
  IntVec y(A.cols(), Int(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < H.rows() && k < H.cols(); ++i) {
    if (H(i, k) == 0) continue;
    Int rhs = b[i];
    for (std::size_t j = 0; j < k; ++j) rhs -= H(i, j) * y[j];
    if (rhs % H(i, k) != 0) return std::nullopt;
    y[k] = rhs / H(i, k);
    ++k;
  }
  if (H * y != b) return std::nullopt;
  return hnf.U * y;
}

bool in_lattice(const IntMat& L, const IntVec& v) { return solve_integer(L, v).has_value(); }

std::optional<RatVec> solve_rational(const IntMat& A, const IntVec& b) {
  if (A.rows() != b.size()) throw DimensionError("solve_rational: dimension mismatch");
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<RatVec> M(m, RatVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A(i, j));
    M[i][n] = Rat(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rat inv = 1 / M[r][c];
    for (std::size_t j = c; j <= n; ++j) M[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rat f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = M[i][n];
  return x;
}

std::vector<IntVec> lattice_basis(std::size_t n, const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return {};
  HermiteResult hnf = hermite_normal_form(IntMat::from_columns(n, vectors));
  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < hnf.H.cols(); ++j) {
    IntVec c = hnf.H.column(j);
    if (!is_zero(c)) basis.push_back(std::move(c));
  }
  return basis;
}

std::vector<IntVec> saturated_basis(std::size_t n, const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return {};
  SmithResult snf = smith_normal_form(IntMat::from_columns(n, vectors));
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < snf.rank; ++j) cols.push_back(snf.U_inverse.column(j));
  return lattice_basis(n, cols);
}

std::vector<IntVec> integer_kernel(const IntMat& A) {
  SmithResult snf = smith_normal_form(A);
  std::vector<IntVec> cols;
  for (std::size_t j = snf.rank; j < A.cols(); ++j) cols.push_back(snf.V.column(j));
  return lattice_basis(A.cols(), cols);
}

// ---------------------------------------------------------------- quotient

QuotientLattice::QuotientLattice(std::size_t n, const std::vector<IntVec>& sublattice)
    : n_(n), hermite_(saturated_basis(n, sublattice)) {
  for (const IntVec& h : hermite_) {
    std::size_t p = 0;
    while (h[p] == 0) ++p;
    pivots_.push_back(p);
  }
  if (hermite_.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e = zero_vec(n);
      e[i] = 1;
      annihilator_.push_back(std::move(e));
    }
  } else {
    annihilator_ = integer_kernel(IntMat::from_rows(n, hermite_));
  }
  annihilator_rows_ = IntMat::from_rows(n, annihilator_);
}

IntVec QuotientLattice::image(const IntVec& v) const { return annihilator_rows_ * v; }

IntVec QuotientLattice::reduce(const IntVec& v) const {
  IntVec r = v;
  for (std::size_t j = 0; j < hermite_.size(); ++j) {
    const std::size_t p = pivots_[j];
    Int q = floor_div(r[p], hermite_[j][p]);
    if (q != 0) r = sub(r, scaled(hermite_[j], q));
  }
  return r;
}

IntVec QuotientLattice::primitive_representative(const IntVec& v) const {
  IntVec c = image(v);
  Content ct = content_primitive(c);
  if (ct.gcd == 0) throw Error("primitive_representative: vector lies in the sublattice");
  if (ct.gcd == 1) return reduce(v);
  auto lifted = solve_integer(annihilator_rows_, ct.primitive);
  if (!lifted) throw Error("primitive_representative: quotient map not surjective");
  return reduce(*lifted);
}

}  // namespace motzeta
