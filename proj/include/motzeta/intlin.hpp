#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace motzeta {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec make_vec(std::initializer_list<long> entries);
IntVec zero_vec(std::size_t n);
bool is_zero(const IntVec& v);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, const Int& c);
IntVec negated(const IntVec& v);
std::string to_string(const IntVec& v);

/// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major);

  static IntMat identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMat from_columns(std::size_t rows, const std::vector<IntVec>& columns);
  static IntMat from_rows(std::size_t cols, const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  std::vector<IntVec> columns() const;
  IntMat transposed() const;

  IntMat operator*(const IntMat& other) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMat& other) const = default;

  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

struct Content {
  Int gcd;
  IntVec primitive;
};

/// gcd of the entries and the primitive vector in the same direction.
Content content_primitive(const IntVec& v);
IntVec primitive(const IntVec& v);

struct HermiteResult {
  IntMat H;
  IntMat U;
};

/// Column-style Hermite normal form: H = A*U with U unimodular, H in lower
/// column echelon form, pivots positive, entries left of a pivot reduced
/// into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& A);

struct SmithResult {
  IntMat S;
  IntMat U;
  IntMat V;
  IntMat U_inverse;
  std::size_t rank = 0;
};

/// S = U*A*V diagonal with nonnegative entries d_1 | d_2 | ... .
SmithResult smith_normal_form(const IntMat& A);

/// Order of the torsion subgroup of Z^rows / colspan(A).
Int torsion_order(const IntMat& A);

std::size_t rank(const IntMat& A);
Int determinant(const IntMat& A);

bool in_lattice(const IntMat& L, const IntVec& v);
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);
std::optional<RatVec> solve_rational(const IntMat& A, const IntVec& b);

/// Canonical (Hermite) basis of span_Q(columns) ∩ Z^n, as a list of vectors.
std::vector<IntVec> saturated_basis(std::size_t n, const std::vector<IntVec>& vectors);
/// Canonical basis of {x in Z^cols : A x = 0}.
std::vector<IntVec> integer_kernel(const IntMat& A);
/// Canonical Hermite basis of the lattice generated by the vectors.
std::vector<IntVec> lattice_basis(std::size_t n, const std::vector<IntVec>& vectors);

/// A saturated sublattice E of Z^n together with the operations needed to
/// work in the quotient Z^n / E: canonical coset representatives and
/// primitivity of images.
class QuotientLattice {
 public:
  QuotientLattice(std::size_t n, const std::vector<IntVec>& sublattice);

  std::size_t ambient() const { return n_; }
  const std::vector<IntVec>& basis() const { return hermite_; }
  /// Coordinates of the image of v in Z^n/E ≅ Z^{n-k}.
  IntVec image(const IntVec& v) const;
  /// Canonical representative of v + E.
  IntVec reduce(const IntVec& v) const;
  /// Canonical representative of the primitive element of Z^n/E on the ray
  /// through the image of v; v must not lie in E.
  IntVec primitive_representative(const IntVec& v) const;

 private:
  std::size_t n_;
  std::vector<IntVec> hermite_;
  std::vector<std::size_t> pivots_;
  std::vector<IntVec> annihilator_;
  IntMat annihilator_rows_;
};

Int floor_div(const Int& a, const Int& b);

}  // namespace motzeta
