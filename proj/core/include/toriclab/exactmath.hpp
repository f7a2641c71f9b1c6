#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toriclab {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over Integer or Rational.
template <typename T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<T>> &rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = rows[r][c];
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>> &columns,
                             std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r)
        m(r, c) = columns[c][r];
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_,
                          data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      v[r] = (*this)(r, c);
    return v;
  }
  std::vector<std::vector<T>> row_list() const {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_; ++r)
      out.push_back(row(r));
    return out;
  }
  std::vector<std::vector<T>> column_list() const {
    std::vector<std::vector<T>> out;
    for (std::size_t c = 0; c < cols_; ++c)
      out.push_back(column(c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix &o) const {
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T &a = (*this)(r, k);
        if (a == 0)
          continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          p(r, c) += a * o(k, c);
      }
    return p;
  }
  std::vector<T> operator*(const std::vector<T> &v) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out[r] += (*this)(r, c) * v[c];
    return out;
  }

  bool operator==(const Matrix &o) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---- vectors -------------------------------------------------------------

Integer content(const IntVector &v);
bool is_zero(const IntVector &v);
bool is_zero(const RatVector &v);

/// v / gcd(v). Throws on the zero vector.
IntVector primitive(const IntVector &v);
/// Smallest positive integer multiple of v with coprime entries.
IntVector primitive(const RatVector &v);

Integer dot(const IntVector &a, const IntVector &b);
Rational dot(const RatVector &a, const RatVector &b);
Rational dot(const IntVector &a, const RatVector &b);

RatVector to_rational(const IntVector &v);
RatMatrix to_rational(const IntMatrix &m);
/// Exact conversion; throws if some entry is not an integer.
IntVector to_integer(const RatVector &v);
bool is_integral(const RatVector &v);

IntVector add(const IntVector &a, const IntVector &b);
IntVector scale(const IntVector &a, const Integer &s);
RatVector add(const RatVector &a, const RatVector &b);
RatVector scale(const RatVector &a, const Rational &s);

/// True iff b = c·a for some c > 0 (both nonzero).
bool positively_proportional(const RatVector &a, const RatVector &b);

Integer binomial(unsigned long n, unsigned long k);
Integer ceil(const Rational &q);
Integer floor(const Rational &q);

/// "p/q" reduced, or "p" when integral.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);
Rational parse_rational(const std::string &s);

// ---- matrices ------------------------------------------------------------

std::size_t rank(const RatMatrix &a);
std::size_t rank(const IntMatrix &a);
Integer determinant(const IntMatrix &a);
Rational determinant(const RatMatrix &a);
std::optional<RatMatrix> inverse(const RatMatrix &a);

/// Row Hermite normal form of the lattice spanned by the rows; zero rows
/// are dropped.
IntMatrix hermite_rows(const IntMatrix &a);

/// Columns form a lattice basis of {x in Z^cols : A x = 0}, in Hermite
/// normal form (so the basis only depends on the kernel lattice).
IntMatrix hermite_kernel(const IntMatrix &a);

/// Unique solution of A x = b; nullopt when inconsistent; throws
/// std::domain_error("non-unique solution") when consistent but
/// underdetermined.
std::optional<RatVector> rat_solve(const RatMatrix &a, const RatVector &b);

/// Invariant factors d_1 | d_2 | ... (nonzero ones only).
std::vector<Integer> smith_diagonal(const IntMatrix &a);

/// For W with columns spanning a rank-r sublattice of Z^n: an
/// (n−r)×n integer matrix Q, surjective onto Z^{n−r}, whose kernel is the
/// saturation span(W) ∩ Z^n.
IntMatrix quotient_map(const IntMatrix &w);

/// Columns form a lattice basis of span(W) ∩ Z^n.
IntMatrix saturation_basis(const IntMatrix &w);

// ---- linear programming --------------------------------------------------

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVector point;
};

/// max c·x subject to A x ≥ b, by enumerating every basis of rank(A) rows.
/// Requires rank(A) = number of columns (pointed feasible region).
LpResult lp_maximize(const RatMatrix &a, const RatVector &b,
                     const RatVector &c);

/// A point with A x ≥ b (x free), or nullopt if none exists. Phase-one
/// simplex with Bland's rule, so it scales to many variables.
std::optional<RatVector> feasible_point(const RatMatrix &a, const RatVector &b);

} // namespace toriclab
