#include "toriclab/exactmath.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace toriclab {

Integer content(const IntVector &v) {
  Integer g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  return g;
}

bool is_zero(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
}

bool is_zero(const RatVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x == 0; });
}

IntVector primitive(const IntVector &v) {
  Integer g = content(v);
  if (g == 0)
    throw std::invalid_argument("zero has no primitive representative");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] / g;
  return out;
}

IntVector primitive(const RatVector &v) {
  Integer l = 1;
  for (const auto &x : v)
    l = lcm(l, Integer(x.get_den()));
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    scaled[i] = Integer(v[i].get_num()) * (l / Integer(v[i].get_den()));
  return primitive(scaled);
}

Integer dot(const IntVector &a, const IntVector &b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector &a, const RatVector &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector &a, const RatVector &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += Rational(a[i]) * b[i];
  return s;
}

RatVector to_rational(const IntVector &v) {
  return RatVector(v.begin(), v.end());
}

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j);
  return r;
}

bool is_integral(const RatVector &v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational &x) { return x.get_den() == 1; });
}

IntVector to_integer(const RatVector &v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1)
      throw std::domain_error("vector is not integral");
    out[i] = v[i].get_num();
  }
  return out;
}

IntVector add(const IntVector &a, const IntVector &b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

IntVector scale(const IntVector &a, const Integer &s) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * s;
  return out;
}

RatVector add(const RatVector &a, const RatVector &b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

RatVector scale(const RatVector &a, const Rational &s) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * s;
  return out;
}

bool positively_proportional(const RatVector &a, const RatVector &b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b))
    return false;
  return primitive(a) == primitive(b);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer floor(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational &q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Rational &q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}
std::string to_string(const Integer &z) { return z.get_str(); }

Rational parse_rational(const std::string &s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  q.canonicalize();
  return q;
}

// ---- elimination ---------------------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::swap(m(i, a), m(i, b));
}

// row a -= q * row b
void row_axpy(IntMatrix &m, std::size_t a, std::size_t b, const Integer &q) {
  if (q == 0)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(a, j) -= q * m(b, j);
}

void col_axpy(IntMatrix &m, std::size_t a, std::size_t b, const Integer &q) {
  if (q == 0)
    return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, a) -= q * m(i, b);
}

// Row echelon (Hermite) form by unimodular row operations applied to the
// full matrix, pivoting only on the first `pivot_cols` columns. Returns
// the rank within those columns.
std::size_t hermite_in_place(IntMatrix &m, std::size_t pivot_cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    // Euclid on column c among rows r.. until one nonzero remains.
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 &&
            (best == m.rows() || abs(m(i, c)) < abs(m(best, c))))
          best = i;
      if (best == m.rows())
        break;
      swap_rows(m, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        row_axpy(m, i, r, q);
        if (m(i, c) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (m(r, c) == 0)
      continue;
    if (m(r, c) < 0)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      row_axpy(m, i, r, q);
    }
    ++r;
  }
  return r;
}

} // namespace

std::size_t rank(const RatMatrix &a) {
  RatMatrix m = a;
  return rref(m).size();
}

std::size_t rank(const IntMatrix &a) { return rank(to_rational(a)); }

Rational determinant(const RatMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix m = a;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0)
        continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix &a) {
  // Bareiss fraction-free elimination.
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

IntMatrix hermite_rows(const IntMatrix &a) {
  IntMatrix m = a;
  std::size_t r = hermite_in_place(m, m.cols());
  IntMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j);
  return out;
}

IntMatrix hermite_kernel(const IntMatrix &a) {
  // Row-reduce [A^T | I]: rows whose A^T part vanishes carry kernel vectors.
  const std::size_t n = a.cols(), m = a.rows();
  IntMatrix aug(n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      aug(i, j) = a(j, i);
    aug(i, m + i) = 1;
  }
  std::size_t r = hermite_in_place(aug, m);
  IntMatrix basis(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis(i - r, j) = aug(i, m + j);
  return hermite_rows(basis).transpose();
}

std::optional<RatVector> rat_solve(const RatMatrix &a, const RatVector &b) {
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n)
    return std::nullopt;
  if (pivots.size() < n)
    throw std::domain_error("non-unique solution");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug(i, n);
  return x;
}

std::vector<Integer> smith_diagonal(const IntMatrix &a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block goes to (t,t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 &&
              (bi == rows || abs(m(i, j)) < abs(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows)
        goto done;
      swap_rows(m, t, bi);
      swap_cols(m, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        row_axpy(m, i, t, q);
        if (m(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        col_axpy(m, j, t, q);
        if (m(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Divisibility: fold an offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            row_axpy(m, t, i, -1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    diag.push_back(abs(m(t, t)));
  }
done:
  return diag;
}

IntMatrix quotient_map(const IntMatrix &w) {
  const std::size_t n = w.rows(), k = w.cols();
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      aug(i, j) = w(i, j);
    aug(i, k + i) = 1;
  }
  std::size_t r = hermite_in_place(aug, k);
  IntMatrix q(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q(i - r, j) = aug(i, k + j);
  return q;
}

IntMatrix saturation_basis(const IntMatrix &w) {
  const std::size_t n = w.rows(), k = w.cols();
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      aug(i, j) = w(i, j);
    aug(i, k + i) = 1;
  }
  std::size_t r = hermite_in_place(aug, k);
  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      u(i, j) = aug(i, k + j);
  // U W = [H; 0]; the first r columns of U^{-1} span the saturation.
  RatMatrix uinv = *inverse(to_rational(u));
  IntMatrix basis(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      basis(i, j) = uinv(i, j).get_num();
  return basis;
}

// ---- LP -----------------------------------------------------------------

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t> &)> &f) {
  if (k > n)
    return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

// Best basic feasible solution; status infeasible when none exists.
LpResult best_vertex(const RatMatrix &a, const RatVector &b, const RatVector &c) {
  const std::size_t d = a.cols();
  LpResult best;
  for_each_subset(a.rows(), d, [&](const std::vector<std::size_t> &rows) {
    RatMatrix sub(d, d);
    RatVector rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j)
        sub(i, j) = a(rows[i], j);
      rhs[i] = b[rows[i]];
    }
    auto inv = inverse(sub);
    if (!inv)
      return;
    RatVector x = (*inv) * rhs;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < d; ++j)
        lhs += a(i, j) * x[j];
      if (lhs < b[i])
        return;
    }
    Rational v = dot(c, x);
    if (best.status == LpStatus::infeasible || v > best.value ||
        (v == best.value && x < best.point)) {
      best.status = LpStatus::optimal;
      best.value = v;
      best.point = x;
    }
  });
  return best;
}

} // namespace

LpResult lp_maximize(const RatMatrix &a, const RatVector &b, const RatVector &c) {
  const std::size_t d = a.cols();
  if (rank(a) != d)
    throw std::invalid_argument("lp_maximize needs a pointed feasible region");
  LpResult best = best_vertex(a, b, c);
  if (best.status != LpStatus::optimal)
    return best;
  // Unbounded iff some recession direction r (A r ≥ 0) has c·r > 0.
  RatMatrix rec(a.rows() + 1, d);
  RatVector rb(a.rows() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      rec(i, j) = a(i, j);
  for (std::size_t j = 0; j < d; ++j)
    rec(a.rows(), j) = -c[j];
  rb[a.rows()] = -1;
  LpResult ray = best_vertex(rec, rb, c);
  if (ray.status == LpStatus::optimal && ray.value > 0) {
    best.status = LpStatus::unbounded;
    best.point.clear();
  }
  return best;
}

std::optional<RatVector> feasible_point(const RatMatrix &a, const RatVector &b) {
  // Columns: x⁺ (d), x⁻ (d), surplus (m), artificial (m); A x⁺ − A x⁻ − s + t = b.
  const std::size_t m = a.rows(), d = a.cols(), cols = 2 * d + 2 * m;
  std::vector<RatVector> t(m, RatVector(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < d; ++j) {
      t[i][j] = sign * a(i, j);
      t[i][d + j] = -sign * a(i, j);
    }
    t[i][2 * d + i] = -sign;
    t[i][2 * d + m + i] = 1;
    t[i][cols] = sign * b[i];
    basis[i] = 2 * d + m + i;
  }
  // reduced costs of min Σ t_i
  RatVector cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j)
    if (j < 2 * d + m || j == cols)
      for (std::size_t i = 0; i < m; ++i)
        cost[j] -= t[i][j];
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols)
      break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0)
        continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m)
      break; // cannot happen: the phase-one objective is bounded below
    const Rational pivot = t[leave][enter];
    for (auto &x : t[leave])
      x /= pivot;
    auto eliminate = [&](RatVector &row) {
      const Rational f = row[enter];
      if (f == 0)
        return;
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0)
          row[j] -= f * t[leave][j];
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != leave)
        eliminate(t[i]);
    eliminate(cost);
    basis[leave] = enter;
  }
  if (cost[cols] != 0)
    return std::nullopt;
  RatVector x(d);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < d)
      x[basis[i]] += t[i][cols];
    else if (basis[i] < 2 * d)
      x[basis[i] - d] -= t[i][cols];
  }
  return x;
}

} // namespace toriclab
