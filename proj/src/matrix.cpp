#include "derpair/matrix.hpp"

#include <algorithm>
#include <utility>

#include "derpair/errors.hpp"

namespace derpair {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix compose(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("compose: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Vec apply(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw ShapeError("apply: vector length mismatch");
  Vec out(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

namespace {

// Scales each row by the lcm of its denominators so elimination runs over Z.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      nonzero = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).denominator().get_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<mpz_class> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) row[c] = m(r, c).numerator() * (l / m(r, c).denominator());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto a = integer_rows(m);
  const std::size_t n_rows = a.size();
  const std::size_t n_cols = m.cols();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && sgn(a[p][c]) == 0) ++p;
    if (p == n_rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      const mpz_class factor = a[i][c];
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        t = piv * a[i][j];
        if (sgn(factor) != 0 && sgn(a[r][j]) != 0) t -= factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank(m); }

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    if (pivots != nullptr) pivots->push_back(c);
    ++r;
  }
  return a;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix a = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_hint(out.end(), i, v[i]);
  }
  return out;
}

bool Echelon::insert(SparseVec v) {
  while (!v.empty()) {
    const auto [pivot, lead] = *v.begin();
    auto it = rows_.find(pivot);
    if (it == rows_.end()) {
      const Scalar inv = lead.inverse();
      for (auto& [k, x] : v) x *= inv;
      rows_.emplace(pivot, std::move(v));
      return true;
    }
    const Scalar factor = lead;
    for (const auto& [k, x] : it->second) {
      auto pos = v.try_emplace(k).first;
      pos->second -= factor * x;
      if (pos->second.is_zero()) v.erase(pos);
    }
  }
  return false;
}

}  // namespace derpair
