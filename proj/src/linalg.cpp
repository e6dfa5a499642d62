#include "radonlink/linalg.hpp"

#include <algorithm>
#include <string>

#include "radonlink/errors.hpp"

namespace radonlink {

namespace {

void require_same_length(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_length(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_length(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rational& k, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  require_same_length(a, b);
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Mat Mat::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Mat();
  const std::size_t cols = rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vec Mat::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

Mat Mat::select_columns(std::span<const std::size_t> columns) const {
  Mat out(rows_, columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] >= cols_) throw DimensionError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, columns[k]);
  }
  return out;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Vec operator*(const Mat& m, const Vec& x) {
  if (m.cols() != x.size()) {
    throw DimensionError("matrix has " + std::to_string(m.cols()) + " columns, vector has length " +
                         std::to_string(x.size()));
  }
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) sum += m(r, c) * x[c];
    out[r] = sum;
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

RowEchelon row_reduce(Mat m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);

    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return row_reduce(m).pivot_columns.size(); }

Rational determinant(const Mat& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
  }
  Mat a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      a.swap_rows(pivot, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::vector<Vec> null_space_basis(const Mat& m) {
  const RowEchelon ech = row_reduce(m);
  const auto& pivots = ech.pivot_columns;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec w(m.cols());
    w[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(w));
  }
  return basis;
}

std::optional<Vec> solve_square(const Mat& m, const Vec& b) {
  if (!m.is_square()) throw DimensionError("solve_square needs a square matrix");
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  LinearSolution s = solve_linear(m, b);
  if (s.kind != LinearSolution::Kind::unique) return std::nullopt;
  return std::move(s.value);
}

LinearSolution solve_linear(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  Mat augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  const RowEchelon ech = row_reduce(std::move(augmented));

  LinearSolution out;
  const auto& pivots = ech.pivot_columns;
  if (!pivots.empty() && pivots.back() == m.cols()) {
    out.kind = LinearSolution::Kind::inconsistent;
    return out;
  }
  out.value = Vec(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.value[pivots[r]] = ech.reduced(r, m.cols());
  out.kind = pivots.size() == m.cols() ? LinearSolution::Kind::unique : LinearSolution::Kind::underdetermined;
  return out;
}

}  // namespace radonlink
