#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "radonlink/rational.hpp"

namespace radonlink {

/// Fixed-length vector of exact rationals.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t length) : entries_(length) {}
  explicit Vec(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vec(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_zero() const;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<Rational> entries_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& k, const Vec& a);
Rational dot(const Vec& a, const Vec& b);

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// Throws DimensionError on ragged input.
  static Mat from_rows(const std::vector<std::vector<Rational>>& rows);
  static Mat identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;

  /// Matrix made of the given columns, in the given order.
  Mat select_columns(std::span<const std::size_t> columns) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Vec operator*(const Mat& m, const Vec& x);
Mat operator*(const Mat& a, const Mat& b);

/// Reduced row-echelon form. Pivots are chosen as the first nonzero entry
/// at or below the current row, scanning columns left to right.
struct RowEchelon {
  Mat reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Mat m);

std::size_t rank(const Mat& m);

/// Exact determinant by Gaussian elimination. Throws DimensionError unless
/// `m` is square. The 0×0 determinant is 1.
Rational determinant(const Mat& m);

/// Basis of {x : m·x = 0}. One vector per free column of the reduced
/// row-echelon form, in ascending column order; the free coordinate is 1
/// and the other free coordinates are 0.
std::vector<Vec> null_space_basis(const Mat& m);

/// Unique solution of m·x = b, or nullopt when m is singular.
std::optional<Vec> solve_square(const Mat& m, const Vec& b);

/// Outcome of an arbitrary (possibly non-square) system m·x = b.
struct LinearSolution {
  enum class Kind { unique, inconsistent, underdetermined };
  Kind kind = Kind::inconsistent;
  /// The solution for `unique`; a particular solution for `underdetermined`.
  Vec value;
};

LinearSolution solve_linear(const Mat& m, const Vec& b);

}  // namespace radonlink
