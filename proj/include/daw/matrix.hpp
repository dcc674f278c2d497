#pragma once

#include <cstddef>
#include <vector>

#include "daw/rational.hpp"

namespace daw {

// Dense exact-rational matrix. Dimensions stay tiny (n+4 <= 13), so no
// sparsity and no pivoting heuristics beyond "nonzero".
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Rat& s) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  // Throws std::domain_error if singular.
  Mat inverse() const;

  bool is_identity() const;

  // Row-major "p/q" entries: "[[1,0],[1/2,1]]".
  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Minimal positive integer kernel vector of an (n x n) integer matrix of
// corank one: the unique primitive all-positive generator, if it exists.
// Throws std::domain_error otherwise.
std::vector<long> minimal_positive_kernel(const std::vector<std::vector<long>>& m);

}  // namespace daw
