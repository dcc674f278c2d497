#include "daw/matrix.hpp"

#include <stdexcept>

namespace daw {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: dimension mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: dimension mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Rat& s) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat: vector size");
  std::vector<Rat> r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat: not square");
  std::size_t n = rows_;
  Mat a(*this), inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("Mat: singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

std::string Mat::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += rat_str((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::vector<long> minimal_positive_kernel(
    const std::vector<std::vector<long>>& m) {
  std::size_t n = m.size();
  // Gauss-Jordan over Q; expect rank n-1 and a one-dimensional kernel.
  Mat b(n, n);
  std::size_t row;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = Rat(m[i][j]);
  std::vector<long> piv_of_row(n, -1);
  row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && b(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != row)
      for (std::size_t j = 0; j < n; ++j) std::swap(b(piv, j), b(row, j));
    Rat d = b(row, col);
    for (std::size_t j = 0; j < n; ++j) b(row, j) /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || b(i, col) == 0) continue;
      Rat f = b(i, col);
      for (std::size_t j = 0; j < n; ++j) b(i, j) -= f * b(row, j);
    }
    piv_of_row[row] = static_cast<long>(col);
    ++row;
  }
  if (row != n - 1) throw std::domain_error("kernel: corank is not one");

  // Free column = the one that is not a pivot.
  std::vector<bool> is_piv(n, false);
  for (std::size_t i = 0; i < row; ++i) is_piv[piv_of_row[i]] = true;
  std::size_t free_col = 0;
  while (free_col < n && is_piv[free_col]) ++free_col;

  std::vector<Rat> v(n, Rat(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < row; ++i)
    v[piv_of_row[i]] = -b(i, free_col);

  // Scale to the primitive integer vector.
  mpz_class lcm_den(1);
  for (const Rat& x : v) lcm_den = lcm(lcm_den, x.get_den());
  mpz_class gcd_num(0);
  std::vector<mpz_class> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat y = v[i] * Rat(lcm_den);
    y.canonicalize();
    w[i] = y.get_num();
    gcd_num = gcd(gcd_num, w[i]);
  }
  if (gcd_num == 0) throw std::domain_error("kernel: zero vector");
  std::vector<long> out(n);
  bool all_pos = true, all_neg = true;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class z = w[i] / gcd_num;
    if (z <= 0) all_pos = false;
    if (z >= 0) all_neg = false;
    out[i] = z.get_si();
  }
  if (all_neg)
    for (auto& x : out) x = -x;
  else if (!all_pos)
    throw std::domain_error("kernel: no positive generator");
  return out;
}

}  // namespace daw
