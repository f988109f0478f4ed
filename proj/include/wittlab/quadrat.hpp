#pragma once

#include <string>
#include <vector>

#include "wittlab/errors.hpp"
#include "wittlab/numeric.hpp"

namespace wittlab {

/*
 * Scalars in Q or in Q(sqrt(d)) for one fixed non-square integer d:
 * values a + b*sqrt(d) with rational a, b.  A value with b = 0 carries
 * radicand 0 and mixes freely; two irrational values must agree on d.
 */
class QuadRat {
 public:
  QuadRat() : a_(0), b_(0), d_(0) {}
  QuadRat(const Rat& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  QuadRat(long a) : a_(a), b_(0), d_(0) {}                            // NOLINT(google-explicit-constructor)

  QuadRat(const Rat& a, const Rat& b, long d) : a_(a), b_(b), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) {
      d_ = 0;
    } else if (d_ == 0) {
      throw ValidationError("irrational part with no radicand");
    }
  }

  const Rat& rational() const { return a_; }
  const Rat& radical_coeff() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadRat operator+(const QuadRat& o) const {
    long d = merged_radicand(o);
    return QuadRat(a_ + o.a_, b_ + o.b_, (b_ + o.b_ == 0) ? 0 : d);
  }
  QuadRat operator-(const QuadRat& o) const {
    long d = merged_radicand(o);
    return QuadRat(a_ - o.a_, b_ - o.b_, (b_ - o.b_ == 0) ? 0 : d);
  }
  QuadRat operator-() const { return QuadRat(-a_, -b_, d_); }
  QuadRat operator*(const QuadRat& o) const {
    long d = merged_radicand(o);
    Rat ra = a_ * o.a_ + Rat(d) * b_ * o.b_;
    Rat rb = a_ * o.b_ + b_ * o.a_;
    return QuadRat(ra, rb, rb == 0 ? 0 : d);
  }

  bool operator==(const QuadRat& o) const {
    return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_);
  }
  bool operator!=(const QuadRat& o) const { return !(*this == o); }

  // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - d b^2); the norm cannot
  // vanish for nonzero values since d is a non-square.
  QuadRat inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rat norm = a_ * a_ - Rat(d_) * b_ * b_;
    if (norm == 0) throw std::domain_error("radicand is a perfect square; not a field");
    Rat inv = 1 / norm;
    return QuadRat(a_ * inv, -b_ * inv, b_ == 0 ? 0 : d_);
  }

  std::string str() const {
    if (is_rational()) return a_.get_str();
    std::string s = b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return s;
    return a_.get_str() + (b_ > 0 ? "+" : "") + s;
  }

 private:
  long merged_radicand(const QuadRat& o) const {
    if (b_ == 0) return o.d_;
    if (o.b_ == 0) return d_;
    if (d_ != o.d_) {
      throw ValidationError("mixing radicands sqrt(" + std::to_string(d_) + ") and sqrt(" +
                            std::to_string(o.d_) + ")");
    }
    return d_;
  }

  Rat a_, b_;
  long d_;
};

// Dense matrix over QuadRat, just big enough for this library: exact
// Gaussian elimination, determinants and linear solves.
class QuadRatMatrix {
 public:
  QuadRatMatrix() : rows_(0), cols_(0) {}
  QuadRatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static QuadRatMatrix identity(int n) {
    QuadRatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = QuadRat(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const QuadRat& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }
  QuadRat& at(int i, int j) {
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  QuadRatMatrix multiply(const QuadRatMatrix& o) const;
  QuadRatMatrix transpose() const;
  QuadRat determinant() const;  // square only

  // Solve A x = rhs; empty result if A is singular.
  std::vector<QuadRat> solve(const std::vector<QuadRat>& rhs) const;

  bool operator==(const QuadRatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_, cols_;
  std::vector<QuadRat> data_;
};

}  // namespace wittlab
