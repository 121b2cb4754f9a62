#ifndef PGD_RATIONAL_HPP
#define PGD_RATIONAL_HPP

// Exact rational arithmetic over 128-bit integers.  Internal utility for the
// eigenstructure computations; not part of the library's public surface.

#include <cstdint>
#include <string>
#include <vector>

#include "pgd/errors.hpp"

namespace pgd::detail {

using int128 = __int128;

int128 checked_add128(int128 a, int128 b);
int128 checked_mul128(int128 a, int128 b);
int128 gcd128(int128 a, int128 b);  // nonnegative
std::string to_string128(int128 v);

// Always normalized: den > 0, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(int128 num, int128 den);

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  // Requires is_integer() and a value that fits; throws IntegerOverflow.
  std::int64_t as_int64() const;
  std::string str() const;

  bool operator==(const Rational&) const = default;

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);

// Dense rational matrix, row-major.  Just enough exact linear algebra for
// eigenspace splitting: reduced row echelon form, nullspace, inverse.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix rat_multiply(const RationalMatrix& a, const RationalMatrix& b);

// Basis of the right nullspace, one basis vector per column, in the
// deterministic standard form produced by RREF (free variable set to 1).
RationalMatrix rat_nullspace(const RationalMatrix& a);

// Inverse of a square matrix; throws Error if singular.
RationalMatrix rat_inverse(const RationalMatrix& a);

}  // namespace pgd::detail

#endif  // PGD_RATIONAL_HPP
