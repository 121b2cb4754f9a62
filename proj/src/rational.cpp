#include "pgd/rational.hpp"

#include <limits>

namespace pgd::detail {

int128 checked_add128(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw IntegerOverflow("int128 overflow in addition");
  return r;
}

int128 checked_mul128(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw IntegerOverflow("int128 overflow in multiplication");
  return r;
}

int128 gcd128(int128 a, int128 b) {
  unsigned __int128 x = a < 0 ? -static_cast<unsigned __int128>(a)
                              : static_cast<unsigned __int128>(a);
  unsigned __int128 y = b < 0 ? -static_cast<unsigned __int128>(b)
                              : static_cast<unsigned __int128>(b);
  while (y != 0) {
    unsigned __int128 t = x % y;
    x = y;
    y = t;
  }
  return static_cast<int128>(x);
}

std::string to_string128(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

Rational::Rational(int128 num, int128 den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const int128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::as_int64() const {
  if (den_ != 1) throw Error("rational " + str() + " is not an integer");
  if (num_ > std::numeric_limits<std::int64_t>::max() ||
      num_ < std::numeric_limits<std::int64_t>::min())
    throw IntegerOverflow("rational " + str() + " exceeds int64");
  return static_cast<std::int64_t>(num_);
}

std::string Rational::str() const {
  if (den_ == 1) return to_string128(num_);
  return to_string128(num_) + "/" + to_string128(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add128(checked_mul128(a.num(), b.den()),
                                 checked_mul128(b.num(), a.den())),
                  checked_mul128(a.den(), b.den()));
}

Rational operator-(const Rational& a, const Rational& b) {
  return a + Rational(-b.num(), b.den());
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul128(a.num(), b.num()),
                  checked_mul128(a.den(), b.den()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("rational division by zero");
  return Rational(checked_mul128(a.num(), b.den()),
                  checked_mul128(a.den(), b.num()));
}

Rational operator-(const Rational& a) { return Rational(-a.num(), a.den()); }

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix rat_multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("rational matrix product dimension mismatch");
  RationalMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) = r(i, j) + aik * b(k, j);
    }
  return r;
}

namespace {

// In-place RREF; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(row, j), m(piv, j));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix rat_nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(a.cols(), free_cols.size());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t f = free_cols[b];
    basis(f, b) = Rational(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis(pivots[p], b) = -m(p, f);
  }
  return basis;
}

RationalMatrix rat_inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rational(1);
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw Error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace pgd::detail
