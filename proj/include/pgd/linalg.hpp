#ifndef PGD_LINALG_HPP
#define PGD_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pgd/errors.hpp"

namespace pgd {

// Checked int64 arithmetic.  Throws IntegerOverflow instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Dense row-major matrix of int64.  All operations are pure: they validate,
// allocate a fresh result and never mutate their arguments.  Treat values as
// immutable once built; mutable access exists only so constructions
// (adjacency matrices, incidence matrices) can be filled in.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> a);

  static IntMatrix identity(std::size_t n);
  static IntMatrix constant(std::size_t rows, std::size_t cols,
                            std::int64_t value);
  static IntMatrix ones(std::size_t rows, std::size_t cols) {
    return constant(rows, cols, 1);
  }
  static IntMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }

  const std::vector<std::int64_t>& data() const { return a_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

// base^exp with overflow checking; exp must be nonnegative.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix subtract(const IntMatrix& a, const IntMatrix& b);
IntMatrix scale(std::int64_t c, const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
// Kronecker product; block (i,j) of the result is a(i,j) * b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

std::int64_t max_abs(const IntMatrix& a);
std::vector<std::int64_t> row_sums(const IntMatrix& a);
std::vector<std::int64_t> col_sums(const IntMatrix& a);
bool is_zero_one(const IntMatrix& a);
bool is_symmetric(const IntMatrix& a);
bool has_zero_diagonal(const IntMatrix& a);

// Text format: a header line "rows cols" followed by `rows` lines of `cols`
// base-10 entries.  The writer emits single spaces and a trailing newline;
// the reader accepts any horizontal whitespace, so write -> read -> write is
// byte-identical.
void write_matrix(std::ostream& out, const IntMatrix& m);
IntMatrix read_matrix(std::istream& in);
std::string matrix_to_string(const IntMatrix& m);
IntMatrix matrix_from_string(const std::string& text);
void save_matrix(const std::string& path, const IntMatrix& m);
IntMatrix load_matrix(const std::string& path);

}  // namespace pgd

#endif  // PGD_LINALG_HPP
