#include "pgd/linalg.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pgd {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw IntegerOverflow(std::string("int64 overflow in ") + op);
}

std::string dims(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw BadInput("negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<std::int64_t> a)
    : rows_(rows), cols_(cols), a_(std::move(a)) {
  if (a_.size() != rows_ * cols_)
    throw DimensionMismatch("entry vector of size " +
                            std::to_string(a_.size()) + " for a " +
                            std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::constant(std::size_t rows, std::size_t cols,
                              std::int64_t value) {
  return IntMatrix(rows, cols, std::vector<std::int64_t>(rows * cols, value));
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw DimensionMismatch("row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(c));
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("cannot add " + dims(a) + " and " + dims(b));
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = checked_add(a(i, j), b(i, j));
  return r;
}

IntMatrix subtract(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("cannot subtract " + dims(b) + " from " + dims(a));
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = checked_sub(a(i, j), b(i, j));
  return r;
}

IntMatrix scale(std::int64_t c, const IntMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = checked_mul(c, a(i, j));
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("cannot multiply " + dims(a) + " by " + dims(b));
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  IntMatrix r(n, m);
  if (n == 0 || k == 0 || m == 0) return r;

  // If k * max|a| * max|b| fits in int64, no dot product can overflow and
  // the accumulating kernel below is safe without per-step checks.
  const __int128 bound = static_cast<__int128>(k) *
                         static_cast<__int128>(max_abs(a)) *
                         static_cast<__int128>(max_abs(b));
  const bool fast = bound <= std::numeric_limits<std::int64_t>::max();

  const std::int64_t* pa = a.data().data();
  const std::int64_t* pb = b.data().data();
  if (fast) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t* pr = &r(i, 0);
      for (std::size_t kk = 0; kk < k; ++kk) {
        const std::int64_t aik = pa[i * k + kk];
        if (aik == 0) continue;
        const std::int64_t* pbr = pb + kk * m;
        for (std::size_t j = 0; j < m; ++j) pr[j] += aik * pbr[j];
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t* pr = &r(i, 0);
      for (std::size_t kk = 0; kk < k; ++kk) {
        const std::int64_t aik = pa[i * k + kk];
        if (aik == 0) continue;
        const std::int64_t* pbr = pb + kk * m;
        for (std::size_t j = 0; j < m; ++j)
          pr[j] = checked_add(pr[j], checked_mul(aik, pbr[j]));
      }
    }
  }
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::int64_t aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = checked_mul(aij, b(k, l));
    }
  return r;
}

std::int64_t max_abs(const IntMatrix& a) {
  std::int64_t m = 0;
  for (std::int64_t v : a.data()) {
    if (v == std::numeric_limits<std::int64_t>::min())
      overflow("absolute value");
    const std::int64_t av = v < 0 ? -v : v;
    if (av > m) m = av;
  }
  return m;
}

std::vector<std::int64_t> row_sums(const IntMatrix& a) {
  std::vector<std::int64_t> s(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s[i] = checked_add(s[i], a(i, j));
  return s;
}

std::vector<std::int64_t> col_sums(const IntMatrix& a) {
  std::vector<std::int64_t> s(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s[j] = checked_add(s[j], a(i, j));
  return s;
}

bool is_zero_one(const IntMatrix& a) {
  for (std::int64_t v : a.data())
    if (v != 0 && v != 1) return false;
  return true;
}

bool is_symmetric(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool has_zero_diagonal(const IntMatrix& a) {
  const std::size_t n = a.rows() < a.cols() ? a.rows() : a.cols();
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i) != 0) return false;
  return true;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

namespace {

// Strict line-oriented parser so errors can cite a line number.
constexpr std::size_t kMaxEntries = 100000000;

std::vector<std::int64_t> parse_ints(const std::string& line,
                                     std::size_t lineno) {
  std::vector<std::int64_t> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0)
      throw ParseError("integer out of range: '" + tok + "'", lineno);
    if (end == tok.c_str() || *end != '\0')
      throw ParseError("not an integer: '" + tok + "'", lineno);
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  // header
  std::vector<std::int64_t> header;
  while (std::getline(in, line)) {
    ++lineno;
    header = parse_ints(line, lineno);
    if (!header.empty()) break;
  }
  if (header.empty()) throw ParseError("missing matrix header", lineno);
  if (header.size() != 2)
    throw ParseError("matrix header must be 'rows cols'", lineno);
  if (header[0] < 0 || header[1] < 0)
    throw ParseError("negative matrix dimensions", lineno);
  const std::size_t rows = static_cast<std::size_t>(header[0]);
  const std::size_t cols = static_cast<std::size_t>(header[1]);
  if (cols != 0 && rows > kMaxEntries / cols)
    throw ParseError("matrix too large", lineno);

  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::int64_t> vals;
    while (std::getline(in, line)) {
      ++lineno;
      vals = parse_ints(line, lineno);
      if (!vals.empty() || cols == 0) break;
    }
    if (vals.size() != cols)
      throw ParseError("row " + std::to_string(i) + " has " +
                           std::to_string(vals.size()) + " entries, expected " +
                           std::to_string(cols),
                       lineno);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = vals[j];
  }
  return m;
}

std::string matrix_to_string(const IntMatrix& m) {
  std::ostringstream oss;
  write_matrix(oss, m);
  return oss.str();
}

IntMatrix matrix_from_string(const std::string& text) {
  std::istringstream iss(text);
  return read_matrix(iss);
}

void save_matrix(const std::string& path, const IntMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  write_matrix(out, m);
  out.flush();
  if (!out) throw Error("write failed: " + path);
}

IntMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  try {
    return read_matrix(in);
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line);
  }
}

}  // namespace pgd
