#ifndef PGD_ERRORS_HPP
#define PGD_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgd {

// Base class for every failure this library reports.  Specific subclasses
// carry witness data (indices, offending values) both as fields and baked
// into the what() message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IntegerOverflow : Error {
  using Error::Error;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : Error(msg), line(line) {}
  std::size_t line;  // 1-based line number when known, 0 otherwise
};

// Malformed mathematical input: empty blocks, non-prime modulus, dependent
// generator rows, ...
struct BadInput : Error {
  using Error::Error;
};

// Matrix entries outside the allowed alphabet (e.g. a would-be adjacency
// matrix with entries other than 0/1 or a nonzero diagonal).
struct BadEntries : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  NotSymmetric(std::size_t i, std::size_t j, const std::string& msg)
      : Error(msg), row(i), col(j) {}
  std::size_t row, col;
};

struct NotTactical : Error {
  NotTactical(const std::string& msg, bool row_fault, std::size_t index)
      : Error(msg), row_fault(row_fault), index(index) {}
  bool row_fault;     // true: offending row, false: offending column
  std::size_t index;  // first offending row/column
};

struct NonIntegerBeta : Error {
  using Error::Error;
};

struct NotPartialGeometric : Error {
  NotPartialGeometric(const std::string& msg, std::size_t point,
                      std::size_t block, std::int64_t found,
                      std::int64_t expected)
      : Error(msg), point(point), block(block), found(found),
        expected(expected) {}
  std::size_t point, block;  // witness cell of N N^T N
  std::int64_t found, expected;
};

struct BadAdjacency : Error {
  using Error::Error;
};

struct NotAScheme : Error {
  NotAScheme(const std::string& msg, int axiom, std::size_t x = 0,
             std::size_t y = 0)
      : Error(msg), axiom(axiom), x(x), y(y) {}
  int axiom;            // 1: identity/partition, 2: symmetry, 3: constancy
  std::size_t x, y;     // witness cell
};

struct SizeCap : Error {
  using Error::Error;
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct UncoveredDistance : Error {
  UncoveredDistance(const std::string& msg, std::size_t distance)
      : Error(msg), distance(distance) {}
  std::size_t distance;
};

struct EmptyVertexSet : Error {
  using Error::Error;
};

struct NonIntegerEigenvalues : Error {
  using Error::Error;
};

struct RepeatedEigenvaluesUnresolved : Error {
  using Error::Error;
};

}  // namespace pgd

#endif  // PGD_ERRORS_HPP
