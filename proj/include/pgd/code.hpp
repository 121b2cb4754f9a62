#ifndef PGD_CODE_HPP
#define PGD_CODE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgd/hamming.hpp"
#include "pgd/linalg.hpp"
#include "pgd/scheme.hpp"

namespace pgd {

// One codeword; entries are field elements 0..p-1.
using Word = std::vector<std::uint8_t>;

// Linear [n, k] code over the prime field GF(p).  The generator is stored
// with entries reduced to 0..p-1; its rows must be linearly independent
// (k = 0 is allowed: the zero code).
class LinearCode {
 public:
  LinearCode(std::int64_t p, std::size_t length, IntMatrix generator);

  std::int64_t modulus() const { return p_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return g_.rows(); }
  const IntMatrix& generator() const { return g_; }

  Word encode(const std::vector<std::uint8_t>& message) const;

 private:
  std::int64_t p_ = 0;
  std::size_t n_ = 0;
  IntMatrix g_;
};

std::int64_t weight(const Word& w);

// All p^k codewords, lexicographic in message order.  SizeCap if the count
// exceeds the cap.
std::vector<Word> codewords(const LinearCode& c,
                            std::int64_t cap = kDefaultSchemeCap);

// Count of codewords of each Hamming weight, indexed 0..n.
std::vector<std::int64_t> weight_distribution(
    const LinearCode& c, std::int64_t cap = kDefaultSchemeCap);

// Generator of the null space of G, computed by row reduction with leftmost
// pivots; rank n-k.
LinearCode dual(const LinearCode& c);

// Minimum nonzero weight of the dual code; nullopt (treated as infinite)
// when the dual is the zero code.
std::optional<std::int64_t> dual_distance(const LinearCode& c,
                                          std::int64_t cap = kDefaultSchemeCap);

// N x m array of runs over symbols 0..q-1.
class OrthogonalArrayView {
 public:
  OrthogonalArrayView(IntMatrix runs, std::int64_t q);

  std::int64_t run_count() const {
    return static_cast<std::int64_t>(runs_.rows());
  }
  std::int64_t columns() const {
    return static_cast<std::int64_t>(runs_.cols());
  }
  std::int64_t symbols() const { return q_; }
  const IntMatrix& runs() const { return runs_; }

 private:
  IntMatrix runs_;
  std::int64_t q_ = 0;
};

OrthogonalArrayView oa_from_code(const LinearCode& c,
                                 std::int64_t cap = kDefaultSchemeCap);

// Largest t such that every N x t column subarray contains every t-tuple
// equally often, together with that count lambda = N / q^t.  t = 0 (with
// lambda = N) when no single column is balanced.
std::pair<std::int64_t, std::int64_t> oa_strength(
    const OrthogonalArrayView& a);

// The [2l+3, 2l+1]_3 code generated by [ I | two extra columns ] with
// appended pairs (1,1), (0,1), (1,0), then (0,0) for every later row.
LinearCode family_code(std::int64_t l);

// Codewords partitioned by Hamming weight mod 3: classes[0] = {0},
// classes[i] = nonzero words of weight = i (mod 3), where i = 3 stands for
// weight divisible by 3.
struct WeightClassPartition {
  std::array<std::vector<Word>, 4> classes;
};
WeightClassPartition weight_classes(const LinearCode& c,
                                    std::int64_t cap = kDefaultSchemeCap);
std::array<std::int64_t, 4> weight_class_sizes(
    const LinearCode& c, std::int64_t cap = kDefaultSchemeCap);

// Scheme on the codewords with class t+1 = pairs whose Hamming distance
// lies in classes[t].  At most 3 parts of distances in 1..n.  Relations are
// built from the weight of the difference (linearity); UncoveredDistance
// reports a realized distance no part contains; NotAScheme is a legitimate
// outcome.
AssociationScheme distance_class_scheme(
    const LinearCode& c, const std::vector<std::vector<std::size_t>>& classes,
    std::int64_t cap = kDefaultSchemeCap);

// The basis map used by ksd_isomorphism_check, as a dimension x dimension
// matrix over GF(3): column i holds the coefficients expressing the image
// of the i-th standard basis vector in the rows of family_code(l).
IntMatrix ksd_isomorphism_matrix(std::int64_t l);

// Checks that the linear extension of the basis map is a bijection from
// F_3^(2l+1) onto family_code(l)'s message space sending weight class i to
// weight class sigma(i) with sigma = (1 2): every message x of weight w
// encodes to a codeword of weight = 2w (mod 3).  False on any violation.
bool ksd_isomorphism_check(std::int64_t l, const IntMatrix& basis_images);
bool ksd_isomorphism_check(std::int64_t l);

// Code files: header "p n k", then k generator rows of n digits.
// OA files: header "N m q", then N run rows of m digits.
void save_code(const std::string& path, const LinearCode& c);
LinearCode load_code(const std::string& path);
void save_oa(const std::string& path, const OrthogonalArrayView& a);
OrthogonalArrayView load_oa(const std::string& path);

}  // namespace pgd

#endif  // PGD_CODE_HPP
