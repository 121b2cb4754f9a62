#ifndef PGD_DESIGN_HPP
#define PGD_DESIGN_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "pgd/linalg.hpp"

namespace pgd {

// Point-block incidence: v x b 0/1 matrix, rows = points, columns = blocks.
// Rejects empty block columns; a block must contain at least one point.
class IncidenceStructure {
 public:
  explicit IncidenceStructure(IntMatrix n);

  std::size_t points() const { return n_.rows(); }
  std::size_t blocks() const { return n_.cols(); }
  const IntMatrix& matrix() const { return n_; }

 private:
  IntMatrix n_;
};

struct TacticalParams {
  std::int64_t v = 0, b = 0, k = 0, r = 0;
  bool operator==(const TacticalParams&) const = default;
};

// Symmetric partial geometric design parameters (v, k; alpha, beta).
struct PgdParams {
  std::int64_t v = 0, k = 0, alpha = 0, beta = 0;
  bool operator==(const PgdParams&) const = default;
};

struct PgdCertificate {
  std::int64_t v = 0, b = 0, k = 0, r = 0;
  std::int64_t alpha = 0, beta = 0;
  // True when N has no zero entry (no antiflag exists); alpha is then
  // unconstrained and reported equal to beta by convention.
  bool degenerate = false;
  bool operator==(const PgdCertificate&) const = default;
};

// Constant block size k and constant replication r, i.e. a tactical
// configuration.  Throws NotTactical naming the first offending row/column.
TacticalParams tactical_params(const IncidenceStructure& s);

// lambda such that every point pair lies in exactly lambda >= 1 common
// blocks, or nullopt if no such lambda exists.  Requires tactical input.
std::optional<std::int64_t> two_design_lambda(const IncidenceStructure& s);

// (alpha, beta) of a 2-(v, k, lambda) design viewed as a partial geometric
// design: alpha = k*lambda, beta = lambda(v-1)/(k-1) + k*lambda - lambda.
// Throws NonIntegerBeta when (k-1) does not divide lambda(v-1).
std::pair<std::int64_t, std::int64_t> two_design_pgd_params(
    std::int64_t v, std::int64_t k, std::int64_t lambda);

// Verifies N N^T N = beta N + alpha (J - N) entrywise (with tactical N) and
// returns the parameters.  Throws NotPartialGeometric with the first
// violating (point, block) cell otherwise.
PgdCertificate pgd_certify(const IncidenceStructure& s);

// Neighborhood design of a graph: blocks are (closed, if add_identity)
// vertex neighborhoods, i.e. N = A or A + I.
IncidenceStructure adjacency_to_incidence(const IntMatrix& a,
                                          bool add_identity);

}  // namespace pgd

#endif  // PGD_DESIGN_HPP
