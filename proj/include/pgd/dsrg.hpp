#ifndef PGD_DSRG_HPP
#define PGD_DSRG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgd/design.hpp"
#include "pgd/linalg.hpp"

namespace pgd {

// Flag/antiflag graphs above this many vertices are refused unless the
// caller passes allow_large (the A^2 check is a dense matrix product).
inline constexpr std::int64_t kDsrgVertexCap = 20000;

// Loopless directed graph: square 0/1 adjacency with zero diagonal.
class Digraph {
 public:
  explicit Digraph(IntMatrix adjacency);
  std::size_t vertices() const { return a_.rows(); }
  const IntMatrix& adjacency() const { return a_; }

 private:
  IntMatrix a_;
};

struct DsrgCertificate {
  std::int64_t v = 0, k = 0, t = 0, lambda = 0, mu = 0;
  bool operator==(const DsrgCertificate&) const = default;
};

struct DsrgOutcome {
  std::optional<DsrgCertificate> certificate;
  std::string violation;  // first violated condition when empty certificate
};

// Vertices are the incident (point, block) pairs in lexicographic order;
// arc (p,B) -> (q,C) iff the pairs differ and p lies in C.  The design must
// be tactical.
Digraph flag_graph(const IncidenceStructure& d, bool allow_large = false);

// Vertices are the non-incident pairs, same order and arc rule (no
// inequality clause needed: p not in B rules out loops).  EmptyVertexSet
// when the design has no antiflag.
Digraph antiflag_graph(const IncidenceStructure& d, bool allow_large = false);

// Certificate iff AJ = JA = kJ and A^2 = tI + lambda*A + mu*(J-I-A) hold
// exactly; otherwise the outcome carries the first violation found.
DsrgOutcome dsrg_certify(const Digraph& g);

// Parameter tuples a symmetric design (v, k; alpha, beta) predicts:
// antiflag (v(v-k), k(v-k), k^2-alpha, k^2-beta, k^2-alpha) first,
// flag (vk, k^2-1, beta-1, beta-2, alpha) second.
std::pair<DsrgCertificate, DsrgCertificate> predicted_dsrg_params(
    std::int64_t v, std::int64_t k, std::int64_t alpha, std::int64_t beta);

// Six parameter rows per l = 1..l_max: the antiflag and flag tuples of each
// of the three order-3m^2 designs at m = 3^l.
std::vector<DsrgCertificate> table1_catalog(std::int64_t l_max);

}  // namespace pgd

#endif  // PGD_DSRG_HPP
