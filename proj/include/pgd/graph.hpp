#ifndef PGD_GRAPH_HPP
#define PGD_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "pgd/linalg.hpp"

namespace pgd {

struct SrgParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

// Standard counting condition k(k - lambda - 1) = (v - k - 1) mu.
bool srg_feasible(const SrgParams& p);

// Parameters iff A^2 = kI + lambda A + mu (J - I - A) holds exactly.
// Returns nullopt for graphs with no edge or no non-adjacent pair (complete
// or empty), or when the identity fails.  Throws BadAdjacency on input that
// is not a square symmetric 0/1 matrix with zero diagonal.
std::optional<SrgParams> srg_certify(const IntMatrix& a);

// (alpha, beta) such that A^3 = beta A + alpha (J - A); exists iff
// lambda = mu or k = mu.  alpha = (lambda-mu)mu + mu k,
// beta = (lambda-mu)^2 + k - mu + alpha.
std::optional<std::pair<std::int64_t, std::int64_t>> srg_pgd_params(
    const SrgParams& p);

// Complete multipartite graph with c parts of size n (complement of c
// disjoint copies of K_n), via (J_c - I_c) x J_n.
IntMatrix complete_multipartite(std::int64_t c, std::int64_t n);

}  // namespace pgd

#endif  // PGD_GRAPH_HPP
