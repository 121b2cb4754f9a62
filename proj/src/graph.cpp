#include "pgd/graph.hpp"

#include <string>

namespace pgd {

bool srg_feasible(const SrgParams& p) {
  return checked_mul(p.k, p.k - p.lambda - 1) ==
         checked_mul(p.v - p.k - 1, p.mu);
}

std::optional<SrgParams> srg_certify(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw BadAdjacency("adjacency must be square");
  if (!is_zero_one(a)) throw BadAdjacency("adjacency entries must be 0 or 1");
  if (!is_symmetric(a)) throw BadAdjacency("adjacency must be symmetric");
  if (!has_zero_diagonal(a))
    throw BadAdjacency("adjacency must have zero diagonal");

  const std::size_t v = a.rows();
  const auto deg = row_sums(a);
  for (std::size_t i = 1; i < v; ++i)
    if (deg[i] != deg[0]) return std::nullopt;

  // Need both an edge and a non-adjacent pair to read lambda and mu.
  std::optional<std::int64_t> lambda, mu;
  const IntMatrix s = multiply(a, a);
  for (std::size_t i = 0; i < v && (!lambda || !mu); ++i)
    for (std::size_t j = 0; j < v && (!lambda || !mu); ++j) {
      if (i == j) continue;
      if (a(i, j) == 1 && !lambda) lambda = s(i, j);
      if (a(i, j) == 0 && !mu) mu = s(i, j);
    }
  if (!lambda || !mu) return std::nullopt;

  const std::int64_t k = deg[0];
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      const std::int64_t want =
          i == j ? k : (a(i, j) == 1 ? *lambda : *mu);
      if (s(i, j) != want) return std::nullopt;
    }
  return SrgParams{static_cast<std::int64_t>(v), k, *lambda, *mu};
}

std::optional<std::pair<std::int64_t, std::int64_t>> srg_pgd_params(
    const SrgParams& p) {
  if (p.lambda != p.mu && p.k != p.mu) return std::nullopt;
  const std::int64_t diff = p.lambda - p.mu;
  const std::int64_t alpha =
      checked_add(checked_mul(diff, p.mu), checked_mul(p.mu, p.k));
  const std::int64_t beta = checked_add(
      checked_add(checked_mul(diff, diff), p.k - p.mu), alpha);
  return std::make_pair(alpha, beta);
}

IntMatrix complete_multipartite(std::int64_t c, std::int64_t n) {
  if (c < 2 || n < 2)
    throw BadInput("complete multipartite graph needs c >= 2, n >= 2");
  const std::size_t cc = static_cast<std::size_t>(c);
  const std::size_t nn = static_cast<std::size_t>(n);
  const IntMatrix parts =
      subtract(IntMatrix::ones(cc, cc), IntMatrix::identity(cc));
  return kronecker(parts, IntMatrix::ones(nn, nn));
}

}  // namespace pgd
