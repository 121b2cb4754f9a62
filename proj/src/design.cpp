#include "pgd/design.hpp"

#include <string>

namespace pgd {

IncidenceStructure::IncidenceStructure(IntMatrix n) : n_(std::move(n)) {
  if (n_.rows() == 0 || n_.cols() == 0)
    throw BadInput("incidence structure needs at least one point and block");
  if (!is_zero_one(n_))
    throw BadInput("incidence matrix entries must be 0 or 1");
  const auto cs = col_sums(n_);
  for (std::size_t j = 0; j < cs.size(); ++j)
    if (cs[j] == 0)
      throw BadInput("block " + std::to_string(j) + " is empty");
}

TacticalParams tactical_params(const IncidenceStructure& s) {
  const IntMatrix& n = s.matrix();
  const auto cs = col_sums(n);
  for (std::size_t j = 1; j < cs.size(); ++j)
    if (cs[j] != cs[0])
      throw NotTactical("block " + std::to_string(j) + " has size " +
                            std::to_string(cs[j]) + ", expected " +
                            std::to_string(cs[0]),
                        false, j);
  const auto rs = row_sums(n);
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (rs[i] != rs[0])
      throw NotTactical("point " + std::to_string(i) + " has replication " +
                            std::to_string(rs[i]) + ", expected " +
                            std::to_string(rs[0]),
                        true, i);
  return TacticalParams{static_cast<std::int64_t>(s.points()),
                        static_cast<std::int64_t>(s.blocks()), cs[0], rs[0]};
}

std::optional<std::int64_t> two_design_lambda(const IncidenceStructure& s) {
  tactical_params(s);  // propagate NotTactical
  const IntMatrix& n = s.matrix();
  const std::size_t v = s.points();
  if (v < 2) return std::nullopt;
  const IntMatrix g = multiply(n, transpose(n));
  const std::int64_t lambda = g(0, 1);
  if (lambda < 1) return std::nullopt;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j && g(i, j) != lambda) return std::nullopt;
  return lambda;
}

std::pair<std::int64_t, std::int64_t> two_design_pgd_params(
    std::int64_t v, std::int64_t k, std::int64_t lambda) {
  if (k < 2 || v <= k || lambda < 1)
    throw BadInput("need v > k >= 2 and lambda >= 1");
  const std::int64_t num = checked_mul(lambda, v - 1);
  if (num % (k - 1) != 0)
    throw NonIntegerBeta("lambda(v-1) = " + std::to_string(num) +
                         " is not divisible by k-1 = " + std::to_string(k - 1));
  const std::int64_t alpha = checked_mul(k, lambda);
  const std::int64_t beta =
      checked_add(num / (k - 1), checked_sub(alpha, lambda));
  return {alpha, beta};
}

PgdCertificate pgd_certify(const IncidenceStructure& s) {
  const TacticalParams t = tactical_params(s);
  const IntMatrix& n = s.matrix();
  const IntMatrix m = multiply(multiply(n, transpose(n)), n);

  // beta from the first flag, alpha from the first antiflag (if any).
  std::optional<std::int64_t> alpha, beta;
  for (std::size_t i = 0; i < n.rows() && (!alpha || !beta); ++i)
    for (std::size_t j = 0; j < n.cols() && (!alpha || !beta); ++j) {
      if (n(i, j) == 1 && !beta) beta = m(i, j);
      if (n(i, j) == 0 && !alpha) alpha = m(i, j);
    }
  // Every block is nonempty, so a flag always exists.
  const bool degenerate = !alpha.has_value();
  if (degenerate) alpha = *beta;

  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) {
      const std::int64_t want = n(i, j) == 1 ? *beta : *alpha;
      if (m(i, j) != want)
        throw NotPartialGeometric(
            "N N^T N at point " + std::to_string(i) + ", block " +
                std::to_string(j) + " is " + std::to_string(m(i, j)) +
                ", expected " + std::to_string(want),
            i, j, m(i, j), want);
    }
  return PgdCertificate{t.v, t.b, t.k, t.r, *alpha, *beta, degenerate};
}

IncidenceStructure adjacency_to_incidence(const IntMatrix& a,
                                          bool add_identity) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("adjacency matrix must be square");
  if (!is_zero_one(a))
    throw BadEntries("adjacency entries must be 0 or 1");
  if (!has_zero_diagonal(a))
    throw BadEntries("adjacency matrix must have zero diagonal");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i))
        throw NotSymmetric(i, j,
                           "adjacency matrix not symmetric at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               ")");
  IntMatrix n = add_identity ? add(a, IntMatrix::identity(a.rows())) : a;
  return IncidenceStructure(std::move(n));
}

}  // namespace pgd
