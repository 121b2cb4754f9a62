#include "pgd/dsrg.hpp"

#include <string>
#include <utility>
#include <vector>

#include "pgd/errors.hpp"
#include "pgd/scheme.hpp"

namespace pgd {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

Digraph incidence_digraph(const IncidenceStructure& d, bool want_flags,
                          bool allow_large) {
  tactical_params(d);  // enforce the precondition, with its own diagnostics
  const IntMatrix& n = d.matrix();
  std::vector<Pair> verts;
  for (std::size_t p = 0; p < n.rows(); ++p)
    for (std::size_t b = 0; b < n.cols(); ++b)
      if ((n(p, b) == 1) == want_flags) verts.push_back({p, b});
  if (verts.empty())
    throw EmptyVertexSet(want_flags
                             ? "the design has no flags"
                             : "every point lies in every block; no antiflags");
  if (static_cast<std::int64_t>(verts.size()) > kDsrgVertexCap && !allow_large)
    throw SizeCap("graph on " + std::to_string(verts.size()) +
                  " vertices exceeds the cap " +
                  std::to_string(kDsrgVertexCap));
  IntMatrix a(verts.size(), verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (want_flags && i == j) continue;
      a(i, j) = n(verts[i].first, verts[j].second);
    }
  return Digraph(std::move(a));
}

}  // namespace

Digraph::Digraph(IntMatrix adjacency) : a_(std::move(adjacency)) {
  if (a_.rows() == 0 || a_.rows() != a_.cols())
    throw BadAdjacency("adjacency must be square and nonempty");
  if (!is_zero_one(a_))
    throw BadAdjacency("adjacency entries must be 0 or 1");
  if (!has_zero_diagonal(a_))
    throw BadAdjacency("adjacency must have a zero diagonal (no loops)");
}

Digraph flag_graph(const IncidenceStructure& d, bool allow_large) {
  return incidence_digraph(d, true, allow_large);
}

Digraph antiflag_graph(const IncidenceStructure& d, bool allow_large) {
  return incidence_digraph(d, false, allow_large);
}

DsrgOutcome dsrg_certify(const Digraph& g) {
  const IntMatrix& a = g.adjacency();
  const std::size_t n = a.rows();
  DsrgOutcome out;

  const auto rs = row_sums(a);
  const std::int64_t k = rs[0];
  for (std::size_t i = 0; i < n; ++i)
    if (rs[i] != k) {
      out.violation = "vertex " + std::to_string(i) + " has out-degree " +
                      std::to_string(rs[i]) + ", expected " +
                      std::to_string(k);
      return out;
    }
  const auto cs = col_sums(a);
  for (std::size_t i = 0; i < n; ++i)
    if (cs[i] != k) {
      out.violation = "vertex " + std::to_string(i) + " has in-degree " +
                      std::to_string(cs[i]) + ", expected " +
                      std::to_string(k);
      return out;
    }

  const IntMatrix sq = multiply(a, a);
  const std::int64_t t = sq(0, 0);
  // lambda from the first arc, mu from the first non-arc; a missing witness
  // leaves the unconstrained parameter at 0.
  std::int64_t lambda = 0, mu = 0;
  bool saw_arc = false, saw_nonarc = false;
  for (std::size_t x = 0; x < n && !(saw_arc && saw_nonarc); ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (a(x, y) == 1 && !saw_arc) {
        lambda = sq(x, y);
        saw_arc = true;
      } else if (a(x, y) == 0 && !saw_nonarc) {
        mu = sq(x, y);
        saw_nonarc = true;
      }
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::int64_t want = x == y ? t : (a(x, y) == 1 ? lambda : mu);
      if (sq(x, y) != want) {
        const char* kind = x == y ? "closed" : (a(x, y) == 1 ? "arc" : "non-arc");
        out.violation = std::string("2-path count at ") + kind + " pair (" +
                        std::to_string(x) + "," + std::to_string(y) + ") is " +
                        std::to_string(sq(x, y)) + ", expected " +
                        std::to_string(want);
        return out;
      }
    }

  out.certificate = DsrgCertificate{static_cast<std::int64_t>(n), k, t, lambda,
                                    mu};
  return out;
}

std::pair<DsrgCertificate, DsrgCertificate> predicted_dsrg_params(
    std::int64_t v, std::int64_t k, std::int64_t alpha, std::int64_t beta) {
  if (v < 1 || k < 1 || k > v || alpha < 0 || beta < 0)
    throw BadInput("need 1 <= k <= v and nonnegative alpha, beta");
  const std::int64_t k2 = checked_mul(k, k);
  DsrgCertificate anti{checked_mul(v, v - k), checked_mul(k, v - k),
                       checked_sub(k2, alpha), checked_sub(k2, beta),
                       checked_sub(k2, alpha)};
  DsrgCertificate flag{checked_mul(v, k), checked_sub(k2, 1),
                       checked_sub(beta, 1), checked_sub(beta, 2), alpha};
  return {anti, flag};
}

std::vector<DsrgCertificate> table1_catalog(std::int64_t l_max) {
  if (l_max < 1) throw BadInput("need l_max >= 1");
  std::vector<DsrgCertificate> rows;
  rows.reserve(static_cast<std::size_t>(6 * l_max));
  for (std::int64_t l = 1; l <= l_max; ++l) {
    const std::int64_t m = checked_pow(3, l);
    for (const PgdParams& dp : z_family_params(m)) {
      const auto [anti, flag] =
          predicted_dsrg_params(dp.v, dp.k, dp.alpha, dp.beta);
      rows.push_back(anti);
      rows.push_back(flag);
    }
  }
  return rows;
}

}  // namespace pgd
