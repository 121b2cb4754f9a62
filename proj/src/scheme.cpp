#include "pgd/scheme.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pgd/errors.hpp"
#include "pgd/rational.hpp"

namespace pgd {

namespace {

using detail::Rational;
using detail::RationalMatrix;

std::string cell(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Canonical eigenvalue-row order: the valency row first, the remaining rows
// sorted lexicographically descending.
IntMatrix canonical_rows(const IntMatrix& p,
                         const std::vector<std::int64_t>& valencies) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(p.rows());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    std::vector<std::int64_t> row(p.cols());
    for (std::size_t c = 0; c < p.cols(); ++c) row[c] = p(r, c);
    rows.push_back(std::move(row));
  }
  const auto it = std::find(rows.begin(), rows.end(), valencies);
  if (it == rows.end())
    throw Error("internal: valency row missing from eigenvalue table");
  rows.erase(it);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  rows.insert(rows.begin(), valencies);
  return IntMatrix::from_rows(rows);
}

}  // namespace

AssociationScheme scheme_certify(std::vector<IntMatrix> matrices) {
  if (matrices.empty())
    throw BadInput("a scheme needs at least the identity class");
  const std::size_t n = matrices[0].rows();
  if (n == 0) throw BadInput("a scheme needs at least one point");
  const std::size_t d = matrices.size() - 1;
  for (std::size_t i = 0; i <= d; ++i) {
    if (matrices[i].rows() != n || matrices[i].cols() != n)
      throw DimensionMismatch("class " + std::to_string(i) + " is " +
                              std::to_string(matrices[i].rows()) + "x" +
                              std::to_string(matrices[i].cols()) +
                              ", expected " + std::to_string(n) + "x" +
                              std::to_string(n));
    if (!is_zero_one(matrices[i]))
      throw BadInput("class " + std::to_string(i) +
                     " has entries other than 0 and 1");
  }

  // Axiom 1: A_0 = I and the classes partition the pairs.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (matrices[0](x, y) != (x == y ? 1 : 0))
        throw NotAScheme("class 0 is not the identity at " + cell(x, y), 1, x,
                         y);
  IntMatrix rel(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int found = -1;
      for (std::size_t i = 0; i <= d; ++i)
        if (matrices[i](x, y) != 0) {
          if (found >= 0)
            throw NotAScheme("pair " + cell(x, y) + " lies in classes " +
                                 std::to_string(found) + " and " +
                                 std::to_string(i),
                             1, x, y);
          found = static_cast<int>(i);
        }
      if (found < 0)
        throw NotAScheme("pair " + cell(x, y) + " lies in no class", 1, x, y);
      rel(x, y) = found;
    }

  // Axiom 2: every class is symmetric.
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (matrices[i](x, y) != matrices[i](y, x))
          throw NotAScheme(
              "class " + std::to_string(i) + " is not symmetric at " +
                  cell(x, y),
              2, x, y);

  // Witness pair per class; also rejects empty classes.
  std::vector<std::size_t> wx(d + 1), wy(d + 1);
  std::vector<bool> seen(d + 1, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto h = static_cast<std::size_t>(rel(x, y));
      if (!seen[h]) {
        seen[h] = true;
        wx[h] = x;
        wy[h] = y;
      }
    }
  for (std::size_t i = 0; i <= d; ++i)
    if (!seen[i]) throw BadInput("class " + std::to_string(i) + " is empty");

  // Axiom 3: A_i A_j is constant on every class.  Since all classes are
  // symmetric, A_i A_j = (A_j A_i)^T, so checking i <= j and copying the
  // coefficients to (j, i) covers every ordered pair; products with A_0 are
  // trivial and recorded analytically.
  std::vector<std::int64_t> p((d + 1) * (d + 1) * (d + 1), 0);
  const auto at = [&](std::size_t i, std::size_t j,
                      std::size_t h) -> std::int64_t& {
    return p[(i * (d + 1) + j) * (d + 1) + h];
  };
  for (std::size_t j = 0; j <= d; ++j) {
    at(0, j, j) = 1;
    at(j, 0, j) = 1;
  }
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j) {
      const IntMatrix prod = multiply(matrices[i], matrices[j]);
      std::vector<std::int64_t> coef(d + 1);
      for (std::size_t h = 0; h <= d; ++h) coef[h] = prod(wx[h], wy[h]);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const auto h = static_cast<std::size_t>(rel(x, y));
          if (prod(x, y) != coef[h])
            throw NotAScheme("A_" + std::to_string(i) + " A_" +
                                 std::to_string(j) + " takes values " +
                                 std::to_string(coef[h]) + " and " +
                                 std::to_string(prod(x, y)) + " on class " +
                                 std::to_string(h) + ", e.g. at " + cell(x, y),
                             3, x, y);
        }
      for (std::size_t h = 0; h <= d; ++h) {
        at(i, j, h) = coef[h];
        at(j, i, h) = coef[h];
      }
    }

  std::vector<std::int64_t> k(d + 1);
  for (std::size_t i = 0; i <= d; ++i) k[i] = at(i, i, 0);
  const std::int64_t ksum = std::accumulate(k.begin(), k.end(), std::int64_t{0});
  if (ksum != static_cast<std::int64_t>(n))
    throw Error("internal: valencies sum to " + std::to_string(ksum) +
                ", expected the order " + std::to_string(n));

  AssociationScheme s;
  s.n_ = n;
  s.d_ = d;
  s.a_ = std::move(matrices);
  s.k_ = std::move(k);
  s.p_ = std::move(p);
  s.rel_ = std::move(rel);
  return s;
}

IntersectionData intersection_data(const AssociationScheme& s) {
  const std::size_t d = s.classes();
  IntersectionData out;
  out.valencies = s.valencies();
  out.b.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    IntMatrix bi(d + 1, d + 1);
    for (std::size_t j = 0; j <= d; ++j)
      for (std::size_t h = 0; h <= d; ++h) bi(j, h) = s.p(i, j, h);
    out.b.push_back(std::move(bi));
  }
  return out;
}

EigenTable character_table(const AssociationScheme& s) {
  const std::size_t d = s.classes();
  const std::size_t m = d + 1;
  const auto data = intersection_data(s);

  // Split Q^m into the common eigenspaces of B_1..B_d.  Subspaces are kept
  // as basis-column matrices; each B_j refines every current subspace into
  // its integer-eigenvalue slices.  Column sums of B_j all equal k_j, so
  // every eigenvalue lies in [-k_j, k_j].
  std::vector<RationalMatrix> spaces;
  spaces.push_back(RationalMatrix::identity(m));
  for (std::size_t j = 1; j <= d; ++j) {
    const IntMatrix& bj = data.b[j];
    const std::int64_t bound = data.valencies[j];
    std::vector<RationalMatrix> next;
    for (const auto& sp : spaces) {
      std::size_t found = 0;
      for (std::int64_t theta = -bound; theta <= bound; ++theta) {
        RationalMatrix shifted(m, sp.cols());
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < sp.cols(); ++c) {
            Rational acc = Rational(-theta) * sp(r, c);
            for (std::size_t t = 0; t < m; ++t)
              acc = acc + Rational(bj(r, t)) * sp(t, c);
            shifted(r, c) = acc;
          }
        const RationalMatrix ns = rat_nullspace(shifted);
        if (ns.cols() == 0) continue;
        next.push_back(rat_multiply(sp, ns));
        found += ns.cols();
        if (found == sp.cols()) break;
      }
      if (found != sp.cols())
        throw NonIntegerEigenvalues(
            "intersection matrix B_" + std::to_string(j) +
            " has an eigenvalue outside the integers");
    }
    spaces = std::move(next);
  }

  if (spaces.size() != m)
    throw RepeatedEigenvaluesUnresolved(
        "the intersection matrices leave a common eigenspace of dimension "
        "greater than 1");
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(m);
  for (const auto& sp : spaces) {
    if (sp.cols() != 1)
      throw RepeatedEigenvaluesUnresolved(
          "the intersection matrices leave a common eigenspace of dimension " +
          std::to_string(sp.cols()));
    const Rational lead = sp(0, 0);
    if (lead.is_zero())
      throw Error("internal: common eigenvector with zero leading coordinate");
    std::vector<std::int64_t> row(m);
    for (std::size_t t = 0; t < m; ++t) {
      const Rational v = sp(t, 0) / lead;
      if (!v.is_integer())
        throw NonIntegerEigenvalues("eigenvalue p_" + std::to_string(t) +
                                    " is the non-integer " + v.str());
      row[t] = v.as_int64();
    }
    rows.push_back(std::move(row));
  }

  EigenTable out;
  out.order = s.order();
  out.p = canonical_rows(IntMatrix::from_rows(rows), s.valencies());

  // m_i = n / sum_t p_t(i)^2 / k_t; integrality is a theorem here, so a
  // failure is a bug, not bad input.
  const std::int64_t n64 = static_cast<std::int64_t>(s.order());
  out.multiplicities.resize(m);
  std::int64_t msum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational sum = 0;
    for (std::size_t t = 0; t < m; ++t)
      sum = sum + Rational(out.p(i, t)) * Rational(out.p(i, t)) /
                      Rational(s.valencies()[t]);
    const Rational mi = Rational(n64) / sum;
    if (!mi.is_integer() || mi.num() <= 0)
      throw Error("internal: multiplicity " + mi.str() +
                  " is not a positive integer");
    out.multiplicities[i] = mi.as_int64();
    msum = checked_add(msum, out.multiplicities[i]);
  }
  if (msum != n64)
    throw Error("internal: multiplicities sum to " + std::to_string(msum) +
                ", expected " + std::to_string(n64));

  // Q = n P^{-1}, held exactly over a single denominator.
  RationalMatrix pr(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pr(i, j) = Rational(out.p(i, j));
  const RationalMatrix inv = rat_inverse(pr);
  RationalMatrix qr(m, m);
  detail::int128 den = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      qr(i, j) = Rational(n64) * inv(i, j);
      const detail::int128 g = detail::gcd128(den, qr(i, j).den());
      den = detail::checked_mul128(den / g, qr(i, j).den());
    }
  if (den > detail::int128(INT64_MAX))
    throw IntegerOverflow("second eigenmatrix denominator exceeds 64 bits");
  out.q_den = static_cast<std::int64_t>(den);
  out.q_num = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const detail::int128 v =
          detail::checked_mul128(qr(i, j).num(), den / qr(i, j).den());
      if (v > detail::int128(INT64_MAX) || v < detail::int128(INT64_MIN))
        throw IntegerOverflow("second eigenmatrix entry exceeds 64 bits");
      out.q_num(i, j) = static_cast<std::int64_t>(v);
    }
  return out;
}

bool is_self_dual(const EigenTable& t) {
  const std::size_t m = t.p.rows();
  const IntMatrix target =
      scale(static_cast<std::int64_t>(t.order), IntMatrix::identity(m));
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    IntMatrix pp(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) pp(r, c) = t.p(perm[r], c);
    if (multiply(pp, pp) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

AssociationScheme fuse(const AssociationScheme& s,
                       const std::vector<std::vector<std::size_t>>& partition) {
  const std::size_t d = s.classes();
  if (partition.empty()) throw BadInput("the partition has no parts");
  std::vector<int> owner(d + 1, -1);
  std::size_t zero_part = partition.size();
  for (std::size_t t = 0; t < partition.size(); ++t) {
    if (partition[t].empty())
      throw BadInput("partition part " + std::to_string(t) + " is empty");
    for (const std::size_t c : partition[t]) {
      if (c > d)
        throw BadInput("partition names class " + std::to_string(c) +
                       " but the scheme has classes 0.." + std::to_string(d));
      if (owner[c] != -1)
        throw BadInput("class " + std::to_string(c) +
                       " appears in more than one part");
      owner[c] = static_cast<int>(t);
    }
    if (partition[t].size() == 1 && partition[t][0] == 0) zero_part = t;
  }
  for (std::size_t c = 0; c <= d; ++c)
    if (owner[c] == -1)
      throw BadInput("class " + std::to_string(c) +
                     " is not covered by the partition");
  if (zero_part == partition.size())
    throw BadInput("the identity class {0} must form a part of its own");

  std::vector<IntMatrix> sums;
  sums.reserve(partition.size());
  sums.push_back(s.adjacency(0));
  for (std::size_t t = 0; t < partition.size(); ++t) {
    if (t == zero_part) continue;
    IntMatrix sum = s.adjacency(partition[t][0]);
    for (std::size_t u = 1; u < partition[t].size(); ++u)
      sum = add(sum, s.adjacency(partition[t][u]));
    sums.push_back(std::move(sum));
  }
  return scheme_certify(std::move(sums));
}

AssociationScheme wreath(const AssociationScheme& x,
                         const AssociationScheme& y) {
  const IntMatrix in = IntMatrix::identity(y.order());
  const IntMatrix jm = IntMatrix::ones(x.order(), x.order());
  std::vector<IntMatrix> classes;
  classes.reserve(x.classes() + y.classes() + 1);
  for (std::size_t i = 0; i <= x.classes(); ++i)
    classes.push_back(kronecker(in, x.adjacency(i)));
  for (std::size_t j = 1; j <= y.classes(); ++j)
    classes.push_back(kronecker(y.adjacency(j), jm));
  try {
    return scheme_certify(std::move(classes));
  } catch (const NotAScheme& e) {
    throw Error(std::string("internal: wreath product failed certification: ") +
                e.what());
  }
}

PgdParams wreath_pgd(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 2)
    throw BadInput("wreath design needs m >= 1 and n >= 2");
  const std::int64_t m2 = checked_mul(m, m);
  const std::int64_t w = checked_mul(n - 1, n - 2);  // n^2 - 3n + 2
  PgdParams out;
  out.v = checked_mul(m, n);
  out.k = checked_mul(m, n - 1);
  out.alpha = checked_mul(m2, w);
  out.beta = checked_mul(m2, checked_add(w, 1));
  return out;
}

IntMatrix z_family_eigenmatrix(std::int64_t m) {
  if (m < 3 || m % 3 != 0)
    throw BadInput("the family needs m >= 3 with m = 0 mod 3");
  return IntMatrix::from_rows({
      {1, checked_mul(m, m - 1), checked_mul(m, m + 1),
       checked_mul(m - 1, m + 1)},
      {1, m, 0, -m - 1},
      {1, 0, -m, m - 1},
      {1, -m, m, -1},
  });
}

std::array<PgdParams, 3> z_family_params(std::int64_t m) {
  if (m < 3 || m % 3 != 0)
    throw BadInput("the family needs m >= 3 with m = 0 mod 3");
  const std::int64_t m2 = checked_mul(m, m);
  const std::int64_t v = checked_mul(3, m2);
  const std::int64_t q = m2 / 3;
  const std::int64_t t3m = checked_mul(3, m);
  std::array<PgdParams, 3> out;
  out[0] = {v, checked_mul(m, m - 1),
            checked_mul(q, checked_add(checked_sub(m2, t3m), 2)),
            checked_mul(q, checked_add(checked_sub(m2, t3m), 5))};
  out[1] = {v, checked_mul(m, m + 1),
            checked_mul(q, checked_add(checked_add(m2, t3m), 2)),
            checked_mul(q, checked_add(checked_add(m2, t3m), 5))};
  out[2] = {v, m2, checked_mul(q, m2 - 1), checked_mul(q, checked_add(m2, 2))};
  return out;
}

ZFamilyResult z_family_check(const AssociationScheme& s, std::int64_t m) {
  if (s.classes() != 3)
    throw OrderMismatch("the family check needs a 3-class scheme, got " +
                        std::to_string(s.classes()) + " classes");
  if (m < 3 || m % 3 != 0)
    throw OrderMismatch("the family check needs m >= 3 with m = 0 mod 3, got " +
                        std::to_string(m));
  const std::int64_t want = checked_mul(3, checked_mul(m, m));
  if (static_cast<std::int64_t>(s.order()) != want)
    throw OrderMismatch("scheme order is " + std::to_string(s.order()) +
                        ", expected 3m^2 = " + std::to_string(want));

  ZFamilyResult out;
  const IntMatrix expected = z_family_eigenmatrix(m);
  EigenTable table;
  try {
    table = character_table(s);
  } catch (const NonIntegerEigenvalues&) {
    return out;
  }

  std::array<std::size_t, 3> sigma = {1, 2, 3};
  do {
    IntMatrix cand(4, 4);
    std::vector<std::int64_t> kv = {1, 0, 0, 0};
    for (std::size_t r = 0; r < 4; ++r) {
      cand(r, 0) = table.p(r, 0);
      for (std::size_t t = 1; t < 4; ++t) cand(r, t) = table.p(r, sigma[t - 1]);
    }
    for (std::size_t t = 1; t < 4; ++t) kv[t] = s.valencies()[sigma[t - 1]];
    if (canonical_rows(cand, kv) == expected) {
      out.matches = true;
      out.class_order = sigma;
      break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (!out.matches) return out;

  const auto params = z_family_params(m);
  const std::array<IntMatrix, 3> designs = {
      s.adjacency(out.class_order[0]), s.adjacency(out.class_order[1]),
      add(s.adjacency(out.class_order[2]), IntMatrix::identity(s.order()))};
  for (std::size_t t = 0; t < 3; ++t) {
    PgdCertificate cert;
    try {
      cert = pgd_certify(IncidenceStructure(designs[t]));
    } catch (const Error& e) {
      throw Error("internal: design " + std::to_string(t + 1) +
                  " failed certification after the table matched: " + e.what());
    }
    if (cert.v != params[t].v || cert.k != params[t].k ||
        cert.alpha != params[t].alpha || cert.beta != params[t].beta)
      throw Error("internal: design " + std::to_string(t + 1) +
                  " certified with parameters off the closed forms");
    out.certificates[t] = cert;
  }
  return out;
}

AssociationScheme scheme_from_relation(const IntMatrix& r) {
  if (r.rows() == 0 || r.rows() != r.cols())
    throw BadInput("relation matrix must be square and nonempty");
  const std::size_t n = r.rows();
  std::int64_t maxc = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (r(x, y) < 0)
        throw BadInput("relation entry at (" + std::to_string(x) + "," +
                       std::to_string(y) + ") is negative");
      maxc = std::max(maxc, r(x, y));
    }
  if (maxc >= static_cast<std::int64_t>(n))
    throw BadInput("relation names class " + std::to_string(maxc) +
                   " but a scheme on " + std::to_string(n) +
                   " points has fewer classes");
  std::vector<IntMatrix> classes(static_cast<std::size_t>(maxc) + 1,
                                 IntMatrix(n, n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      classes[static_cast<std::size_t>(r(x, y))](x, y) = 1;
  return scheme_certify(std::move(classes));
}

void save_scheme(const std::string& path, const AssociationScheme& s) {
  save_matrix(path, s.relation_matrix());
}

AssociationScheme load_scheme(const std::string& path) {
  return scheme_from_relation(load_matrix(path));
}

}  // namespace pgd
