#ifndef PGD_SCHEME_HPP
#define PGD_SCHEME_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgd/design.hpp"
#include "pgd/linalg.hpp"

namespace pgd {

// A certified symmetric association scheme: A_0 = I, sum A_i = J, each A_i
// symmetric, and every product A_i A_j constant on the support of each A_h.
// Instances exist only through scheme_certify (or the loaders built on it),
// so holding one is proof the axioms were checked; the intersection numbers
// found during certification are kept.
class AssociationScheme {
 public:
  std::size_t order() const { return n_; }    // number of points
  std::size_t classes() const { return d_; }  // d
  const IntMatrix& adjacency(std::size_t i) const { return a_[i]; }
  const std::vector<IntMatrix>& adjacencies() const { return a_; }
  const std::vector<std::int64_t>& valencies() const { return k_; }
  // Intersection number p_{ij}^h.
  std::int64_t p(std::size_t i, std::size_t j, std::size_t h) const {
    return p_[(i * (d_ + 1) + j) * (d_ + 1) + h];
  }
  // R = sum_h h * A_h; entry (x,y) names the class of the pair.
  const IntMatrix& relation_matrix() const { return rel_; }

 private:
  friend AssociationScheme scheme_certify(std::vector<IntMatrix> matrices);
  AssociationScheme() = default;
  std::size_t n_ = 0, d_ = 0;
  std::vector<IntMatrix> a_;
  std::vector<std::int64_t> k_;
  std::vector<std::int64_t> p_;
  IntMatrix rel_;
};

// Verifies the scheme axioms exactly; throws NotAScheme (with the violated
// axiom and a witness cell) or BadInput (malformed matrices, empty class).
AssociationScheme scheme_certify(std::vector<IntMatrix> matrices);

struct IntersectionData {
  std::vector<std::int64_t> valencies;  // k_0..k_d
  std::vector<IntMatrix> b;             // B_0..B_d, (B_i)(j,h) = p_{ij}^h
  std::int64_t p(std::size_t i, std::size_t j, std::size_t h) const {
    return b[i](j, h);
  }
};
IntersectionData intersection_data(const AssociationScheme& s);

// First/second eigenmatrices and multiplicities.  Row i of P is the common
// right-eigenvector (p_0(i),..,p_d(i)) of the intersection matrices,
// normalized to leading entry 1; multiplicities[i] belongs to row i of P and
// column i of Q.  Q = n P^{-1} held exactly as q_num / q_den.
// Canonical row order: row 0 = valencies, rest lexicographically descending.
struct EigenTable {
  std::size_t order = 0;
  IntMatrix p;
  IntMatrix q_num;
  std::int64_t q_den = 1;
  std::vector<std::int64_t> multiplicities;
};

// Throws NonIntegerEigenvalues when the common eigenvalues are not all
// integers, RepeatedEigenvaluesUnresolved when no B_j separates two
// eigenspaces (neither occurs for the schemes in scope).
EigenTable character_table(const AssociationScheme& s);

// True iff P equals Q after some simultaneous reordering of the
// eigenvalue rows, equivalently iff (Pi P)^2 = nI for some row permutation.
bool is_self_dual(const EigenTable& t);

// Merge classes.  The partition must cover {0..d} with {0} as its own part;
// parts are taken in the given order (the {0} part becomes class 0).
// NotAScheme is a legitimate outcome: not every fusion is a scheme.
AssociationScheme fuse(const AssociationScheme& s,
                       const std::vector<std::vector<std::size_t>>& partition);

// Wreath product: x inner on m points, y outer on n points; classes are
// I_n (x) A_1..A_d then C_1 (x) J_m .. C_e (x) J_m.
AssociationScheme wreath(const AssociationScheme& x,
                         const AssociationScheme& y);

// Parameters of the design on the last wreath class when the outer factor
// is complete: (mn, m(n-1); m^2(n^2-3n+2), m^2(n^2-3n+3)).
PgdParams wreath_pgd(std::int64_t m, std::int64_t n);

// The order-3m^2 family: expected character table
//   [1, m(m-1), m(m+1), (m-1)(m+1)]
//   [1,  m,     0,      -m-1     ]
//   [1,  0,     -m,     m-1      ]
//   [1,  -m,    m,      -1       ]
// and the three design parameter tuples from A_1, A_2, A_3 + I.
IntMatrix z_family_eigenmatrix(std::int64_t m);
std::array<PgdParams, 3> z_family_params(std::int64_t m);

struct ZFamilyResult {
  bool matches = false;
  // class_order[i] = scheme class playing role i+1 of the family table
  // (classes may come permuted; all relabelings of {1,2,3} are tried).
  std::array<std::size_t, 3> class_order{};
  // Certificates for incidence matrices A_{class_order[0]},
  // A_{class_order[1]}, A_{class_order[2]} + I, in that role order.
  std::array<PgdCertificate, 3> certificates{};
};

// Requires a 3-class scheme of order 3m^2 with m = 0 mod 3 (OrderMismatch
// otherwise).  matches == true iff the character table agrees with
// z_family_eigenmatrix(m) under some class relabeling.
ZFamilyResult z_family_check(const AssociationScheme& s, std::int64_t m);

// File format: the relation matrix in the linalg text format.
AssociationScheme scheme_from_relation(const IntMatrix& r);
void save_scheme(const std::string& path, const AssociationScheme& s);
AssociationScheme load_scheme(const std::string& path);

}  // namespace pgd

#endif  // PGD_SCHEME_HPP
