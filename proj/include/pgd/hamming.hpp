#ifndef PGD_HAMMING_HPP
#define PGD_HAMMING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pgd/design.hpp"
#include "pgd/linalg.hpp"
#include "pgd/scheme.hpp"

namespace pgd {

// Constructions with more points than this are refused unless the caller
// raises the cap; certifying a 2187-point scheme is minutes-scale work.
inline constexpr std::int64_t kDefaultSchemeCap = 2187;

// One vertex of H(d, q): a word of length d over {0..q-1}.
using HammingPoint = std::vector<std::int64_t>;

// Number of coordinates where x and y differ; lengths must agree.
std::int64_t hamming_distance(const HammingPoint& x, const HammingPoint& y);

// All q^d words in lexicographic order (leftmost symbol most significant).
std::vector<HammingPoint> hamming_points(std::int64_t d, std::int64_t q,
                                         std::int64_t cap = kDefaultSchemeCap);

// Hamming scheme H(d, q): q^d points, class h = pairs at distance h.
// Throws SizeCap when q^d > cap.
AssociationScheme hamming_scheme(std::int64_t d, std::int64_t q,
                                 std::int64_t cap = kDefaultSchemeCap);

// Fusion of H(2l+1, 3) by distance residue mod 3: class 1 = distances
// = 1 (mod 3), class 2 = distances = 2 (mod 3), class 3 = nonzero
// distances = 0 (mod 3).  A 3-class scheme on 3^(2l+1) points.
AssociationScheme ksd_scheme(std::int64_t l,
                             std::int64_t cap = kDefaultSchemeCap);

// Closed-form intersection matrices B_1, B_2, B_3 of ksd_scheme(l),
// with (B_i)(j, h) = p_{ij}^h.
std::array<IntMatrix, 3> ksd_predicted_B(std::int64_t l);

// Design parameters carried by ksd_scheme(l): the incidence matrices
// A_1, A_2, A_3 + I give symmetric designs with these three tuples.
std::array<PgdParams, 3> cor55_params(std::int64_t l);

}  // namespace pgd

#endif  // PGD_HAMMING_HPP
