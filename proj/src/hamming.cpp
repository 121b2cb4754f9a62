#include "pgd/hamming.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pgd/errors.hpp"

namespace pgd {

namespace {

// q^d, refusing counts above the cap before they can overflow.
std::int64_t point_count(std::int64_t d, std::int64_t q, std::int64_t cap) {
  if (d < 1) throw BadInput("word length must be at least 1");
  if (q < 2) throw BadInput("alphabet size must be at least 2");
  if (cap < 1) throw BadInput("size cap must be positive");
  std::int64_t n = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    n = checked_mul(n, q);
    if (n > cap)
      throw SizeCap("H(" + std::to_string(d) + "," + std::to_string(q) +
                    ") has more than " + std::to_string(cap) + " points");
  }
  return n;
}

}  // namespace

std::int64_t hamming_distance(const HammingPoint& x, const HammingPoint& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("words of lengths " + std::to_string(x.size()) +
                            " and " + std::to_string(y.size()));
  std::int64_t dist = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) ++dist;
  return dist;
}

std::vector<HammingPoint> hamming_points(std::int64_t d, std::int64_t q,
                                         std::int64_t cap) {
  const std::int64_t n = point_count(d, q, cap);
  std::vector<HammingPoint> pts(static_cast<std::size_t>(n),
                                HammingPoint(static_cast<std::size_t>(d)));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t rest = i;
    for (std::int64_t pos = d - 1; pos >= 0; --pos) {
      pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos)] =
          rest % q;
      rest /= q;
    }
  }
  return pts;
}

AssociationScheme hamming_scheme(std::int64_t d, std::int64_t q,
                                 std::int64_t cap) {
  const auto pts = hamming_points(d, q, cap);
  const std::size_t n = pts.size();
  std::vector<IntMatrix> classes(static_cast<std::size_t>(d) + 1,
                                 IntMatrix(n, n));
  for (std::size_t x = 0; x < n; ++x) {
    classes[0](x, x) = 1;
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto h = static_cast<std::size_t>(hamming_distance(pts[x], pts[y]));
      classes[h](x, y) = 1;
      classes[h](y, x) = 1;
    }
  }
  return scheme_certify(std::move(classes));
}

AssociationScheme ksd_scheme(std::int64_t l, std::int64_t cap) {
  if (l < 1) throw BadInput("the fusion family needs l >= 1");
  const std::int64_t d = 2 * l + 1;
  const AssociationScheme h = hamming_scheme(d, 3, cap);
  std::vector<std::vector<std::size_t>> parts(4);
  parts[0] = {0};
  for (std::int64_t dist = 1; dist <= d; ++dist) {
    const std::size_t residue = static_cast<std::size_t>(dist % 3);
    parts[residue == 0 ? 3 : residue].push_back(
        static_cast<std::size_t>(dist));
  }
  return fuse(h, parts);
}

std::array<IntMatrix, 3> ksd_predicted_B(std::int64_t l) {
  if (l < 1) throw BadInput("the fusion family needs l >= 1");
  const std::int64_t T = checked_pow(3, 2 * l);      // 3^2l
  const std::int64_t t = checked_pow(3, l);          // 3^l
  const std::int64_t U = checked_pow(3, 2 * l - 1);  // 3^(2l-1)
  const std::int64_t u = checked_pow(3, l - 1);      // 3^(l-1)
  const std::int64_t s = (l % 2 == 0) ? 1 : -1;
  const std::int64_t st = s * t;
  const std::int64_t su = s * u;
  std::array<IntMatrix, 3> out = {
      IntMatrix::from_rows({{0, 1, 0, 0},
                            {T + st, U + 2 * su, U + su, U + st},
                            {0, U - su, U + su, U},
                            {0, U + 2 * su - 1, U + su, U}}),
      IntMatrix::from_rows({{0, 0, 1, 0},
                            {0, U - su, U + su, U},
                            {T - st, U - su, U - 2 * su, U - st},
                            {0, U - su, U - 2 * su - 1, U}}),
      IntMatrix::from_rows({{0, 0, 0, 1},
                            {0, U + 2 * su - 1, U + su, U},
                            {0, U - su, U - 2 * su - 1, U},
                            {T - 1, U - su, U + su, U - 2}}),
  };
  return out;
}

std::array<PgdParams, 3> cor55_params(std::int64_t l) {
  if (l < 1) throw BadInput("the fusion family needs l >= 1");
  const std::int64_t v = checked_pow(3, 2 * l + 1);
  const std::int64_t T = checked_pow(3, 2 * l);
  const std::int64_t t = checked_pow(3, l);
  const std::int64_t a = checked_pow(3, 4 * l - 1);  // 3^(4l-1)
  const std::int64_t b = checked_pow(3, 3 * l);      // 3^3l
  const std::int64_t c = checked_pow(3, 2 * l - 1);  // 3^(2l-1)
  const std::int64_t s = (l % 2 == 0) ? 1 : -1;
  std::array<PgdParams, 3> out;
  out[0] = {v, T + s * t, checked_add(a, s * b + 2 * c),
            checked_add(a, s * b + 5 * c)};
  out[1] = {v, T - s * t, checked_add(a, -s * b + 2 * c),
            checked_add(a, -s * b + 5 * c)};
  out[2] = {v, T, checked_sub(a, c), checked_add(a, 2 * c)};
  return out;
}

}  // namespace pgd
