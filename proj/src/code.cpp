#include "pgd/code.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pgd/errors.hpp"

namespace pgd {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1 % p;
  base = ((base % p) + p) % p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  return mod_pow(a, p - 2, p);  // p prime, a != 0 (mod p)
}

struct Rref {
  IntMatrix m;
  std::vector<std::size_t> pivots;  // pivot column of each pivot row
};

// Reduced row echelon form over GF(p), leftmost pivots.
Rref rref_mod(IntMatrix a, std::int64_t p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = ((a(i, j) % p) + p) % p;
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a(i, c) % p != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
    const std::int64_t inv = mod_inverse(a(r, c) % p, p);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) = a(r, j) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) % p == 0) continue;
      const std::int64_t f = a(i, c) % p;
      for (std::size_t j = 0; j < cols; ++j)
        a(i, j) = ((a(i, j) - f * a(r, j)) % p + p) % p;
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

// All p^k digit vectors in lexicographic order (leftmost most significant).
std::vector<std::vector<std::uint8_t>> all_messages(std::size_t k,
                                                    std::int64_t p,
                                                    std::int64_t cap) {
  std::int64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    count = checked_mul(count, p);
    if (count > cap)
      throw SizeCap("enumeration of " + std::to_string(p) + "^" +
                    std::to_string(k) + " words exceeds the cap " +
                    std::to_string(cap));
  }
  std::vector<std::vector<std::uint8_t>> out(
      static_cast<std::size_t>(count), std::vector<std::uint8_t>(k, 0));
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i] = out[i - 1];
    for (std::size_t pos = k; pos-- > 0;) {
      if (++out[i][pos] < p) break;
      out[i][pos] = 0;
    }
  }
  return out;
}

}  // namespace

LinearCode::LinearCode(std::int64_t p, std::size_t length, IntMatrix generator)
    : p_(p), n_(length), g_(std::move(generator)) {
  if (!is_prime(p_)) throw BadInput("modulus " + std::to_string(p_) +
                                    " is not prime");
  if (p_ > 255) throw BadInput("modulus must fit a byte");
  if (n_ == 0) throw BadInput("code length must be at least 1");
  if (g_.rows() == 0) {
    g_ = IntMatrix(0, n_);
  } else if (g_.cols() != n_) {
    throw DimensionMismatch("generator has " + std::to_string(g_.cols()) +
                            " columns for length " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < g_.rows(); ++i)
    for (std::size_t j = 0; j < g_.cols(); ++j)
      g_(i, j) = ((g_(i, j) % p_) + p_) % p_;
  if (rref_mod(g_, p_).pivots.size() != g_.rows())
    throw BadInput("generator rows are linearly dependent");
}

Word LinearCode::encode(const std::vector<std::uint8_t>& message) const {
  if (message.size() != dimension())
    throw DimensionMismatch("message of length " +
                            std::to_string(message.size()) + " for a " +
                            std::to_string(dimension()) + "-dimensional code");
  Word out(n_, 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      out[j] = static_cast<std::uint8_t>(
          (out[j] + message[i] * g_(i, j)) % p_);
  }
  return out;
}

std::int64_t weight(const Word& w) {
  std::int64_t count = 0;
  for (const auto s : w)
    if (s != 0) ++count;
  return count;
}

std::vector<Word> codewords(const LinearCode& c, std::int64_t cap) {
  const auto msgs = all_messages(c.dimension(), c.modulus(), cap);
  std::vector<Word> out;
  out.reserve(msgs.size());
  for (const auto& m : msgs) out.push_back(c.encode(m));
  return out;
}

std::vector<std::int64_t> weight_distribution(const LinearCode& c,
                                              std::int64_t cap) {
  std::vector<std::int64_t> dist(c.length() + 1, 0);
  for (const auto& w : codewords(c, cap))
    ++dist[static_cast<std::size_t>(weight(w))];
  return dist;
}

LinearCode dual(const LinearCode& c) {
  const std::int64_t p = c.modulus();
  const std::size_t n = c.length();
  const Rref red = rref_mod(c.generator(), p);
  std::vector<bool> is_pivot(n, false);
  for (const auto col : red.pivots) is_pivot[col] = true;
  IntMatrix g(n - red.pivots.size(), n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    g(row, f) = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      g(row, red.pivots[i]) = (p - red.m(i, f) % p) % p;
    ++row;
  }
  return LinearCode(p, n, std::move(g));
}

std::optional<std::int64_t> dual_distance(const LinearCode& c,
                                          std::int64_t cap) {
  const LinearCode d = dual(c);
  if (d.dimension() == 0) return std::nullopt;
  const auto dist = weight_distribution(d, cap);
  for (std::size_t w = 1; w < dist.size(); ++w)
    if (dist[w] > 0) return static_cast<std::int64_t>(w);
  throw Error("internal: nonzero dual with no nonzero weight");
}

OrthogonalArrayView::OrthogonalArrayView(IntMatrix runs, std::int64_t q)
    : runs_(std::move(runs)), q_(q) {
  if (runs_.rows() == 0 || runs_.cols() == 0)
    throw BadInput("an array needs at least one run and one column");
  if (q_ < 1) throw BadInput("symbol count must be at least 1");
  for (std::size_t i = 0; i < runs_.rows(); ++i)
    for (std::size_t j = 0; j < runs_.cols(); ++j)
      if (runs_(i, j) < 0 || runs_(i, j) >= q_)
        throw BadEntries("run " + std::to_string(i) + ", column " +
                         std::to_string(j) + " holds " +
                         std::to_string(runs_(i, j)) + ", outside 0.." +
                         std::to_string(q_ - 1));
}

OrthogonalArrayView oa_from_code(const LinearCode& c, std::int64_t cap) {
  const auto words = codewords(c, cap);
  IntMatrix runs(words.size(), c.length());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words[i].size(); ++j)
      runs(i, j) = words[i][j];
  return OrthogonalArrayView(std::move(runs), c.modulus());
}

std::pair<std::int64_t, std::int64_t> oa_strength(
    const OrthogonalArrayView& a) {
  const std::int64_t big_n = a.run_count();
  const std::int64_t m = a.columns();
  const std::int64_t q = a.symbols();
  std::pair<std::int64_t, std::int64_t> best = {0, big_n};
  for (std::int64_t t = 1; t <= m; ++t) {
    const std::int64_t qt = checked_pow(q, t);
    if (qt > big_n || big_n % qt != 0) break;
    const std::int64_t lambda = big_n / qt;
    // first t-subset of columns, then advance odometer-style
    std::vector<std::int64_t> cols(static_cast<std::size_t>(t));
    for (std::int64_t i = 0; i < t; ++i) cols[static_cast<std::size_t>(i)] = i;
    bool balanced = true;
    while (balanced) {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(qt), 0);
      for (std::int64_t r = 0; r < big_n; ++r) {
        std::int64_t idx = 0;
        for (const auto col : cols)
          idx = idx * q + a.runs()(static_cast<std::size_t>(r),
                                   static_cast<std::size_t>(col));
        ++counts[static_cast<std::size_t>(idx)];
      }
      for (const auto count : counts)
        if (count != lambda) {
          balanced = false;
          break;
        }
      // next t-combination of {0..m-1} in lexicographic order
      std::int64_t pos = t - 1;
      while (pos >= 0 &&
             cols[static_cast<std::size_t>(pos)] == m - t + pos)
        --pos;
      if (pos < 0) break;
      ++cols[static_cast<std::size_t>(pos)];
      for (std::int64_t i = pos + 1; i < t; ++i)
        cols[static_cast<std::size_t>(i)] =
            cols[static_cast<std::size_t>(i - 1)] + 1;
    }
    if (!balanced) break;
    best = {t, lambda};
  }
  return best;
}

LinearCode family_code(std::int64_t l) {
  if (l < 1) throw BadInput("the code family needs l >= 1");
  const std::size_t k = static_cast<std::size_t>(2 * l + 1);
  IntMatrix g(k, k + 2);
  for (std::size_t i = 0; i < k; ++i) g(i, i) = 1;
  g(0, k) = 1;
  g(0, k + 1) = 1;
  g(1, k + 1) = 1;
  g(2, k) = 1;
  return LinearCode(3, k + 2, std::move(g));
}

WeightClassPartition weight_classes(const LinearCode& c, std::int64_t cap) {
  WeightClassPartition out;
  for (auto& w : codewords(c, cap)) {
    const std::int64_t wt = weight(w);
    std::size_t cls = 0;
    if (wt != 0) cls = static_cast<std::size_t>((wt - 1) % 3 + 1);
    out.classes[cls].push_back(std::move(w));
  }
  return out;
}

std::array<std::int64_t, 4> weight_class_sizes(const LinearCode& c,
                                               std::int64_t cap) {
  const auto dist = weight_distribution(c, cap);
  std::array<std::int64_t, 4> out = {1, 0, 0, 0};
  for (std::size_t w = 1; w < dist.size(); ++w)
    out[static_cast<std::size_t>((w - 1) % 3 + 1)] += dist[w];
  return out;
}

AssociationScheme distance_class_scheme(
    const LinearCode& c, const std::vector<std::vector<std::size_t>>& classes,
    std::int64_t cap) {
  const std::size_t n = c.length();
  if (classes.empty() || classes.size() > 3)
    throw BadInput("expected between 1 and 3 distance classes, got " +
                   std::to_string(classes.size()));
  std::vector<int> class_of_weight(n + 1, -1);
  class_of_weight[0] = 0;
  for (std::size_t t = 0; t < classes.size(); ++t) {
    if (classes[t].empty())
      throw BadInput("distance class " + std::to_string(t + 1) + " is empty");
    for (const std::size_t dist : classes[t]) {
      if (dist < 1 || dist > n)
        throw BadInput("distance " + std::to_string(dist) +
                       " is outside 1.." + std::to_string(n));
      if (class_of_weight[dist] != -1)
        throw BadInput("distance " + std::to_string(dist) +
                       " appears in two classes");
      class_of_weight[dist] = static_cast<int>(t + 1);
    }
  }

  const auto msgs = all_messages(c.dimension(), c.modulus(), cap);
  const std::size_t big_n = msgs.size();
  const std::int64_t p = c.modulus();
  // Linearity: the relation of (x, y) is the weight class of the codeword
  // x - y, so one weight per codeword suffices.
  std::vector<int> word_class(big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    const std::int64_t w = weight(c.encode(msgs[i]));
    const int cls = class_of_weight[static_cast<std::size_t>(w)];
    if (cls == -1 && i != 0)
      throw UncoveredDistance(
          "distance " + std::to_string(w) +
              " occurs between codewords but lies in no class",
          static_cast<std::size_t>(w));
    word_class[i] = cls;
  }

  const std::size_t k = c.dimension();
  std::vector<IntMatrix> mats(classes.size() + 1, IntMatrix(big_n, big_n));
  std::vector<std::size_t> pow(k, 1);
  for (std::size_t t = k; t-- > 1;)
    pow[t - 1] = pow[t] * static_cast<std::size_t>(p);
  for (std::size_t i = 0; i < big_n; ++i) {
    mats[0](i, i) = 1;
    for (std::size_t j = i + 1; j < big_n; ++j) {
      std::size_t diff = 0;
      for (std::size_t t = 0; t < k; ++t)
        diff += static_cast<std::size_t>(
                    (msgs[i][t] - msgs[j][t] + p) % p) *
                pow[t];
      const auto cls = static_cast<std::size_t>(word_class[diff]);
      mats[cls](i, j) = 1;
      mats[cls](j, i) = 1;
    }
  }
  return scheme_certify(std::move(mats));
}

IntMatrix ksd_isomorphism_matrix(std::int64_t l) {
  if (l < 1) throw BadInput("the code family needs l >= 1");
  const std::size_t k = static_cast<std::size_t>(2 * l + 1);
  IntMatrix t(k, k);
  t(0, 0) = 1;
  t(1, 0) = 1;
  t(2, 0) = 1;
  t(1, 1) = 1;
  t(2, 2) = 1;
  for (std::size_t col = 3; col < k; ++col) {
    const std::size_t basis = col + 1;  // 1-based basis vector index
    if (basis % 2 == 0) {
      t(col, col) = 1;
      t(col + 1, col) = 1;
    } else {
      t(col - 1, col) = 1;
      t(col, col) = 2;
    }
  }
  return t;
}

bool ksd_isomorphism_check(std::int64_t l, const IntMatrix& basis_images) {
  const LinearCode c = family_code(l);
  const std::size_t k = c.dimension();
  if (basis_images.rows() != k || basis_images.cols() != k)
    throw DimensionMismatch("basis image matrix must be " + std::to_string(k) +
                            "x" + std::to_string(k));
  if (rref_mod(basis_images, 3).pivots.size() != k) return false;
  for (const auto& msg : all_messages(k, 3, kDefaultSchemeCap)) {
    std::int64_t source_weight = 0;
    for (const auto digit : msg)
      if (digit != 0) ++source_weight;
    std::vector<std::uint8_t> image(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        acc += basis_images(r, i) * msg[i];
      image[r] = static_cast<std::uint8_t>(((acc % 3) + 3) % 3);
    }
    const std::int64_t image_weight = weight(c.encode(image));
    if ((image_weight - 2 * source_weight) % 3 != 0) return false;
  }
  return true;
}

bool ksd_isomorphism_check(std::int64_t l) {
  return ksd_isomorphism_check(l, ksd_isomorphism_matrix(l));
}

namespace {

std::string digit_row(const IntMatrix& m, std::size_t row) {
  std::string out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    out += static_cast<char>('0' + m(row, j));
  return out;
}

// One row of `cols` digits below `limit`, read from a trimmed line.
std::vector<std::int64_t> parse_digits(const std::string& line,
                                       std::size_t cols, std::int64_t limit,
                                       std::size_t lineno) {
  std::string body = line;
  while (!body.empty() &&
         std::isspace(static_cast<unsigned char>(body.back())))
    body.pop_back();
  std::size_t start = 0;
  while (start < body.size() &&
         std::isspace(static_cast<unsigned char>(body[start])))
    ++start;
  body = body.substr(start);
  if (body.size() != cols)
    throw ParseError("expected " + std::to_string(cols) + " digits, got " +
                         std::to_string(body.size()),
                     lineno);
  std::vector<std::int64_t> out(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (body[j] < '0' || body[j] > '9')
      throw ParseError(std::string("character '") + body[j] +
                           "' is not a digit",
                       lineno);
    out[j] = body[j] - '0';
    if (out[j] >= limit)
      throw ParseError("digit " + std::to_string(out[j]) +
                           " is outside 0.." + std::to_string(limit - 1),
                       lineno);
  }
  return out;
}

}  // namespace

void save_code(const std::string& path, const LinearCode& c) {
  if (c.modulus() > 7)
    throw BadInput("code files use single digits; modulus must be at most 7");
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << c.modulus() << " " << c.length() << " " << c.dimension() << "\n";
  for (std::size_t i = 0; i < c.dimension(); ++i)
    out << digit_row(c.generator(), i) << "\n";
  if (!out.flush()) throw Error("write to " + path + " failed");
}

LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header in " + path, 1);
  std::istringstream header(line);
  std::int64_t p = 0, n = 0, k = 0;
  if (!(header >> p >> n >> k) || p < 2 || n < 1 || k < 0)
    throw ParseError("header must be 'p n k' in " + path, 1);
  std::string rest;
  if (header >> rest)
    throw ParseError("trailing content after header in " + path, 1);
  IntMatrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < k; ++i) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(k) + " generator rows in " +
                           path,
                       static_cast<std::size_t>(i) + 2);
    const auto row = parse_digits(line, static_cast<std::size_t>(n), p,
                                  static_cast<std::size_t>(i) + 2);
    for (std::int64_t j = 0; j < n; ++j)
      g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          row[static_cast<std::size_t>(j)];
  }
  return LinearCode(p, static_cast<std::size_t>(n), std::move(g));
}

void save_oa(const std::string& path, const OrthogonalArrayView& a) {
  if (a.symbols() > 10)
    throw BadInput("array files use single digits; q must be at most 10");
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << a.run_count() << " " << a.columns() << " " << a.symbols() << "\n";
  for (std::size_t i = 0; i < a.runs().rows(); ++i)
    out << digit_row(a.runs(), i) << "\n";
  if (!out.flush()) throw Error("write to " + path + " failed");
}

OrthogonalArrayView load_oa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header in " + path, 1);
  std::istringstream header(line);
  std::int64_t n = 0, m = 0, q = 0;
  if (!(header >> n >> m >> q) || n < 1 || m < 1 || q < 1)
    throw ParseError("header must be 'N m q' in " + path, 1);
  std::string rest;
  if (header >> rest)
    throw ParseError("trailing content after header in " + path, 1);
  IntMatrix runs(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(n) + " runs in " + path,
                       static_cast<std::size_t>(i) + 2);
    const auto row = parse_digits(line, static_cast<std::size_t>(m), q,
                                  static_cast<std::size_t>(i) + 2);
    for (std::int64_t j = 0; j < m; ++j)
      runs(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          row[static_cast<std::size_t>(j)];
  }
  return OrthogonalArrayView(std::move(runs), q);
}

}  // namespace pgd
