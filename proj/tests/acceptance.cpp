// Acceptance gate: eleven exact criteria, each with an enforced wall-clock
// budget.  Prints one line per criterion and exits nonzero if any fails.
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgd/code.hpp"
#include "pgd/design.hpp"
#include "pgd/dsrg.hpp"
#include "pgd/errors.hpp"
#include "pgd/graph.hpp"
#include "pgd/hamming.hpp"
#include "pgd/linalg.hpp"
#include "pgd/scheme.hpp"

using namespace pgd;

namespace {

struct Failure {
  std::string reason;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void require_params(const PgdCertificate& c, std::int64_t v, std::int64_t k,
                    std::int64_t alpha, std::int64_t beta,
                    const std::string& label) {
  std::ostringstream want;
  want << "(" << v << "," << k << ";" << alpha << "," << beta << ")";
  std::ostringstream got;
  got << "(" << c.v << "," << c.k << ";" << c.alpha << "," << c.beta << ")";
  require(c.v == v && c.b == v && c.k == k && c.r == k && c.alpha == alpha &&
              c.beta == beta && !c.degenerate,
          label + ": expected " + want.str() + ", got " + got.str());
}

IntMatrix rook4() {
  IntMatrix a(16, 16);
  for (std::size_t x = 0; x < 16; ++x)
    for (std::size_t y = 0; y < 16; ++y) {
      if (x == y) continue;
      if (x / 4 == y / 4 || x % 4 == y % 4) a(x, y) = 1;
    }
  return a;
}

IntMatrix petersen() {
  IntMatrix a(10, 10);
  auto edge = [&a](std::size_t x, std::size_t y) { a(x, y) = a(y, x) = 1; };
  for (std::size_t i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(5 + i, 5 + (i + 2) % 5);
    edge(i, 5 + i);
  }
  return a;
}

IntMatrix cycle(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = 1;
    a((i + 1) % n, i) = 1;
  }
  return a;
}

// The negative [7,5] code whose residue classes are certified designs but
// not a scheme.
LinearCode negative_code() {
  IntMatrix g(5, 7);
  const char* rows[5] = {"1000021", "0100011", "0010010", "0001010",
                         "0000110"};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 7; ++j) g(i, j) = rows[i][j] - '0';
  return LinearCode(3, 7, std::move(g));
}

// 27-run orthogonal array transcribed row for row (the published 5 x 27
// transpose, columns are runs).
IntMatrix transcribed_array() {
  const char* m[5] = {
      "000000000111111111222222222",
      "000111222000111222000111222",
      "012012012012012012012012012",
      "000111222222000111111222000",
      "012120201012120201012120201",
  };
  IntMatrix runs(27, 5);
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = 0; j < 5; ++j) runs(i, j) = m[j][i] - '0';
  return runs;
}

std::int64_t row_distance(const IntMatrix& m, std::size_t x, std::size_t y) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(x, j) != m(y, j)) ++d;
  return d;
}

std::int64_t word_distance(const Word& x, const Word& y) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != y[j]) ++d;
  return d;
}

// --------------------------------------------------------------- criteria

void criterion_h33() {
  AssociationScheme s = hamming_scheme(3, 3);
  require_params(pgd_certify(adjacency_to_incidence(s.adjacency(1), false)),
                 27, 6, 6, 15, "A_1");
  require_params(pgd_certify(adjacency_to_incidence(s.adjacency(2), false)),
                 27, 12, 60, 69, "A_2");
  require_params(pgd_certify(adjacency_to_incidence(s.adjacency(3), true)),
                 27, 9, 24, 33, "A_3 + I");

  const IntMatrix& a1 = s.adjacency(1);
  IntMatrix cube = multiply(multiply(a1, a1), a1);
  IntMatrix j = IntMatrix::ones(27, 27);
  require(cube == add(scale(15, a1), scale(6, subtract(j, a1))),
          "A_1^3 = 15 A_1 + 6(J - A_1) fails");
}

void criterion_h3q() {
  for (std::int64_t q : {2, 3, 4}) {
    AssociationScheme s = hamming_scheme(3, q);
    std::size_t n = s.order();
    const IntMatrix& a1 = s.adjacency(1);
    IntMatrix cube = multiply(multiply(a1, a1), a1);
    IntMatrix rhs = scale(3 * (q * q - 3 * q + 2),
                          IntMatrix::identity(n));
    rhs = add(rhs, scale(q * q + 3 * q - 3, a1));
    rhs = add(rhs, scale(6 * (q - 2), s.adjacency(2)));
    rhs = add(rhs, scale(6, s.adjacency(3)));
    require(cube == rhs,
            "cubic identity fails for q = " + std::to_string(q));

    bool certified = true;
    try {
      pgd_certify(adjacency_to_incidence(a1, false));
    } catch (const NotPartialGeometric&) {
      certified = false;
    }
    require(certified == (q == 3),
            "A_1 of H(3," + std::to_string(q) + ") certified = " +
                (certified ? "yes" : "no") + ", expected " +
                (q == 3 ? "yes" : "no"));
  }
}

void criterion_ksd() {
  AssociationScheme s = ksd_scheme(2);
  IntersectionData data = intersection_data(s);
  std::array<IntMatrix, 3> predicted = ksd_predicted_B(2);
  for (std::size_t i = 1; i <= 3; ++i)
    require(data.b[i] == predicted[i - 1],
            "B_" + std::to_string(i) + " differs from the closed form");

  std::array<PgdParams, 3> expect = cor55_params(2);
  require(expect[0] == PgdParams{243, 90, 2970, 3051} &&
              expect[1] == PgdParams{243, 72, 1512, 1593} &&
              expect[2] == PgdParams{243, 81, 2160, 2241},
          "cor55_params(2) tuples are off");
  for (std::size_t i = 0; i < 3; ++i) {
    PgdCertificate c = pgd_certify(adjacency_to_incidence(
        s.adjacency(i + 1), /*add_identity=*/i == 2));
    require_params(c, expect[i].v, expect[i].k, expect[i].alpha,
                   expect[i].beta, "class " + std::to_string(i + 1));
  }
}

void criterion_family_code() {
  LinearCode c = family_code(2);
  require(weight_distribution(c) ==
              std::vector<std::int64_t>{1, 4, 8, 24, 60, 82, 56, 8},
          "weight distribution differs");
  require(weight_distribution(dual(c)) ==
              std::vector<std::int64_t>{1, 0, 0, 4, 2, 2, 0, 0},
          "dual weight distribution differs");
  auto [strength, lambda] = oa_strength(oa_from_code(c));
  require(strength == 2 && lambda == 27,
          "orthogonal-array strength is (" + std::to_string(strength) + "," +
              std::to_string(lambda) + "), expected (2,27)");

  AssociationScheme s =
      distance_class_scheme(c, {{1, 4, 7}, {2, 5}, {3, 6}});
  IntersectionData data = intersection_data(s);
  IntMatrix b1_row(1, 4, {72, 21, 24, 18});
  for (std::size_t h = 0; h < 4; ++h)
    require(data.b[1](1, h) == b1_row(0, h),
            "B_1 second row differs at column " + std::to_string(h));

  require_params(pgd_certify(adjacency_to_incidence(s.adjacency(1), false)),
                 243, 72, 1512, 1593, "A_1");
  require_params(pgd_certify(adjacency_to_incidence(s.adjacency(2), false)),
                 243, 90, 2970, 3051, "A_2");
  require_params(pgd_certify(adjacency_to_incidence(s.adjacency(3), true)),
                 243, 81, 2160, 2241, "A_3 + I");
}

void criterion_negative_code() {
  LinearCode c = negative_code();
  require(weight_distribution(c) ==
              std::vector<std::int64_t>{1, 0, 12, 34, 42, 96, 46, 12},
          "weight distribution differs");
  require(weight_distribution(dual(c)) ==
              std::vector<std::int64_t>{1, 0, 0, 2, 0, 0, 6, 0},
          "dual weight distribution differs");

  bool rejected = false;
  try {
    distance_class_scheme(c, {{1, 4, 7}, {2, 5}, {3, 6}});
  } catch (const NotAScheme&) {
    rejected = true;
  }
  require(rejected, "the residue classes unexpectedly form a scheme");

  auto words = codewords(c);
  std::size_t n = words.size();
  std::array<IntMatrix, 3> cls{IntMatrix(n, n), IntMatrix(n, n),
                               IntMatrix(n, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      cls[static_cast<std::size_t>(
          (word_distance(words[x], words[y]) + 2) % 3)](x, y) = 1;
    }
  require_params(pgd_certify(adjacency_to_incidence(cls[0], false)), 243, 54,
                 486, 1215, "A_1");
  require_params(pgd_certify(adjacency_to_incidence(cls[1], false)), 243,
                 108, 4860, 5589, "A_2");
  require_params(pgd_certify(adjacency_to_incidence(cls[2], true)), 243, 81,
                 1944, 2673, "A_3 + I");
}

void criterion_example_array() {
  IntMatrix runs = transcribed_array();
  // cross-check the transcription against its algebraic description
  for (std::size_t i = 0; i < 27; ++i) {
    std::int64_t a = static_cast<std::int64_t>(i / 9);
    std::int64_t b = static_cast<std::int64_t>((i / 3) % 3);
    std::int64_t cc = static_cast<std::int64_t>(i % 3);
    require(runs(i, 0) == a && runs(i, 1) == b && runs(i, 2) == cc &&
                runs(i, 3) == (b - a + 3) % 3 && runs(i, 4) == (b + cc) % 3,
            "transcription mismatch at run " + std::to_string(i));
  }

  auto [strength, lambda] = oa_strength(OrthogonalArrayView(runs, 3));
  require(strength == 2 && lambda == 3,
          "strength is (" + std::to_string(strength) + "," +
              std::to_string(lambda) + "), expected (2,3)");

  // classes: distances {2,5}, {3}, {4}
  IntMatrix rel(27, 27);
  for (std::size_t x = 0; x < 27; ++x)
    for (std::size_t y = 0; y < 27; ++y) {
      if (x == y) continue;
      switch (row_distance(runs, x, y)) {
        case 2:
        case 5: rel(x, y) = 1; break;
        case 3: rel(x, y) = 2; break;
        case 4: rel(x, y) = 3; break;
        default:
          throw Failure{"unexpected distance between runs " +
                        std::to_string(x) + " and " + std::to_string(y)};
      }
    }
  AssociationScheme s = scheme_from_relation(rel);
  EigenTable t = character_table(s);
  std::multiset<std::vector<std::int64_t>> got, want;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < 4; ++j) row.push_back(t.p(i, j));
    got.insert(row);
  }
  want.insert({1, 6, 8, 12});
  want.insert({1, 3, -4, 0});
  want.insert({1, -3, -1, 3});
  want.insert({1, 0, 2, -3});
  require(got == want, "character table rows differ from the published set");
  require(is_self_dual(t), "the scheme is not self dual");
}

void criterion_srg_corpus() {
  std::vector<std::pair<std::string, IntMatrix>> corpus;
  corpus.emplace_back("C_5", cycle(5));
  corpus.emplace_back("Petersen", petersen());
  corpus.emplace_back("C_4", cycle(4));
  corpus.emplace_back("K_{3,3}", complete_multipartite(2, 3));
  corpus.emplace_back("3-cocktail", complete_multipartite(3, 3));
  corpus.emplace_back("rook", rook4());

  std::size_t with = 0, without = 0;
  for (const auto& [name, a] : corpus) {
    auto srg = srg_certify(a);
    require(srg.has_value(), name + " is not strongly regular");
    auto params = srg_pgd_params(*srg);

    bool certified = true;
    PgdCertificate cert{};
    try {
      cert = pgd_certify(adjacency_to_incidence(a, false));
    } catch (const NotPartialGeometric&) {
      certified = false;
    }
    require(params.has_value() == certified,
            name + ": closed form and certifier disagree");
    if (certified) {
      ++with;
      require(cert.alpha == params->first && cert.beta == params->second,
              name + ": (alpha, beta) mismatch");
    } else {
      ++without;
    }
  }
  require(with == 4 && without == 2, "expected 4 design graphs and 2 others");
}

void criterion_wreath() {
  for (auto [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
    auto sm = static_cast<std::size_t>(m);
    auto sn = static_cast<std::size_t>(n);
    std::vector<IntMatrix> inner, outer;
    inner.push_back(IntMatrix::identity(sm));
    if (m > 1)
      inner.push_back(
          subtract(IntMatrix::ones(sm, sm), IntMatrix::identity(sm)));
    outer.push_back(IntMatrix::identity(sn));
    outer.push_back(
        subtract(IntMatrix::ones(sn, sn), IntMatrix::identity(sn)));
    AssociationScheme w =
        wreath(scheme_certify(std::move(inner)),
               scheme_certify(std::move(outer)));

    std::size_t d = w.classes();
    const IntMatrix& ad = w.adjacency(d);
    std::string tag = "(m,n) = (" + std::to_string(m) + "," +
                      std::to_string(n) + ")";

    // eq-kiad: A_i A_d = k_i A_d for every inner class
    for (std::size_t i = 1; i < d; ++i)
      require(multiply(w.adjacency(i), ad) ==
                  scale(w.valencies()[i], ad),
              tag + ": A_" + std::to_string(i) + " A_d != k_i A_d");

    // eq-adsq: A_d^2 = m(n-1)(J - A_d) + m(n-2) A_d
    IntMatrix j = IntMatrix::ones(w.order(), w.order());
    require(multiply(ad, ad) ==
                add(scale(m * (n - 1), subtract(j, ad)),
                    scale(m * (n - 2), ad)),
            tag + ": square identity fails");

    // eq-adcu: A_d^3 = alpha (J - A_d) + beta A_d
    PgdParams p = wreath_pgd(m, n);
    require(multiply(multiply(ad, ad), ad) ==
                add(scale(p.alpha, subtract(j, ad)), scale(p.beta, ad)),
            tag + ": cubic identity fails");

    require_params(pgd_certify(adjacency_to_incidence(ad, false)), p.v, p.k,
                   p.alpha, p.beta, tag);
  }
}

void criterion_dsrg_pipeline() {
  AssociationScheme h33 = hamming_scheme(3, 3);
  std::vector<std::pair<std::string, IncidenceStructure>> designs;
  designs.emplace_back("(16,6;12,16)",
                       adjacency_to_incidence(rook4(), false));
  designs.emplace_back("(27,6;6,15)",
                       adjacency_to_incidence(h33.adjacency(1), false));
  designs.emplace_back("(27,9;24,33)",
                       adjacency_to_incidence(h33.adjacency(3), true));
  designs.emplace_back("(27,12;60,69)",
                       adjacency_to_incidence(h33.adjacency(2), false));

  // Table rows at m = 3; antiflag tuples sit at even indices and are keyed
  // by their vertex count v(v - k) = 27(27 - k).
  std::vector<DsrgCertificate> table = table1_catalog(1);
  auto table_antiflag = [&table](std::int64_t k) {
    for (std::size_t i = 0; i < table.size(); i += 2)
      if (table[i].v == 27 * (27 - k)) return table[i];
    return DsrgCertificate{};
  };

  for (const auto& [name, d] : designs) {
    PgdCertificate pc = pgd_certify(d);
    auto [anti, flag] = predicted_dsrg_params(pc.v, pc.k, pc.alpha, pc.beta);

    DsrgOutcome fo = dsrg_certify(flag_graph(d));
    require(fo.certificate.has_value(),
            name + " flag graph: " + fo.violation);
    require(*fo.certificate == flag, name + ": flag parameters differ");

    DsrgOutcome ao = dsrg_certify(antiflag_graph(d));
    require(ao.certificate.has_value(),
            name + " antiflag graph: " + ao.violation);
    require(*ao.certificate == anti, name + ": antiflag parameters differ");

    if (pc.v == 27) {
      DsrgCertificate row = table_antiflag(pc.k);
      require(*ao.certificate == row,
              name + ": antiflag certificate differs from the catalog row");
    }
  }
}

void criterion_isomorphism() {
  require(ksd_isomorphism_check(1), "the basis map fails for l = 1");
  require(ksd_isomorphism_check(2), "the basis map fails for l = 2");
}

void criterion_properties() {
  // --- exact linear-algebra laws on random small matrices
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  auto rand_matrix = [&](std::size_t r, std::size_t c) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    return m;
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
    IntMatrix a = rand_matrix(p, q), b = rand_matrix(q, r),
              c = rand_matrix(r, s);
    require(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
            "associativity fails");
    IntMatrix b2 = rand_matrix(q, r);
    require(multiply(a, add(b, b2)) ==
                add(multiply(a, b), multiply(a, b2)),
            "distributivity fails");
    require(transpose(multiply(a, b)) ==
                multiply(transpose(b), transpose(a)),
            "transpose of product fails");
    IntMatrix d = rand_matrix(s, p);
    require(multiply(kronecker(a, c), kronecker(b, d)) ==
                kronecker(multiply(a, b), multiply(c, d)),
            "Kronecker mixed product fails");
    require(transpose(kronecker(a, b)) ==
                kronecker(transpose(a), transpose(b)),
            "Kronecker transpose fails");
  }

  // --- scheme round-trips and Bose-Mesner coefficients
  std::vector<IntMatrix> k3_inner;
  k3_inner.push_back(IntMatrix::identity(3));
  k3_inner.push_back(subtract(IntMatrix::ones(3, 3), IntMatrix::identity(3)));
  std::vector<IntMatrix> k2_outer;
  k2_outer.push_back(IntMatrix::identity(2));
  k2_outer.push_back(subtract(IntMatrix::ones(2, 2), IntMatrix::identity(2)));
  std::vector<AssociationScheme> schemes;
  schemes.push_back(hamming_scheme(3, 3));
  schemes.push_back(hamming_scheme(2, 4));
  schemes.push_back(wreath(scheme_certify(std::move(k3_inner)),
                           scheme_certify(std::move(k2_outer))));
  for (const AssociationScheme& s : schemes) {
    AssociationScheme back = scheme_from_relation(s.relation_matrix());
    require(back.relation_matrix() == s.relation_matrix(),
            "relation round-trip changes the scheme");
    std::size_t d = s.classes();
    IntersectionData data = intersection_data(s);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) {
        IntMatrix sum(s.order(), s.order());
        for (std::size_t h = 0; h <= d; ++h)
          sum = add(sum, scale(s.p(i, j, h), s.adjacency(h)));
        require(multiply(s.adjacency(i), s.adjacency(j)) == sum,
                "product does not match the intersection numbers");
        for (std::size_t h = 0; h <= d; ++h)
          require(data.b[i](j, h) == s.p(i, j, h),
                  "intersection matrix entry disagrees");
      }
      for (std::int64_t cs : col_sums(data.b[i]))
        require(cs == s.valencies()[i],
                "intersection matrix column sum is not the valency");
    }
  }

  // --- brute-force design oracle over all small circulants
  for (std::size_t v : {5, 6, 7}) {
    for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
      IntMatrix n(v, v);
      for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
          if (mask & (1u << ((j + v - i) % v))) n(i, j) = 1;

      if (mask == 0) continue;  // empty blocks are rejected at construction
      IncidenceStructure d(n);

      // direct definition: N N^T N constant over flags and over non-flags
      IntMatrix m = multiply(multiply(n, transpose(n)), n);
      std::set<std::int64_t> on, off;
      for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
          (n(i, j) == 1 ? on : off).insert(m(i, j));
      bool expect = on.size() <= 1 && off.size() <= 1;

      bool got = true;
      PgdCertificate cert{};
      try {
        cert = pgd_certify(d);
      } catch (const NotPartialGeometric&) {
        got = false;
      }
      require(got == expect,
              "oracle disagrees on circulant mask " + std::to_string(mask) +
                  " of order " + std::to_string(v));
      if (expect && !off.empty())
        require(cert.beta == *on.begin() && cert.alpha == *off.begin(),
                "certificate constants differ from the oracle");
    }
  }
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "H(3,3) certificates and cubic identity", 1.0, criterion_h33},
      {2, "H(3,q) iff-claim for q in {2,3,4}", 5.0, criterion_h3q},
      {3, "weight-residue fusion scheme at l = 2", 30.0, criterion_ksd},
      {4, "code family l = 2 end to end", 30.0, criterion_family_code},
      {5, "negative [7,5] code", 30.0, criterion_negative_code},
      {6, "27-run orthogonal array example", 5.0, criterion_example_array},
      {7, "strongly regular graph corpus", 5.0, criterion_srg_corpus},
      {8, "wreath product identities", 5.0, criterion_wreath},
      {9, "flag and antiflag digraphs", 60.0, criterion_dsrg_pipeline},
      {10, "message-space isomorphism", 10.0, criterion_isomorphism},
      {11, "algebraic property suites", 60.0, criterion_properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.reason;
    } catch (const std::exception& e) {
      error = std::string("unexpected exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    bool ok = error.empty() && elapsed < c.budget_s;
    if (error.empty() && elapsed >= c.budget_s)
      error = "exceeded " + std::to_string(c.budget_s) + " s budget";
    std::printf("criterion %2d: %s  %7.3f s  %s%s%s\n", c.id,
                ok ? "PASS" : "FAIL", elapsed, c.label,
                error.empty() ? "" : " -- ", error.c_str());
    if (!ok) ++failures;
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
