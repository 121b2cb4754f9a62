#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pgd/design.hpp"
#include "pgd/dsrg.hpp"
#include "pgd/errors.hpp"
#include "pgd/graph.hpp"
#include "pgd/linalg.hpp"
#include "pgd/scheme.hpp"

using namespace pgd;

namespace {

IncidenceStructure circulant(const std::vector<std::int64_t>& col) {
  std::size_t v = col.size();
  IntMatrix n(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) n(i, j) = col[(j + v - i) % v];
  return IncidenceStructure(n);
}

IncidenceStructure fano() { return circulant({0, 1, 1, 0, 1, 0, 0}); }

// 4x4 rook's graph = H(2,4); its closed neighborhoods are irrelevant here,
// the open ones form a 2-(16,6,2) biplane.
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
  auto edge = [&a](std::size_t x, std::size_t y) {
    a(x, y) = 1;
    a(y, x) = 1;
  };
  for (std::size_t i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);        // outer cycle
    edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edge(i, 5 + i);              // spokes
  }
  return a;
}

// Rebuild a flag/antiflag adjacency straight from the arc rule, as an
// oracle for the library construction.
IntMatrix arc_rule_adjacency(const IncidenceStructure& d, bool want_flags) {
  const IntMatrix& n = d.matrix();
  std::vector<std::pair<std::size_t, std::size_t>> verts;
  for (std::size_t p = 0; p < n.rows(); ++p)
    for (std::size_t b = 0; b < n.cols(); ++b)
      if ((n(p, b) == 1) == want_flags) verts.push_back({p, b});
  IntMatrix a(verts.size(), verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (i == j) continue;
      a(i, j) = n(verts[i].first, verts[j].second);
    }
  return a;
}

}  // namespace

TEST_CASE("digraphs validate their adjacency") {
  CHECK_THROWS_AS(Digraph(IntMatrix(2, 3)), BadAdjacency);
  CHECK_THROWS_AS(Digraph{IntMatrix()}, BadAdjacency);
  CHECK_THROWS_AS(Digraph(IntMatrix(2, 2, {0, 2, 0, 0})), BadAdjacency);
  CHECK_THROWS_AS(Digraph(IntMatrix(2, 2, {1, 1, 0, 0})), BadAdjacency);
  Digraph g(IntMatrix(2, 2, {0, 1, 1, 0}));
  CHECK(g.vertices() == 2);
}

TEST_CASE("the directed 3-cycle is strongly regular") {
  Digraph cycle(IntMatrix(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  DsrgOutcome out = dsrg_certify(cycle);
  REQUIRE(out.certificate.has_value());
  CHECK(*out.certificate == DsrgCertificate{3, 1, 0, 0, 1});
  CHECK(out.violation.empty());
}

TEST_CASE("degree violations are reported first") {
  DsrgOutcome path =
      dsrg_certify(Digraph(IntMatrix(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0})));
  CHECK_FALSE(path.certificate.has_value());
  CHECK(path.violation ==
        "vertex 2 has out-degree 0, expected 1");

  DsrgOutcome indeg =
      dsrg_certify(Digraph(IntMatrix(3, 3, {0, 1, 0, 1, 0, 0, 1, 0, 0})));
  CHECK_FALSE(indeg.certificate.has_value());
  CHECK(indeg.violation == "vertex 0 has in-degree 2, expected 1");
}

TEST_CASE("flag and antiflag graphs follow the arc rule") {
  IncidenceStructure d = fano();
  Digraph fl = flag_graph(d);
  Digraph af = antiflag_graph(d);
  CHECK(fl.vertices() == 21);
  CHECK(af.vertices() == 28);
  CHECK(fl.adjacency() == arc_rule_adjacency(d, true));
  CHECK(af.adjacency() == arc_rule_adjacency(d, false));
}

TEST_CASE("flag graphs require a tactical design") {
  IntMatrix n(3, 3);
  n(0, 0) = 1;
  n(1, 0) = 1;
  n(0, 1) = 1;
  n(2, 2) = 1;
  CHECK_THROWS_AS(flag_graph(IncidenceStructure(n)), NotTactical);
}

TEST_CASE("a design incident everywhere has no antiflags") {
  IncidenceStructure all(IntMatrix::ones(3, 1));
  CHECK_THROWS_AS(antiflag_graph(all), EmptyVertexSet);
}

TEST_CASE("oversized vertex sets are refused") {
  // identity incidence: 150*149 = 22350 antiflags
  IncidenceStructure d(IntMatrix::identity(150));
  CHECK_THROWS_AS(antiflag_graph(d), SizeCap);
  // allow_large merely lifts the cap; small graphs pass either way
  Digraph g = flag_graph(fano(), true);
  CHECK(g.vertices() == 21);
}

TEST_CASE("design graphs of the Fano plane certify as predicted") {
  IncidenceStructure d = fano();
  PgdCertificate pc = pgd_certify(d);
  auto [anti, flag] = predicted_dsrg_params(pc.v, pc.k, pc.alpha, pc.beta);
  CHECK(anti == DsrgCertificate{28, 12, 6, 4, 6});
  CHECK(flag == DsrgCertificate{21, 8, 4, 3, 3});

  DsrgOutcome fo = dsrg_certify(flag_graph(d));
  REQUIRE(fo.certificate.has_value());
  CHECK(*fo.certificate == flag);
  DsrgOutcome ao = dsrg_certify(antiflag_graph(d));
  REQUIRE(ao.certificate.has_value());
  CHECK(*ao.certificate == anti);
}

TEST_CASE("design graphs of the rook biplane certify as predicted") {
  IncidenceStructure d = adjacency_to_incidence(rook4(), false);
  PgdCertificate pc = pgd_certify(d);
  CHECK(pc == PgdCertificate{16, 16, 6, 6, 12, 16, false});
  auto [anti, flag] = predicted_dsrg_params(16, 6, 12, 16);
  CHECK(anti == DsrgCertificate{160, 60, 24, 20, 24});
  CHECK(flag == DsrgCertificate{96, 35, 15, 14, 12});

  DsrgOutcome fo = dsrg_certify(flag_graph(d));
  REQUIRE(fo.certificate.has_value());
  CHECK(*fo.certificate == flag);
  DsrgOutcome ao = dsrg_certify(antiflag_graph(d));
  REQUIRE(ao.certificate.has_value());
  CHECK(*ao.certificate == anti);
}

TEST_CASE("non-geometric designs yield no certificate") {
  // Petersen neighborhoods are tactical but not partial geometric
  IncidenceStructure d = adjacency_to_incidence(petersen(), false);
  CHECK_THROWS_AS(pgd_certify(d), NotPartialGeometric);
  DsrgOutcome out = dsrg_certify(flag_graph(d));
  CHECK_FALSE(out.certificate.has_value());
  CHECK(out.violation.rfind("2-path count", 0) == 0);
}

TEST_CASE("predicted parameter tuples") {
  auto [anti, flag] = predicted_dsrg_params(27, 6, 6, 15);
  CHECK(anti == DsrgCertificate{567, 126, 30, 21, 30});
  CHECK(flag == DsrgCertificate{162, 35, 14, 13, 6});

  CHECK_THROWS_AS(predicted_dsrg_params(0, 0, 0, 0), BadInput);
  CHECK_THROWS_AS(predicted_dsrg_params(5, 6, 0, 0), BadInput);
  CHECK_THROWS_AS(predicted_dsrg_params(5, 3, -1, 0), BadInput);
}

TEST_CASE("catalog of the derived parameter rows") {
  std::vector<DsrgCertificate> rows = table1_catalog(1);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == DsrgCertificate{567, 126, 30, 21, 30});
  CHECK(rows[1] == DsrgCertificate{162, 35, 14, 13, 6});
  CHECK(rows[2] == DsrgCertificate{405, 180, 84, 75, 84});
  CHECK(rows[3] == DsrgCertificate{324, 143, 68, 67, 60});
  CHECK(rows[4] == DsrgCertificate{486, 162, 57, 48, 57});
  CHECK(rows[5] == DsrgCertificate{243, 80, 32, 31, 24});

  // rows are exactly the predicted tuples of the order-3m^2 designs
  std::vector<DsrgCertificate> two = table1_catalog(2);
  REQUIRE(two.size() == 12);
  std::size_t at = 0;
  for (std::int64_t l = 1; l <= 2; ++l) {
    std::int64_t m = l == 1 ? 3 : 9;
    for (const PgdParams& dp : z_family_params(m)) {
      auto [anti, flag] =
          predicted_dsrg_params(dp.v, dp.k, dp.alpha, dp.beta);
      CHECK(two[at++] == anti);
      CHECK(two[at++] == flag);
    }
  }

  CHECK_THROWS_AS(table1_catalog(0), BadInput);
}
