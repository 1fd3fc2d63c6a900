#include <doctest.h>

#include "sixreg/circuits.hpp"
#include "sixreg/goldberg_coxeter.hpp"
#include "sixreg/named_graphs.hpp"

using namespace sixreg;

TEST_CASE("six parallel edges") {
  const auto m = named_graph({NamedKind::SixK2, 0});
  CHECK(zigzags(m).vector.to_string() == "6^2");
  CHECK(central_circuits(m).vector.to_string() == "2^3");
  CHECK(tightness(m, CircuitKind::Zigzag).status == Tightness::Tight);
}

TEST_CASE("tetrahedral sphere") {
  const auto m = named_graph({NamedKind::K2Tetrahedron, 0});
  CHECK(zigzags(m).vector.to_string() == "6^4");
  CHECK(central_circuits(m).vector.to_string() == "3^4");
  CHECK(tightness(m, CircuitKind::Central).status == Tightness::WeaklyTight);
  const auto th = oriented_tripling(m, 0);
  CHECK(zigzags(th).vector.to_string() == "12^6");
  CHECK(central_circuits(th).vector.to_string() == "6^6");
}

TEST_CASE("canonical orientation gives type II only") {
  const auto m = gc(named_graph({NamedKind::Trifolium, 0}), 2, 1).members[0];
  for (const auto& set : {zigzags(m), central_circuits(m)})
    for (const auto& row : set.matrix)
      for (const auto& e : row) CHECK(e.type1 == 0);
}

TEST_CASE("reversing one circuit swaps crossing types") {
  const auto m = named_graph({NamedKind::K2Tetrahedron, 0});
  auto cs = central_circuits(m).circuits;
  cs[0] = reversed(m, cs[0]);
  const auto mat = intersection_matrix(m, cs);
  for (std::size_t j = 1; j < cs.size(); ++j) {
    CHECK(mat[0][j].type2 == 0);
    CHECK(mat[0][j].type1 > 0);
  }
}

TEST_CASE("vector parsing") {
  const auto v = CircuitVector::parse("10^3, 11_{0,1}^3, 22_{0,3}^3");
  CHECK(v.count() == 9);
  CHECK(v.total_length() == 129);
  CHECK(v.to_string() == "10^3, 11_{0,1}^3, 22_{0,3}^3");
  CHECK(CircuitVector::parse("12_{0,2}^2, 6^2") == CircuitVector::parse("6^2, 12_{0,2}^2"));
}

TEST_CASE("simple central circuit bounds three 2-gons") {
  const auto m = named_graph({NamedKind::SixK2, 0});
  const auto c = central_circuits(m).circuits[0];
  const auto r = patch_euler_check(m, interior_faces(m, c, 0));
  CHECK(r.holds);
  CHECK(r.p2_count == 3);
}

TEST_CASE("gc line transform matches the traced vectors") {
  const auto m = named_graph({NamedKind::SixK2, 0});
  const auto t = gc_line_vectors(zigzags(m).vector, central_circuits(m).vector, 1);
  const auto g = gc(m, 4, 0).members[0];
  CHECK(zigzags(g).vector == t.z);
  CHECK(central_circuits(g).vector == t.c);
}
