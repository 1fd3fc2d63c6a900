#include <doctest.h>

#include <set>

#include "sixreg/enumerator.hpp"
#include "sixreg/named_graphs.hpp"

using namespace sixreg;

TEST_CASE("small census") {
  EnumerationRequest req;
  req.max_n = 3;
  const auto all = enumerate(req);
  int n1 = 0;
  for (const auto& s : all) {
    CHECK(s.map.is_sphere123());
    CHECK(s.map.vertex_count() == s.n);
    n1 += s.n == 1;
  }
  CHECK(n1 == 2);  // Trifolium and the p1=2 sphere on one vertex
}

TEST_CASE("thread count does not change the output") {
  EnumerationRequest req;
  req.max_n = 8;
  const auto one = enumerate(req);
  req.threads = 3;
  const auto three = enumerate(req);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].code == three[i].code);
}

TEST_CASE("oracle agrees on n=4") {
  for (int p1 = 0; p1 <= 3; ++p1) {
    EnumerationRequest req;
    req.max_n = 4;
    req.p1_filter = p1;
    std::set<CanonicalCode> pipeline, oracle;
    for (const auto& s : enumerate(req))
      if (s.n == 4) pipeline.insert(s.code);
    for (const auto& m : brute_force_oracle(4, p1)) oracle.insert(canonical_code(m, true));
    CHECK(pipeline == oracle);
  }
  CHECK_THROWS_AS(brute_force_oracle(kOracleMaxVertices + 1, 0), EnumerationError);
}

TEST_CASE("named series sizes") {
  CHECK(named_graph_vertices({NamedKind::R, 2}) == 5);
  CHECK(named_graph_vertices({NamedKind::Ti, 3}) == 9);
  CHECK(named_graph({NamedKind::Ti, 2}).vertex_count() == 3);
  CHECK(NamedGraphId::parse("R(2)").to_string() == "R(2)");
  CHECK_THROWS_AS(NamedGraphId::parse("Q(1)"), BadParameter);
}
