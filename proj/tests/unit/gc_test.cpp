#include <doctest.h>

#include <set>

#include "sixreg/goldberg_coxeter.hpp"
#include "sixreg/named_graphs.hpp"
#include "sixreg/symmetry.hpp"

using namespace sixreg;

namespace {
std::set<CanonicalCode> codes(const std::vector<PlanarMap>& ms) {
  std::set<CanonicalCode> out;
  for (const auto& m : ms) out.insert(canonical_code(m, false));
  return out;
}
}  // namespace

TEST_CASE("gc vertex counts and groups") {
  const auto six = named_graph({NamedKind::SixK2, 0});
  const auto g = gc(six, 2, 1);
  REQUIRE(g.members.size() == 1);
  CHECK(g.members[0].vertex_count() == 14);
  CHECK(point_group(g.members[0]).name == "D6");
  CHECK(g.members[0].is_sphere123());
  const auto a = gc(six, 1, 1);
  CHECK(a.members.size() == 2);
}

TEST_CASE("gc handedness follows the parameter") {
  const auto six = named_graph({NamedKind::SixK2, 0});
  const auto right = gc(six, 2, 1).members[0];
  const auto left = gc(six, 1, 2).members[0];
  CHECK(canonical_code(mirror(right), false) == canonical_code(left, false));
  CHECK(is_chiral(right));
}

TEST_CASE("oriented tripling equals gc(1,1)") {
  for (auto kind : {NamedKind::SixK2, NamedKind::K2Tetrahedron}) {
    const auto m = named_graph({kind, 0});
    CHECK(codes(gc(m, 1, 1).members) == codes({oriented_tripling(m, 0), oriented_tripling(m, 1)}));
    CHECK(oriented_tripling(m, 0).vertex_count() == 3 * m.vertex_count());
  }
}

TEST_CASE("three colouring of a truncation") {
  const auto t = truncate(named_graph({NamedKind::SixK2, 0}));
  const auto c = three_color(t);
  for (Dart d = 0; d < t.dart_count(); ++d) CHECK(c.color[t.face_of(d)] != c.color[t.left_face(d)]);
  CHECK_THROWS_AS(three_color(truncate(t)), OddFace);  // triangles at the old vertices
}

TEST_CASE("seed family") {
  const auto fam = gc_seed_family({NamedKind::Trifolium, 0}, 9);
  CHECK(fam.size() >= 4);
  for (const auto& member : fam) CHECK(member.map.vertex_count() == norm(member.parameter));
}
