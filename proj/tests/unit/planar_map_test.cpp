#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sixreg/named_graphs.hpp"
#include "sixreg/planar_map.hpp"

using namespace sixreg;

TEST_CASE("six parallel edges") {
  const auto m = named_graph({NamedKind::SixK2, 0});
  CHECK(m.vertex_count() == 2);
  CHECK(m.edge_count() == 6);
  CHECK(m.face_count() == 6);
  CHECK(m.p_vector()[2] == 6);
  CHECK(m.is_sphere123());
  for (Dart d = 0; d < m.dart_count(); ++d) {
    CHECK(m.twin(m.twin(d)) == d);
    CHECK(m.vertex_prev(m.vertex_next(d)) == d);
    CHECK(m.face_next(d) == m.vertex_next(m.twin(d)));
    CHECK(m.left_face(d) == m.face_of(m.twin(d)));
  }
}

TEST_CASE("rejects bad dart data") {
  CHECK_THROWS_AS(PlanarMap::build({1, 0, 2}, {0, 1, 2}), MapError);  // odd dart count
  try {
    PlanarMap::build({1, 1}, {0, 1});
    FAIL("accepted a non-involution");
  } catch (const MapError& e) {
    CHECK(e.kind() == MapError::Kind::NotInvolution);
  }
  // two disjoint loops
  try {
    PlanarMap::build({1, 0, 3, 2}, {1, 0, 3, 2});
    FAIL("accepted a disconnected map");
  } catch (const MapError& e) {
    CHECK(e.kind() == MapError::Kind::Disconnected);
  }
}

TEST_CASE("dual and mirror") {
  const auto m = named_graph({NamedKind::Trifolium, 0});
  const auto d = dual(m);
  CHECK(d.vertex_count() == m.face_count());
  CHECK(d.face_count() == m.vertex_count());
  const auto dd = dual(d);
  CHECK(std::equal(dd.twins().begin(), dd.twins().end(), m.twins().begin()));
  CHECK(std::equal(dd.vertex_nexts().begin(), dd.vertex_nexts().end(), m.vertex_nexts().begin()));
  CHECK(canonical_code(mirror(mirror(m)), false) == canonical_code(m, false));
}

TEST_CASE("truncation is cubic") {
  const auto t = truncate(named_graph({NamedKind::K2Tetrahedron, 0}));
  CHECK(t.is_regular(3));
  CHECK(t.vertex_count() == 24);
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937 rng(7);
  for (auto kind : {NamedKind::SixK2, NamedKind::ThreeK3, NamedKind::Trifolium, NamedKind::K2Tetrahedron}) {
    const auto m = named_graph({kind, 0});
    std::vector<Dart> perm(m.dart_count());
    for (int trial = 0; trial < 5; ++trial) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto r = relabel(m, perm);
      CHECK(canonical_code(r, false) == canonical_code(m, false));
      CHECK(canonical_code(r, true) == canonical_code(m, true));
    }
    CHECK(canonical_code(map_from_code(canonical_code(m, false)), false) == canonical_code(m, false));
  }
}

TEST_CASE("face bipartition separates neighbours") {
  const auto m = named_graph({NamedKind::K2Tetrahedron, 0});
  const auto b = face_bipartition(m);
  CHECK(b.face_class[0] == 0);
  for (Dart d = 0; d < m.dart_count(); ++d) CHECK(b.face_class[m.face_of(d)] != b.face_class[m.left_face(d)]);
  CHECK_THROWS_AS(face_bipartition(truncate(m)), MapError);
}
