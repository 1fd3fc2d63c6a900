#include <doctest.h>

#include <set>

#include "sixreg/named_graphs.hpp"
#include "sixreg/symmetry.hpp"

using namespace sixreg;

TEST_CASE("named graph groups") {
  CHECK(point_group(named_graph({NamedKind::SixK2, 0})).name == "D6h");
  CHECK(point_group(named_graph({NamedKind::Trifolium, 0})).name == "C3v");
  CHECK(point_group(named_graph({NamedKind::K2Tetrahedron, 0})).name == "Td");
  CHECK(point_group(named_graph({NamedKind::SixK2, 0})).order == 24);
}

TEST_CASE("automorphism group is closed") {
  const auto m = named_graph({NamedKind::K2Tetrahedron, 0});
  const auto group = automorphisms(m);
  CHECK(group.size() == 24);
  std::set<std::vector<Dart>> images;
  for (const auto& a : group) images.insert(a.image);
  for (const auto& a : group)
    for (const auto& b : group) {
      std::vector<Dart> ab(a.image.size());
      for (std::size_t d = 0; d < ab.size(); ++d) ab[d] = a.image[b.image[d]];
      CHECK(images.count(ab) == 1);
    }
  for (Dart d = 0; d < m.dart_count(); ++d) CHECK(group.front().image[d] == d);
}

TEST_CASE("element orders") {
  const auto m = named_graph({NamedKind::SixK2, 0});
  int maximal = 1;
  for (const auto& a : automorphisms(m)) maximal = std::max(maximal, element_order(a));
  CHECK(maximal == 6);
}

TEST_CASE("group census keeps first occurrence") {
  const auto c = group_census({{3, "C2"}, {5, "C2"}, {4, "Cs"}});
  CHECK(c.at("C2").min_n == 3);
  CHECK(c.at("C2").count == 2);
  CHECK(c.at("Cs").min_n == 4);
}
