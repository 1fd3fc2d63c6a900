#include "sixreg/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace sixreg {

FixedCells fixed_cells(const PlanarMap& m, const Automorphism& a) {
  FixedCells out;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.vertex_of(a.image[m.vertex_dart(v)]) == v) ++out.vertices;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d > m.twin(d)) continue;
    const Dart g = a.image[d];
    if (g == d || g == m.twin(d)) ++out.edges;
  }
  for (int f = 0; f < m.face_count(); ++f) {
    const Dart g = a.image[m.face_dart(f)];
    // reversing elements carry the face on the right of d to the face on the left of g(d)
    const int image = a.preserves_orientation ? m.face_of(g) : m.left_face(g);
    if (image == f) ++out.faces;
  }
  return out;
}

int element_order(const Automorphism& a) {
  // reflections may fix darts, so take the lcm over all cycles
  const int n = static_cast<int>(a.image.size());
  std::vector<char> seen(n, 0);
  int order = 1;
  for (Dart s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int k = 0;
    for (Dart d = s; !seen[d]; d = a.image[d]) {
      seen[d] = 1;
      ++k;
    }
    order = std::lcm(order, k);
  }
  return order;
}

namespace {

std::string rotation_name(int order, int max_cyclic) {
  if (order == 1) return "C1";
  if (max_cyclic == order) return "C" + std::to_string(order);
  if (order == 12 && max_cyclic == 3) return "T";
  if (order == 2 * max_cyclic || (order == 4 && max_cyclic == 2)) return "D" + std::to_string(order / 2);
  throw SymmetryError("unsupported rotation group of order " + std::to_string(order));
}

}  // namespace

PointGroup classify(const PlanarMap& m, const std::vector<Automorphism>& group) {
  PointGroup pg;
  pg.order = static_cast<int>(group.size());
  pg.rotation_order = 0;
  int max_cyclic = 1;
  const Automorphism* rot_witness = nullptr;
  const Automorphism* rev_witness = nullptr;
  for (const auto& a : group) {
    const int k = element_order(a);
    if (a.preserves_orientation) {
      ++pg.rotation_order;
      if (k > max_cyclic) {
        max_cyclic = k;
        rot_witness = &a;
      }
      continue;
    }
    if (k != 2) continue;
    if (fixed_cells(m, a).any()) {
      ++pg.reflections;
      if (!rev_witness) rev_witness = &a;
    } else {
      pg.has_inversion = true;
    }
  }
  const int rot = pg.rotation_order;

  if (max_cyclic == 4 || max_cyclic == 5 || max_cyclic > 6)
    throw SymmetryError("rotation of order " + std::to_string(max_cyclic) + " cannot occur");
  const std::string base = rotation_name(rot, max_cyclic);
  if (pg.order == rot) {
    pg.name = base;
  } else if (base == "C1") {
    pg.name = pg.reflections > 0 ? "Cs" : "Ci";
  } else if (base[0] == 'C') {
    const int n = rot;
    if (pg.reflections == n)
      pg.name = base + "v";
    else if (pg.reflections == 1)
      pg.name = base + "h";
    else if (pg.reflections == 0)
      pg.name = "S" + std::to_string(2 * n);
    else
      throw SymmetryError("inconsistent reflection count for " + base);
  } else if (base == "T") {
    if (pg.reflections == 6)
      pg.name = "Td";
    else if (pg.has_inversion)
      pg.name = "Th";
    else
      throw SymmetryError("inconsistent tetrahedral group");
  } else {
    const int n = rot / 2;
    if (pg.reflections == n + 1)
      pg.name = base + "h";
    else if (pg.reflections == n)
      pg.name = base + "d";
    else
      throw SymmetryError("inconsistent reflection count for " + base);
  }
  if (rot_witness) pg.witnesses.push_back(*rot_witness);
  if (rev_witness) {
    pg.witnesses.push_back(*rev_witness);
  } else {
    for (const auto& a : group)
      if (!a.preserves_orientation) {
        pg.witnesses.push_back(a);
        break;
      }
  }
  return pg;
}

PointGroup point_group(const PlanarMap& m) { return classify(m, automorphisms(m)); }

const std::vector<std::string>& sphere_group_names() {
  static const std::vector<std::string> names = {"C1",  "C2",  "C2h", "C2v", "C3",  "C3h", "C3v", "Ci",
                                                 "Cs",  "D2",  "D2d", "D2h", "D3",  "D3d", "D3h", "D6",
                                                 "D6h", "S4",  "S6",  "T",   "Th",  "Td"};
  return names;
}

std::map<std::string, GroupCensusEntry> group_census(const std::vector<std::pair<int, std::string>>& n_and_group) {
  std::map<std::string, GroupCensusEntry> out;
  for (const auto& [n, name] : n_and_group) {
    auto [it, fresh] = out.try_emplace(name, GroupCensusEntry{name, n, 0});
    it->second.min_n = std::min(it->second.min_n, n);
    ++it->second.count;
  }
  return out;
}

}  // namespace sixreg
