#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixreg/planar_map.hpp"

namespace sixreg {

class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schoenflies point group of a sphere map.
struct PointGroup {
  std::string name;   // "C1", "Cs", ..., "Td"
  int order = 1;      // |Aut(m)|
  int rotation_order = 1;
  int reflections = 0;
  bool has_inversion = false;
  /// One element of maximal rotation order, and one orientation-reversing
  /// element when the group has any.
  std::vector<Automorphism> witnesses;
};

/// Fixed vertices/edges/faces of an automorphism.
struct FixedCells {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  bool any() const { return vertices + edges + faces > 0; }
};

FixedCells fixed_cells(const PlanarMap& m, const Automorphism& a);

/// Order of the dart permutation.
int element_order(const Automorphism& a);

/// Classifies the automorphism group. Throws SymmetryError for groups that
/// cannot occur on these spheres (icosahedral/octahedral, 4- or 5-fold axes).
PointGroup point_group(const PlanarMap& m);

PointGroup classify(const PlanarMap& m, const std::vector<Automorphism>& group);

/// The 22 groups that occur for ({2,3},6)-spheres, in a fixed order.
const std::vector<std::string>& sphere_group_names();

struct GroupCensusEntry {
  std::string name;
  int min_n = 0;
  int count = 0;
};

/// Observed groups with first-occurrence sizes, keyed by name.
std::map<std::string, GroupCensusEntry> group_census(const std::vector<std::pair<int, std::string>>& n_and_group);

}  // namespace sixreg
