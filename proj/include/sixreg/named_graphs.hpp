#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sixreg/planar_map.hpp"

namespace sixreg {

enum class NamedKind {
  SixK2,
  ThreeK3,
  Trifolium,
  T2,
  K2Tetrahedron,
  R,   // p1=1, n=2i+1
  S,   // p1=2, n=2i
  SV,  // p1=2, n=4i, mirror-symmetric companion of S(2i)
  A,   // p1=2, n=i
  B,   // p1=2, n=i, i>=2
  C,   // p1=2, n=i, i>=2
  Ti,  // p1=3, n=3^(i-1)
};

struct NamedGraphId {
  NamedKind kind = NamedKind::SixK2;
  int param = 0;  // ignored for the single graphs

  bool is_series() const;
  std::string to_string() const;  // "SixK2", "R(2)", ...
  /// Parses the to_string() form. Throws BadParameter.
  static NamedGraphId parse(const std::string& text);
};

/// Vertex count of the named graph. Throws BadParameter on invalid ids.
int named_graph_vertices(const NamedGraphId& id);

PlanarMap named_graph(const NamedGraphId& id);

/// Every series member and single graph with at most max_n vertices.
std::vector<NamedGraphId> named_graphs_up_to(int max_n);

/// Builds a map from per-vertex counter-clockwise lists of edge labels.
/// Every label occurs exactly twice; a loop lists its label twice at one vertex.
PlanarMap from_edge_labels(const std::vector<std::vector<int>>& rotation);

enum class Shear { Forward, Backward };

/// Cuts along the central circuit through `start` and inserts a ring of
/// 3-gons (a railroad), adding one vertex per circuit vertex. The circuit must
/// visit distinct vertices. `next` receives a dart on the new parallel circuit
/// so that repeated insertion keeps growing the same band.
PlanarMap insert_railroad(const PlanarMap& m, Dart start, Shear shear, Dart* next = nullptr);

}  // namespace sixreg
