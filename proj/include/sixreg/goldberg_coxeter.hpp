#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sixreg/eisenstein.hpp"
#include "sixreg/named_graphs.hpp"
#include "sixreg/planar_map.hpp"

namespace sixreg {

class OddFace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedSeed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Face colouring of a cubic map with even faces: 0 white, 1 red, 2 blue.
struct ThreeColoring {
  std::vector<std::uint8_t> color;
};

/// Proper 3-colouring of the faces; `white_face`, when given, gets colour 0.
/// Throws OddFace if some face has odd size, MapError if m is not cubic.
ThreeColoring three_color(const PlanarMap& m, std::optional<int> white_face = std::nullopt);

/// Goldberg-Coxeter construction for cubic maps: each triangle of the dual is
/// replaced by the lattice triangle (0, z, z*j) with z = k + l*j.
PlanarMap gc3_cubic(const PlanarMap& m, int k, int l);

/// Contracts every face of the given colour to a vertex.
PlanarMap shrink_faces(const PlanarMap& cubic, const ThreeColoring& coloring, int color);

/// Or_C(m) for the face class `face_class` of face_bipartition(m).
/// Throws MapError(OddVertexDegree) when m has a vertex of odd degree.
PlanarMap oriented_tripling(const PlanarMap& m, int face_class);

struct GCResult {
  std::vector<PlanarMap> members;  // one member for class B, two for class A
  EisensteinInt parameter;
  CanonicalCode seed_code;
};

/// GC_{k,l} of a 6-regular map via truncation, 3-colouring and shrinking.
GCResult gc(const PlanarMap& m, int k, int l);

struct GCFamilyMember {
  EisensteinInt parameter;
  PlanarMap map;
};

/// All GC images of a seed with 0 <= l <= k and k^2+kl+l^2 <= norm_bound,
/// one per canonical code (mirror images identified).
std::vector<GCFamilyMember> gc_seed_family(const NamedGraphId& seed, int norm_bound);

}  // namespace sixreg
