#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixreg/planar_map.hpp"

namespace sixreg {

class IrregularPatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CircuitKind { Zigzag, Central };

/// One oriented circuit. For zigzags `darts` are the traversed edges in order
/// (with alternating turns); for central circuits each dart leaves the
/// vertex opposite to the one it entered by.
struct Circuit {
  CircuitKind kind = CircuitKind::Central;
  std::vector<Dart> darts;
  int length() const { return static_cast<int>(darts.size()); }
};

struct CircuitSymbol {
  int length = 0;
  int alpha1 = 0;  // type I self-intersections
  int alpha2 = 0;  // type II self-intersections

  auto operator<=>(const CircuitSymbol&) const = default;
  /// "l" or "l_{a1,a2}".
  std::string to_string() const;
};

/// Sorted multiset of symbols.
struct CircuitVector {
  std::vector<CircuitSymbol> symbols;

  int total_length() const;
  int count() const { return static_cast<int>(symbols.size()); }
  /// "10^3, 11_{0,1}^3, 22_{0,3}^3"
  std::string to_string() const;
  /// Parses the to_string() form.
  static CircuitVector parse(const std::string& text);
  bool operator==(const CircuitVector&) const = default;
};

/// Type counts of the intersections between two circuits (or one with itself).
struct IntersectionEntry {
  int type1 = 0;
  int type2 = 0;
  int size() const { return type1 + type2; }
};

using IntersectionMatrix = std::vector<std::vector<IntersectionEntry>>;

struct CircuitSet {
  CircuitKind kind = CircuitKind::Central;
  std::vector<Circuit> circuits;
  IntersectionMatrix matrix;
  CircuitVector vector;

  bool all_simple() const;
};

/// Zigzags with the canonical orientation (see canonical_orientation).
CircuitSet zigzags(const PlanarMap& m);

/// Central circuits with the canonical orientation. Throws
/// MapError(OddVertexDegree) when some vertex has odd degree.
CircuitSet central_circuits(const PlanarMap& m);

/// forward[d] is true when the face on the right of d lies in class 0 of the
/// face bipartition. Every zigzag and central circuit runs along forward
/// darts only or backward darts only; orienting them forward makes every
/// intersection type II.
std::vector<bool> canonical_orientation(const PlanarMap& m);

/// Intersection typing for arbitrary orientations of the given circuits.
/// Zigzags are compared on shared edges, central circuits on shared vertices.
IntersectionMatrix intersection_matrix(const PlanarMap& m, const std::vector<Circuit>& circuits);

Circuit reversed(const PlanarMap& m, const Circuit& c);

/// Symbols from the diagonal of the matrix.
CircuitVector circuit_vector(const std::vector<Circuit>& circuits, const IntersectionMatrix& matrix);

/// Faces sharing an edge with the circuit, on its right (side 0) or its
/// left (side 1), one entry per traversed edge.
std::vector<int> side_faces(const PlanarMap& m, const Circuit& c, int side);

struct Railroad {
  int circuit = 0;
  int side = 0;
  int partner = 0;
  int partner_side = 0;
  std::vector<int> faces;  // the ring of 3-gons
};

/// Every circuit side that is bounded by a ring of 3-gons together with a
/// parallel circuit. Each railroad is reported once per bounding side, so a
/// railroad between two distinct circuits appears twice.
std::vector<Railroad> railroads(const PlanarMap& m, const CircuitSet& set);
std::vector<Railroad> railroads(const PlanarMap& m, CircuitKind kind);

enum class Tightness { Tight, WeaklyTight, Neither };

std::string to_string(Tightness t);

struct TightnessReport {
  CircuitKind kind = CircuitKind::Central;
  Tightness status = Tightness::Neither;
  std::vector<Railroad> railroads;
  int s_value = 0;  // p1 + 2 p2
  int circuit_count = 0;
};

TightnessReport tightness(const PlanarMap& m, CircuitKind kind);
TightnessReport tightness(const PlanarMap& m, const CircuitSet& set);

struct PatchReport {
  int t_ob = 0;
  int t_ac = 0;
  int p2_count = 0;
  bool holds = false;
};

/// Local Euler formula 6 - t_ob - 2 t_ac = 2 p2 for a disc of faces whose
/// boundary runs along central circuits. A corner is acute when the patch
/// takes one face at it and obtuse when it takes two. Throws IrregularPatch
/// when the boundary is not one closed curve or bends away from the patch.
PatchReport patch_euler_check(const PlanarMap& m, const std::vector<int>& faces);

/// Face sets of the regions cut out by two central circuits.
std::vector<std::vector<int>> regions_between(const PlanarMap& m, const Circuit& a, const Circuit& b);

/// Faces on one side of a simple central circuit.
std::vector<int> interior_faces(const PlanarMap& m, const Circuit& c, int side);

struct CorpusGraph {
  int n = 0;
  int p1 = 0;
  int z_count = 0;
  int c_count = 0;
  Tightness z = Tightness::Neither;
  Tightness c = Tightness::Neither;
};

struct CorpusBounds {
  // indexed by p1
  int max_tight_z[4] = {};
  int max_tight_c[4] = {};
  int max_weak_z[4] = {};
  int max_weak_c[4] = {};
  int z_knotted = 0;
  int c_knotted = 0;
  std::vector<std::string> violations;
};

/// Tight counts are checked against (6,4,3,1) and weakly tight counts
/// against 9-2*p1.
CorpusBounds classify_corpus(const std::vector<CorpusGraph>& graphs);

CorpusGraph analyse(const PlanarMap& m);

struct TransformedVectors {
  CircuitVector z;
  CircuitVector c;
};

/// z- and c-vectors of GC_{1+3u,0}(m) obtained from those of m:
/// z: (l(1+3u))^{a(1+u)}, (2k(1+3u))^{2ub};  c: (l(1+3u)/2)^{ua}, (k(1+3u))^{b(1+2u)}
/// for z-symbols l^a and c-symbols k^b, self-intersection indices kept.
/// Both vectors sum to the totals of a map with n(1+3u)^2 vertices.
TransformedVectors gc_line_vectors(const CircuitVector& z, const CircuitVector& c, int u);

}  // namespace sixreg
