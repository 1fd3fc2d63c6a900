#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sixreg {

using Dart = std::int32_t;

/// Raised when dart data does not describe a connected map of the sphere.
class MapError : public std::runtime_error {
 public:
  enum class Kind { NotInvolution, NotPermutation, Disconnected, GenusNotZero, OddVertexDegree, BadInput };

  MapError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Invalid parameter passed to a constructor or operation.
class BadParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Face-size census. `count[k]` is the number of k-gonal faces.
struct PVector {
  std::map<int, int> count;

  int operator[](int k) const {
    auto it = count.find(k);
    return it == count.end() ? 0 : it->second;
  }
  bool operator==(const PVector&) const = default;
};

/// Canonical isomorphism code. Fixed-width big-endian labels, so byte order
/// equals lexicographic order on the underlying label sequence.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  static CanonicalCode from_hex(const std::string& hex);

  auto operator<=>(const CanonicalCode&) const = default;
};

/// An automorphism as a dart permutation. `preserves_orientation` is false
/// for reflections and rotoreflections.
struct Automorphism {
  std::vector<Dart> image;
  bool preserves_orientation = true;
};

/// Two-colouring of faces such that faces sharing an edge differ.
struct FaceBipartition {
  std::vector<std::uint8_t> face_class;  // indexed by face id, values 0/1

  FaceBipartition swapped() const;
};

/// Combinatorial map of a connected plane (multi)graph.
///
/// Darts are half-edges. `twin` pairs the two darts of an edge and
/// `vertex_next` rotates counterclockwise around the origin vertex of a dart.
/// Faces are the cycles of face_next(d) = vertex_next(twin(d)); with this
/// convention a face is walked keeping it on the right of each dart, and the
/// face of a dart is the face on its right. Loops and parallel edges are
/// allowed; a 1-gon is a dart fixed by face_next.
///
/// Instances are immutable after construction.
class PlanarMap {
 public:
  PlanarMap() = default;

  /// Validates and builds. Throws MapError.
  static PlanarMap build(std::vector<Dart> twin, std::vector<Dart> vertex_next);

  int dart_count() const noexcept { return static_cast<int>(twin_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }
  int vertex_count() const noexcept { return vertex_count_; }
  int face_count() const noexcept { return face_count_; }

  Dart twin(Dart d) const { return twin_[d]; }
  Dart vertex_next(Dart d) const { return vnext_[d]; }
  Dart vertex_prev(Dart d) const { return vprev_[d]; }
  Dart face_next(Dart d) const { return fnext_[d]; }
  Dart face_prev(Dart d) const { return fprev_[d]; }
  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  /// Face on the left of `d`.
  int left_face(Dart d) const { return face_of_[twin_[d]]; }
  int head(Dart d) const { return vertex_of_[twin_[d]]; }

  std::span<const Dart> twins() const noexcept { return twin_; }
  std::span<const Dart> vertex_nexts() const noexcept { return vnext_; }

  /// One representative dart per vertex / face.
  Dart vertex_dart(int v) const { return vertex_first_[v]; }
  Dart face_dart(int f) const { return face_first_[f]; }

  int degree(int v) const { return vertex_size_[v]; }
  int face_size(int f) const { return face_size_[f]; }

  /// Darts around a vertex in counterclockwise order starting at vertex_dart(v).
  std::vector<Dart> vertex_darts(int v) const;
  /// Darts of a face in face_next order starting at face_dart(f).
  std::vector<Dart> face_darts(int f) const;

  PVector p_vector() const;
  bool is_regular(int degree) const;

  /// True for a 6-regular map whose faces all have size 1, 2 or 3.
  bool is_sphere123() const;

 private:
  std::vector<Dart> twin_, vnext_, vprev_, fnext_, fprev_;
  std::vector<int> vertex_of_, face_of_;
  std::vector<Dart> vertex_first_, face_first_;
  std::vector<int> vertex_size_, face_size_;
  int vertex_count_ = 0;
  int face_count_ = 0;
};

/// Vertices and faces swapped. dual(dual(m)) == m dart-for-dart.
PlanarMap dual(const PlanarMap& m);

/// Reflected map (vertex rotation reversed).
PlanarMap mirror(const PlanarMap& m);

/// Every degree-k vertex replaced by a k-gon. Dart 3d is the copy of the
/// original edge dart d, 3d+1 and 3d+2 run along the new polygon.
PlanarMap truncate(const PlanarMap& m);

/// Throws MapError(OddVertexDegree) when some vertex has odd degree.
/// Face 0 is always in class 0.
FaceBipartition face_bipartition(const PlanarMap& m);

/// Equal codes iff isomorphic (orientation-preserving, or up to reflection
/// when include_mirror).
CanonicalCode canonical_code(const PlanarMap& m, bool include_mirror);

/// True when the map is not isomorphic to its mirror image.
bool is_chiral(const PlanarMap& m);

/// Full automorphism group including orientation-reversing elements.
/// The identity comes first.
std::vector<Automorphism> automorphisms(const PlanarMap& m);

/// Renumber darts: new dart perm[d] corresponds to old dart d.
PlanarMap relabel(const PlanarMap& m, std::span<const Dart> perm);

/// Rebuild a map from a canonical code (which stores twin/vertex_next).
PlanarMap map_from_code(const CanonicalCode& code);

}  // namespace sixreg
