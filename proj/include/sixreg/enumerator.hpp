#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixreg/planar_map.hpp"

namespace sixreg {

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest vertex count accepted by brute_force_oracle.
inline constexpr int kOracleMaxVertices = 8;

struct EnumerationRequest {
  int max_n = 1;
  std::optional<int> p1_filter;
  /// Identify mirror images (default census convention).
  bool dedup_mirror = true;
  int threads = 1;
};

/// One isomorphism class produced by the enumerator.
struct EnumeratedSphere {
  CanonicalCode code;
  PlanarMap map;
  int n = 0;
  int p1 = 0;
  /// How the sphere was first reached, e.g. "base:<hex>+digons" or "series:R(2)".
  std::string provenance;
};

/// Per-edge decoration of a triangulation: how many extra parallel edges and
/// where the 1-gon blobs sit. Used by insert_digons / insert_unigons.
struct DigonAssignment {
  std::vector<int> per_edge;  // indexed by edge id of the base (dart/2 after normalisation)
};

/// ({3,4,5,6},3)-spheres with at most `max_faces` faces, one per
/// isomorphism class (up to reflection when mirror_quotient), sorted by
/// canonical code.
std::vector<PlanarMap> enumerate_base(int max_faces, bool mirror_quotient = true, int threads = 1);

/// Same, restricted to exactly `faces` faces.
std::vector<PlanarMap> enumerate_base_exact(int faces, bool mirror_quotient = true);

/// All ({2,3},6)-spheres obtained by subdividing edges of `base` with
/// degree-2 vertices (every face of size s receiving 6-s of them) and
/// dualising. Sorted by canonical code.
std::vector<PlanarMap> insert_digons(const PlanarMap& base, bool mirror_quotient = true);

/// All spheres with exactly `ones` 1-gons obtained from the dual of `base`
/// by replacing edges with 2-gons or with a 1-gon nested in a 3-gon.
/// The exceptional spheres and infinite series are not produced here.
std::vector<PlanarMap> insert_unigons(const PlanarMap& base, int ones, bool mirror_quotient = true);

/// Census of ({1,2,3},6)-spheres by the reduction pipeline, sorted by
/// (n, p1, code). Deterministic for any thread count.
std::vector<EnumeratedSphere> enumerate(const EnumerationRequest& req);

/// Exhaustive gluing search, independent of the reduction pipeline.
/// Throws EnumerationError when n > kOracleMaxVertices.
std::vector<PlanarMap> brute_force_oracle(int n, int p1, bool mirror_quotient = true);

namespace detail {
/// Unbounded version of the oracle search.
std::vector<PlanarMap> exhaustive_gluing(int n, int p1, bool mirror_quotient);
/// Bundle decoration of a triangulation with `ones` 1-gon blobs (0 allowed).
std::vector<PlanarMap> decorate_triangulation(const PlanarMap& tri, int ones, bool mirror_quotient);
}  // namespace detail

}  // namespace sixreg
