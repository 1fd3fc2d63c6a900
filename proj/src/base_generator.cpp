#include <algorithm>
#include <array>
#include <future>
#include <map>

#include "sixreg/enumerator.hpp"

namespace sixreg {

namespace {

// Cubic analogue of the oracle search: vertex v owns darts 3v..3v+2, faces
// are cycles of vertex_next(twin(d)) and must have size in [min_face, 6].
// The root dart 0 lies on a face of exactly min_face darts, so running the
// search once per min_face partitions the classes.
class CubicSearch {
 public:
  CubicSearch(int vertices, int min_face) : n_(vertices), min_face_(min_face), twin_(3 * vertices, -1) {}

  void run(bool mirror_quotient, std::map<CanonicalCode, PlanarMap>& found) {
    mirror_quotient_ = mirror_quotient;
    found_ = &found;
    created_ = 1;
    recurse(0);
  }

 private:
  static constexpr int kMaxFace = 6;

  static Dart vnext(Dart d) { return d % 3 == 2 ? d - 2 : d + 1; }
  static Dart vprev(Dart d) { return d % 3 == 0 ? d + 2 : d - 1; }
  Dart fnext(Dart d) const { return twin_[d] < 0 ? -1 : vnext(twin_[d]); }
  Dart fprev(Dart d) const { return twin_[vprev(d)]; }

  // Length of the partial face through d, closed flag, root membership.
  struct Chain {
    bool closed = false;
    int length = 0;
    bool has_root = false;
  };

  Chain chain(Dart d) const {
    Chain c;
    Dart start = d;
    for (int steps = 0; steps <= kMaxFace; ++steps) {
      const Dart p = fprev(start);
      if (p < 0) break;
      if (p == d) {
        c.closed = true;
        break;
      }
      start = p;
    }
    Dart x = start;
    do {
      ++c.length;
      if (x == 0) c.has_root = true;
      x = fnext(x);
      if (c.length > kMaxFace) return c;
    } while (x >= 0 && x != start);
    c.closed = (x == start);
    return c;
  }

  bool face_ok(const Chain& c) const {
    if (c.length > kMaxFace) return false;
    if (c.closed && c.length < min_face_) return false;
    if (c.has_root && (c.closed ? c.length != min_face_ : c.length > min_face_)) return false;
    return true;
  }

  void recurse(Dart from) {
    Dart d = from;
    while (d < 3 * created_ && twin_[d] >= 0) ++d;
    if (d >= 3 * created_) {
      if (created_ == n_) record();
      return;
    }
    const Dart limit = 3 * created_ + (created_ < n_ ? 1 : 0);
    for (Dart t = d + 1; t < limit; ++t) {
      if (twin_[t] >= 0) continue;
      const bool grow = t == 3 * created_;
      if (grow) ++created_;
      twin_[d] = t;
      twin_[t] = d;
      if (face_ok(chain(d)) && face_ok(chain(t))) recurse(d + 1);
      twin_[d] = twin_[t] = -1;
      if (grow) --created_;
    }
  }

  void record() {
    std::vector<Dart> rot(3 * n_);
    for (Dart d = 0; d < 3 * n_; ++d) rot[d] = vnext(d);
    // the search also closes up tori; only genus 0 is kept
    int faces = 0;
    std::vector<char> seen(twin_.size(), 0);
    for (Dart s = 0; s < 3 * n_; ++s) {
      if (seen[s]) continue;
      ++faces;
      for (Dart x = s; !seen[x]; x = fnext(x)) seen[x] = 1;
    }
    if (n_ - 3 * n_ / 2 + faces != 2) return;
    PlanarMap m = PlanarMap::build(twin_, std::move(rot));
    auto code = canonical_code(m, mirror_quotient_);
    found_->emplace(std::move(code), std::move(m));
  }

  int n_;
  int min_face_;
  std::vector<Dart> twin_;
  int created_ = 0;
  bool mirror_quotient_ = true;
  std::map<CanonicalCode, PlanarMap>* found_ = nullptr;
};

}  // namespace

std::vector<PlanarMap> enumerate_base_exact(int faces, bool mirror_quotient) {
  // a cubic sphere with F faces has 2F - 4 vertices; the smallest is the tetrahedron
  if (faces < 4) return {};
  std::map<CanonicalCode, PlanarMap> found;
  for (int min_face = 3; min_face <= 6; ++min_face) CubicSearch(2 * faces - 4, min_face).run(mirror_quotient, found);
  std::vector<PlanarMap> out;
  out.reserve(found.size());
  for (auto& [code, m] : found) out.push_back(std::move(m));
  return out;
}

std::vector<PlanarMap> enumerate_base(int max_faces, bool mirror_quotient, int threads) {
  std::vector<std::vector<PlanarMap>> per_size(std::max(0, max_faces + 1));
  if (threads <= 1) {
    for (int f = 4; f <= max_faces; ++f) per_size[f] = enumerate_base_exact(f, mirror_quotient);
  } else {
    std::vector<std::future<std::vector<PlanarMap>>> jobs;
    for (int f = 4; f <= max_faces; ++f)
      jobs.push_back(std::async(std::launch::async, enumerate_base_exact, f, mirror_quotient));
    for (int f = 4; f <= max_faces; ++f) per_size[f] = jobs[f - 4].get();
  }
  std::vector<PlanarMap> out;
  for (auto& v : per_size)
    for (auto& m : v) out.push_back(std::move(m));
  return out;
}

}  // namespace sixreg
