#include <algorithm>
#include <array>
#include <set>

#include "sixreg/enumerator.hpp"

namespace sixreg {

namespace {

// Grows a 6-regular rotation system one edge at a time. Vertex v owns darts
// 6v..6v+5 in counterclockwise order. The smallest unmatched dart is always
// paired next, either with an unmatched dart of an existing vertex or with
// dart 0 of a fresh vertex, so every (map, root dart) pair is reached along
// exactly one branch. Faces are cycles of vertex_next(twin(d)) and any partial
// face walk longer than three darts is cut.
class GluingSearch {
 public:
  GluingSearch(int n, int p1) : n_(n), target_{0, p1, 6 - 2 * p1}, twin_(6 * n, -1) {
    // root dart lies on a smallest face
    root_face_ = p1 > 0 ? 1 : 2;
  }

  std::vector<PlanarMap> run(bool mirror_quotient) {
    mirror_quotient_ = mirror_quotient;
    created_ = 1;
    recurse(0);
    std::vector<PlanarMap> out;
    out.reserve(found_.size());
    for (const auto& [code, map] : found_) out.push_back(map);
    return out;
  }

 private:
  static Dart vnext(Dart d) { return d % 6 == 5 ? d - 5 : d + 1; }
  static Dart vprev(Dart d) { return d % 6 == 0 ? d + 5 : d - 1; }

  Dart fnext(Dart d) const { return twin_[d] < 0 ? -1 : vnext(twin_[d]); }
  Dart fprev(Dart d) const {
    const Dart p = vprev(d);
    return twin_[p];
  }

  struct Chain {
    bool closed = false;
    int length = 0;
    bool has_root = false;
  };

  Chain chain(Dart d) const {
    Chain c;
    Dart start = d;
    // walk back to the start of an open chain
    for (int steps = 0; steps < 4; ++steps) {
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
      if (c.length > 3) return c;
    } while (x >= 0 && x != start);
    if (x == start) c.closed = true;
    return c;
  }

  bool face_ok(const Chain& c) const {
    if (c.length > 3) return false;
    if (c.has_root && (c.closed ? c.length != root_face_ : c.length > root_face_)) return false;
    return true;
  }

  void recurse(Dart from) {
    Dart d = from;
    while (d < 6 * created_ && twin_[d] >= 0) ++d;
    if (d >= 6 * created_) {
      if (created_ == n_) record();
      return;
    }
    const bool can_grow = created_ < n_;
    const Dart limit = 6 * created_ + (can_grow ? 1 : 0);
    for (Dart t = d + 1; t < limit; ++t) {
      if (twin_[t] >= 0) continue;
      const bool grow = t == 6 * created_;
      if (grow) ++created_;
      twin_[d] = t;
      twin_[t] = d;
      const Chain a = chain(d);
      bool ok = face_ok(a);
      Chain b;
      bool same = false;
      if (ok) {
        b = chain(t);
        ok = face_ok(b);
        same = a.closed && b.closed && in_same_face(d, t);
      }
      if (ok) {
        std::array<int, 4> added{};
        if (a.closed) ++added[a.length];
        if (b.closed && !same) ++added[b.length];
        bool within = true;
        for (int k = 1; k <= 2; ++k)
          if (closed_[k] + added[k] > target_[k]) within = false;
        if (within) {
          for (int k = 1; k <= 3; ++k) closed_[k] += added[k];
          recurse(d + 1);
          for (int k = 1; k <= 3; ++k) closed_[k] -= added[k];
        }
      }
      twin_[d] = twin_[t] = -1;
      if (grow) --created_;
    }
  }

  bool in_same_face(Dart a, Dart b) const {
    Dart x = a;
    for (int i = 0; i < 3; ++i) {
      if (x == b) return true;
      x = fnext(x);
      if (x < 0) return false;
    }
    return false;
  }

  void record() {
    std::vector<Dart> rot(6 * n_);
    for (Dart d = 0; d < 6 * n_; ++d) rot[d] = vnext(d);
    PlanarMap m = PlanarMap::build(twin_, std::move(rot));
    if (m.p_vector()[1] != target_[1] || !m.is_sphere123()) return;
    auto code = canonical_code(m, mirror_quotient_);
    found_.emplace(std::move(code), std::move(m));
  }

  int n_;
  std::array<int, 3> target_;
  std::vector<Dart> twin_;
  int created_ = 0;
  int root_face_ = 2;
  std::array<int, 4> closed_{};
  bool mirror_quotient_ = true;
  std::map<CanonicalCode, PlanarMap> found_;
};

}  // namespace

std::vector<PlanarMap> detail::exhaustive_gluing(int n, int p1, bool mirror_quotient) {
  if (n < 1 || p1 < 0 || p1 > 3) throw EnumerationError("bad oracle parameters");
  return GluingSearch(n, p1).run(mirror_quotient);
}

std::vector<PlanarMap> brute_force_oracle(int n, int p1, bool mirror_quotient) {
  if (n > kOracleMaxVertices)
    throw EnumerationError("brute-force oracle is limited to n <= " + std::to_string(kOracleMaxVertices));
  return detail::exhaustive_gluing(n, p1, mirror_quotient);
}

}  // namespace sixreg
