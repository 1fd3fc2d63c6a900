#include "sixreg/goldberg_coxeter.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace sixreg {

namespace {

// Points of the Eisenstein plane scaled by 6, so centroids (thirds) and edge
// midpoints (halves) stay integral.
struct Pt {
  std::int64_t a = 0, b = 0;
  auto operator<=>(const Pt&) const = default;
};

Pt operator+(Pt x, Pt y) { return {x.a + y.a, x.b + y.b}; }
Pt operator-(Pt x, Pt y) { return {x.a - y.a, x.b - y.b}; }
std::int64_t cross(Pt x, Pt y) { return x.a * y.b - x.b * y.a; }
Pt times_j(Pt x, int p) {
  p = ((p % 6) + 6) % 6;
  for (int i = 0; i < p; ++i) x = {-x.b, x.a + x.b};
  return x;
}
int sign(std::int64_t v) { return (v > 0) - (v < 0); }

struct Key {
  int t = 0;
  Pt x;
  auto operator<=>(const Key&) const = default;
};

// The dual triangulation of a cubic map with every triangle replaced by the
// lattice triangle C0=0, C1=z, C2=z*j. Triangle t is vertex t of the cubic
// map; side i is crossed by its i-th dart and C_i is the face on that dart's
// right.
class LatticeSubdivision {
 public:
  LatticeSubdivision(const PlanarMap& g, EisensteinInt z) : g_(g) {
    corner_[0] = {0, 0};
    corner_[1] = {6 * z.k, 6 * z.l};
    corner_[2] = times_j(corner_[1], 1);
    sides_.resize(g.vertex_count());
    index_.assign(g.dart_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto ds = g.vertex_darts(v);
      if (ds.size() != 3) throw MapError(MapError::Kind::BadInput, "Goldberg-Coxeter input must be cubic");
      for (int i = 0; i < 3; ++i) {
        sides_[v][i] = ds[i];
        index_[ds[i]] = i;
      }
    }
    build();
    const std::int64_t expected = static_cast<std::int64_t>(g.vertex_count()) * norm(z);
    if (result_.vertex_count() != expected)
      throw MapError(MapError::Kind::BadInput, "lattice subdivision produced an unexpected vertex count");
  }

  const PlanarMap& result() const { return result_; }

  // Face of the result around lattice point p (scaled) lying in closed triangle t.
  int face_at(int t, Pt p) const {
    static const std::array<Pt, 6> around = {Pt{2, 2}, Pt{-4, 2}, Pt{2, -4}, Pt{-2, -2}, Pt{-2, 4}, Pt{4, -2}};
    for (const Pt& off : around) {
      const Pt c = p + off;
      if (!inside(c)) continue;
      const int id = vertex_id_.at(canonical(t, c));
      for (int s = 0; s < 3; ++s)
        if (right_vertex(c, s) == p) return result_.face_of(3 * id + s);
    }
    throw MapError(MapError::Kind::BadInput, "lattice point not in triangle");
  }

  int corner_face(int t, int i) const { return face_at(t, corner_[i]); }
  Pt corner(int i) const { return corner_[i]; }

 private:
  static bool is_up(Pt c) { return ((c.a % 6) + 6) % 6 == 2; }

  // Lattice point at the start (counter-clockwise) of the edge crossed by dart s.
  static Pt right_vertex(Pt c, int s) {
    if (is_up(c)) {
      const Pt p = c - Pt{2, 2};
      return s == 0 ? p : s == 1 ? p + Pt{6, 0} : p + Pt{0, 6};
    }
    const Pt q = c - Pt{4, 4};
    return s == 0 ? q + Pt{6, 0} : s == 1 ? q + Pt{6, 6} : q + Pt{0, 6};
  }

  static Pt midpoint(Pt c, int s) {
    if (is_up(c)) {
      const Pt p = c - Pt{2, 2};
      return p + (s == 0 ? Pt{3, 0} : s == 1 ? Pt{3, 3} : Pt{0, 3});
    }
    const Pt q = c - Pt{4, 4};
    return q + (s == 0 ? Pt{6, 3} : s == 1 ? Pt{3, 6} : Pt{3, 3});
  }

  std::int64_t side_orient(int i, Pt x) const {
    return cross(corner_[(i + 1) % 3] - corner_[i], x - corner_[i]);
  }

  bool inside(Pt x) const {
    for (int i = 0; i < 3; ++i)
      if (side_orient(i, x) < 0) return false;
    return true;
  }

  // Coordinates of x (given in triangle t) in the neighbour across side i.
  std::pair<int, Pt> across(int t, int i, Pt x) const {
    const Dart d = sides_[t][i];
    const Dart e = g_.twin(d);
    const int t2 = g_.vertex_of(e), i2 = index_[e];
    const int p = 3 + 2 * (i2 - i);
    return {t2, times_j(x - corner_[i], p) + corner_[(i2 + 1) % 3]};
  }

  Key canonical(int t, Pt x) const {
    Key best{t, x};
    for (int i = 0; i < 3; ++i) {
      if (side_orient(i, x) != 0) continue;
      auto [t2, y] = across(t, i, x);
      best = std::min(best, Key{t2, y});
    }
    return best;
  }

  // Follows the straight segment from s (in closed t) to x across triangle sides.
  Key locate(int t, Pt s, Pt x) const {
    int entered = -1;
    for (int guard = 0; guard < 1000; ++guard) {
      int exit = -1;
      for (int i = 0; i < 3 && exit < 0; ++i) {
        if (i == entered || side_orient(i, x) >= 0) continue;
        const int o1 = sign(cross(x - s, corner_[i] - s));
        const int o2 = sign(cross(x - s, corner_[(i + 1) % 3] - s));
        if (o1 == 0 || o2 == 0) throw MapError(MapError::Kind::BadInput, "segment through a lattice corner");
        if (o1 != o2) exit = i;
      }
      if (exit < 0) return canonical(t, x);
      const Dart e = g_.twin(sides_[t][exit]);
      auto [t2, x2] = across(t, exit, x);
      auto [t3, s2] = across(t, exit, s);
      (void)t3;
      t = t2;
      x = x2;
      s = s2;
      entered = index_[e];
    }
    throw MapError(MapError::Kind::BadInput, "lattice walk did not terminate");
  }

  void build() {
    std::int64_t lo_a = 0, hi_a = 0, lo_b = 0, hi_b = 0;
    for (const Pt& c : corner_) {
      lo_a = std::min(lo_a, c.a / 6);
      hi_a = std::max(hi_a, c.a / 6);
      lo_b = std::min(lo_b, c.b / 6);
      hi_b = std::max(hi_b, c.b / 6);
    }
    std::vector<Key> reps;
    for (int t = 0; t < g_.vertex_count(); ++t)
      for (std::int64_t a = lo_a - 1; a <= hi_a + 1; ++a)
        for (std::int64_t b = lo_b - 1; b <= hi_b + 1; ++b)
          for (Pt off : {Pt{2, 2}, Pt{4, 4}}) {
            const Pt c = Pt{6 * a, 6 * b} + off;
            if (!inside(c)) continue;
            const Key k = canonical(t, c);
            if (vertex_id_.emplace(k, static_cast<int>(reps.size())).second) reps.push_back(k);
          }

    const int n = static_cast<int>(reps.size());
    std::vector<Dart> twin(3 * n, -1), rot(3 * n);
    std::map<Key, Dart> open;
    for (int id = 0; id < n; ++id) {
      const auto& [t, c] = reps[id];
      for (int s = 0; s < 3; ++s) {
        const Dart d = 3 * id + s;
        rot[d] = 3 * id + (s + 1) % 3;
        const Key mid = locate(t, c, midpoint(c, s));
        auto [it, fresh] = open.emplace(mid, d);
        if (!fresh) {
          twin[d] = it->second;
          twin[it->second] = d;
        }
      }
    }
    result_ = PlanarMap::build(std::move(twin), std::move(rot));
  }

  const PlanarMap& g_;
  std::array<Pt, 3> corner_;
  std::vector<std::array<Dart, 3>> sides_;
  std::vector<int> index_;
  std::map<Key, int> vertex_id_;
  PlanarMap result_;
};

void check_even_degrees(const PlanarMap& m) {
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) % 2 != 0) throw MapError(MapError::Kind::OddVertexDegree, "vertex of odd degree");
}

// Vertex of truncate(m) holding darts 3d, 3d+1, 3d+2; its vertex-face corner.
int vertex_face_corner(const PlanarMap& tr, int t) {
  for (int i = 0; i < 3; ++i) {
    const Dart g = tr.vertex_darts(t)[i];
    if (g % 3 == 2) return i;
  }
  throw MapError(MapError::Kind::BadInput, "truncation layout changed");
}

}  // namespace

ThreeColoring three_color(const PlanarMap& m, std::optional<int> white_face) {
  if (!m.is_regular(3)) throw MapError(MapError::Kind::BadInput, "three_color needs a cubic map");
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_size(f) % 2 != 0) throw OddFace("face " + std::to_string(f) + " has odd size");
  ThreeColoring out;
  out.color.assign(m.face_count(), 255);
  const int f0 = white_face.value_or(0);
  const Dart d0 = m.face_dart(f0);
  const std::array<int, 3> start = {m.face_of(d0), m.face_of(m.vertex_next(d0)),
                                    m.face_of(m.vertex_next(m.vertex_next(d0)))};
  for (int i = 0; i < 3; ++i) {
    if (out.color[start[i]] != 255) throw OddFace("a face meets itself at a vertex");
    out.color[start[i]] = static_cast<std::uint8_t>(i);
  }
  std::deque<int> work;
  for (int f : start) work.push_back(f);
  while (!work.empty()) {
    const int f = work.front();
    work.pop_front();
    for (Dart d : m.face_darts(f)) {
      const std::array<int, 3> fs = {m.face_of(d), m.face_of(m.vertex_next(d)),
                                     m.face_of(m.vertex_next(m.vertex_next(d)))};
      int known = 0, missing = -1, used = 0;
      for (int x : fs) {
        if (out.color[x] == 255) {
          missing = x;
        } else {
          ++known;
          used |= 1 << out.color[x];
        }
      }
      if (known == 2 && missing >= 0) {
        for (int c = 0; c < 3; ++c)
          if (!(used & (1 << c))) out.color[missing] = static_cast<std::uint8_t>(c);
        work.push_back(missing);
      }
    }
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    int used = 0;
    for (Dart d : m.vertex_darts(v)) {
      const auto c = out.color[m.face_of(d)];
      if (c == 255) throw OddFace("colouring did not reach every face");
      used |= 1 << c;
    }
    if (used != 7) throw OddFace("faces admit no proper 3-colouring");
  }
  return out;
}

PlanarMap gc3_cubic(const PlanarMap& m, int k, int l) {
  if (k == 0 && l == 0) throw BadParameter("Goldberg-Coxeter parameter (0,0)");
  return LatticeSubdivision(m, {k, l}).result();
}

PlanarMap shrink_faces(const PlanarMap& cubic, const ThreeColoring& coloring, int color) {
  std::vector<Dart> new_id(cubic.dart_count(), -1);
  std::vector<Dart> spokes;
  std::vector<Dart> rot;
  for (int f = 0; f < cubic.face_count(); ++f) {
    if (coloring.color[f] != color) continue;
    const auto ds = cubic.face_darts(f);
    const Dart first = static_cast<Dart>(spokes.size());
    const int k = static_cast<int>(ds.size());
    // walking the face keeps it on the right, i.e. clockwise; spokes are
    // listed in reverse to get the counter-clockwise rotation
    for (int i = 0; i < k; ++i) {
      const Dart s = cubic.vertex_next(ds[(k - i) % k]);
      new_id[s] = static_cast<Dart>(spokes.size());
      spokes.push_back(s);
    }
    for (int i = 0; i < k; ++i) rot.push_back(first + (i + 1) % k);
  }
  std::vector<Dart> twin(spokes.size());
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    const Dart t = new_id[cubic.twin(spokes[i])];
    if (t < 0) throw MapError(MapError::Kind::BadInput, "colour class is not a perfect face matching");
    twin[i] = t;
  }
  return PlanarMap::build(std::move(twin), std::move(rot));
}

PlanarMap oriented_tripling(const PlanarMap& m, int face_class) {
  check_even_degrees(m);
  if (face_class != 0 && face_class != 1) throw BadParameter("face class must be 0 or 1");
  const auto parts = face_bipartition(m);
  const PlanarMap tr = truncate(m);
  LatticeSubdivision sub(tr, {1, 1});
  const int t0 = tr.vertex_of(3 * m.vertex_dart(0) + 2);
  const auto coloring = three_color(sub.result(), sub.corner_face(t0, vertex_face_corner(tr, t0)));
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (parts.face_class[m.face_of(d)] != face_class) continue;
    // the lattice point j is the centre of the master triangle of dart d
    const int t = tr.vertex_of(3 * d);
    const int color = coloring.color[sub.face_at(t, Pt{0, 6})];
    return shrink_faces(sub.result(), coloring, color);
  }
  throw BadParameter("empty face class");
}

GCResult gc(const PlanarMap& m, int k, int l) {
  if (k == 0 && l == 0) throw BadParameter("Goldberg-Coxeter parameter (0,0)");
  check_even_degrees(m);
  GCResult out;
  out.parameter = {k, l};
  out.seed_code = canonical_code(m, false);
  const PlanarMap tr = truncate(m);
  LatticeSubdivision sub(tr, {k, l});
  const int t0 = tr.vertex_of(3 * m.vertex_dart(0) + 2);
  const auto coloring = three_color(sub.result(), sub.corner_face(t0, vertex_face_corner(tr, t0)));
  if (lattice_class({k, l}) == LatticeClass::A) {
    out.members.push_back(shrink_faces(sub.result(), coloring, 1));
    out.members.push_back(shrink_faces(sub.result(), coloring, 2));
  } else {
    out.members.push_back(shrink_faces(sub.result(), coloring, 0));
  }
  return out;
}

std::vector<GCFamilyMember> gc_seed_family(const NamedGraphId& seed, int norm_bound) {
  switch (seed.kind) {
    case NamedKind::SixK2:
    case NamedKind::Trifolium:
    case NamedKind::K2Tetrahedron:
    case NamedKind::Ti: break;
    default: throw UnsupportedSeed("no Goldberg-Coxeter family for " + seed.to_string());
  }
  const PlanarMap base = named_graph(seed);
  std::vector<GCFamilyMember> out;
  std::set<CanonicalCode> seen;
  for (int k = 1; k * k <= norm_bound; ++k)
    for (int l = 0; l <= k; ++l) {
      if (norm({k, l}) > norm_bound) break;
      for (auto& g : gc(base, k, l).members)
        if (seen.insert(canonical_code(g, true)).second) out.push_back({{k, l}, std::move(g)});
    }
  std::stable_sort(out.begin(), out.end(), [](const GCFamilyMember& a, const GCFamilyMember& b) {
    return norm(a.parameter) < norm(b.parameter);
  });
  return out;
}

}  // namespace sixreg
