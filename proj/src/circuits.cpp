#include "sixreg/circuits.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <regex>

namespace sixreg {

std::string CircuitSymbol::to_string() const {
  std::string s = std::to_string(length);
  if (alpha1 || alpha2) s += "_{" + std::to_string(alpha1) + "," + std::to_string(alpha2) + "}";
  return s;
}

int CircuitVector::total_length() const {
  int t = 0;
  for (const auto& s : symbols) t += s.length;
  return t;
}

std::string CircuitVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size();) {
    std::size_t j = i;
    while (j < symbols.size() && symbols[j] == symbols[i]) ++j;
    if (!out.empty()) out += ", ";
    out += symbols[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

CircuitVector CircuitVector::parse(const std::string& text) {
  static const std::regex token(R"(\s*(\d+)(?:_\{(\d+),(\d+)\})?(?:\^(\d+))?\s*)");
  CircuitVector v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    // commas inside _{a,b} are not separators
    std::size_t brace = text.find('{', pos);
    if (brace != std::string::npos && brace < comma) comma = text.find(',', text.find('}', brace));
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::smatch mt;
    if (!std::regex_match(part, mt, token)) throw BadParameter("bad circuit symbol: " + part);
    CircuitSymbol s{std::stoi(mt[1]), mt[2].matched ? std::stoi(mt[2]) : 0, mt[3].matched ? std::stoi(mt[3]) : 0};
    const int mult = mt[4].matched ? std::stoi(mt[4]) : 1;
    for (int i = 0; i < mult; ++i) v.symbols.push_back(s);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::sort(v.symbols.begin(), v.symbols.end());
  return v;
}

bool CircuitSet::all_simple() const {
  for (std::size_t i = 0; i < circuits.size(); ++i)
    if (matrix[i][i].size() > 0) return false;
  return true;
}

std::vector<bool> canonical_orientation(const PlanarMap& m) {
  const auto bip = face_bipartition(m);
  std::vector<bool> forward(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) forward[d] = bip.face_class[m.face_of(d)] == 0;
  return forward;
}

namespace {

Dart central_step(const PlanarMap& m, Dart d) {
  Dart e = m.twin(d);
  for (int i = 0; i < 3; ++i) e = m.vertex_next(e);
  return e;
}

void check_six_regular(const PlanarMap& m) {
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) % 2) throw MapError(MapError::Kind::OddVertexDegree, "vertex of odd degree");
}

// position of d in the rotation at its vertex
std::vector<int> rotation_index(const PlanarMap& m) {
  std::vector<int> idx(m.dart_count());
  for (int v = 0; v < m.vertex_count(); ++v) {
    auto ds = m.vertex_darts(v);
    for (int i = 0; i < static_cast<int>(ds.size()); ++i) idx[ds[i]] = i;
  }
  return idx;
}

CircuitSet finish(const PlanarMap& m, CircuitKind kind, std::vector<Circuit> circuits) {
  CircuitSet set;
  set.kind = kind;
  set.circuits = std::move(circuits);
  set.matrix = intersection_matrix(m, set.circuits);
  set.vector = circuit_vector(set.circuits, set.matrix);
  return set;
}

}  // namespace

CircuitSet zigzags(const PlanarMap& m) {
  check_six_regular(m);
  const auto forward = canonical_orientation(m);
  // state 2d+s: dart d, next turn right (s=0: keep the face on the right) or left
  std::vector<char> seen(2 * m.dart_count(), 0);
  std::vector<Circuit> out;
  for (Dart d0 = 0; d0 < m.dart_count(); ++d0) {
    if (!forward[d0]) continue;
    for (int s0 = 0; s0 < 2; ++s0) {
      if (seen[2 * d0 + s0]) continue;
      Circuit c{CircuitKind::Zigzag, {}};
      Dart d = d0;
      int s = s0;
      while (!seen[2 * d + s]) {
        seen[2 * d + s] = 1;
        c.darts.push_back(d);
        d = s == 0 ? m.vertex_next(m.twin(d)) : m.vertex_prev(m.twin(d));
        s ^= 1;
      }
      out.push_back(std::move(c));
    }
  }
  return finish(m, CircuitKind::Zigzag, std::move(out));
}

CircuitSet central_circuits(const PlanarMap& m) {
  check_six_regular(m);
  const auto forward = canonical_orientation(m);
  std::vector<char> seen(m.dart_count(), 0);
  std::vector<Circuit> out;
  for (Dart d0 = 0; d0 < m.dart_count(); ++d0) {
    if (!forward[d0] || seen[d0]) continue;
    Circuit c{CircuitKind::Central, {}};
    for (Dart d = d0; !seen[d]; d = central_step(m, d)) {
      seen[d] = 1;
      c.darts.push_back(d);
    }
    out.push_back(std::move(c));
  }
  return finish(m, CircuitKind::Central, std::move(out));
}

Circuit reversed(const PlanarMap& m, const Circuit& c) {
  Circuit r{c.kind, {}};
  for (auto it = c.darts.rbegin(); it != c.darts.rend(); ++it) r.darts.push_back(m.twin(*it));
  return r;
}

IntersectionMatrix intersection_matrix(const PlanarMap& m, const std::vector<Circuit>& circuits) {
  const int k = static_cast<int>(circuits.size());
  IntersectionMatrix mat(k, std::vector<IntersectionEntry>(k));
  if (k == 0) return mat;
  struct Pass {
    int circuit;
    Dart dart;
  };
  auto record = [&](int i, int j, bool type2) {
    auto& e = mat[i][j];
    (type2 ? e.type2 : e.type1)++;
    if (i != j) {
      auto& f = mat[j][i];
      (type2 ? f.type2 : f.type1)++;
    }
  };

  if (circuits[0].kind == CircuitKind::Zigzag) {
    std::vector<std::vector<Pass>> on_edge(m.edge_count());
    std::map<Dart, int> edge_id;
    for (Dart d = 0; d < m.dart_count(); ++d)
      if (d < m.twin(d)) edge_id.emplace(d, static_cast<int>(edge_id.size()));
    for (int i = 0; i < k; ++i)
      for (Dart d : circuits[i].darts) on_edge[edge_id.at(std::min(d, m.twin(d)))].push_back({i, d});
    for (const auto& ps : on_edge)
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) record(ps[a].circuit, ps[b].circuit, ps[a].dart == ps[b].dart);
    return mat;
  }

  const auto idx = rotation_index(m);
  std::vector<std::vector<Pass>> at_vertex(m.vertex_count());
  for (int i = 0; i < k; ++i)
    for (Dart d : circuits[i].darts) at_vertex[m.vertex_of(d)].push_back({i, d});
  for (int v = 0; v < m.vertex_count(); ++v) {
    const auto& ps = at_vertex[v];
    const int deg = m.degree(v);
    for (std::size_t a = 0; a < ps.size(); ++a)
      for (std::size_t b = a + 1; b < ps.size(); ++b) {
        const int shift = ((idx[ps[a].dart] - idx[ps[b].dart]) % deg + deg) % deg;
        // passages along the same axis do not cross
        if (shift == 0 || 2 * shift == deg) continue;
        const int turn = std::min(shift, deg - shift);
        record(ps[a].circuit, ps[b].circuit, turn % 2 == 0);
      }
  }
  return mat;
}

CircuitVector circuit_vector(const std::vector<Circuit>& circuits, const IntersectionMatrix& matrix) {
  CircuitVector v;
  for (std::size_t i = 0; i < circuits.size(); ++i)
    v.symbols.push_back({circuits[i].length(), matrix[i][i].type1, matrix[i][i].type2});
  std::sort(v.symbols.begin(), v.symbols.end());
  return v;
}

std::vector<int> side_faces(const PlanarMap& m, const Circuit& c, int side) {
  std::vector<int> out;
  for (Dart d : c.darts) out.push_back(side == 0 ? m.face_of(d) : m.left_face(d));
  return out;
}

namespace {

// Faces touching a central circuit at a vertex only, on its right.
std::vector<int> central_vertex_faces(const PlanarMap& m, const Circuit& c) {
  std::vector<int> out;
  for (Dart d : c.darts) out.push_back(m.face_of(m.vertex_prev(d)));
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool all_triangles(const PlanarMap& m, const std::vector<int>& faces) {
  return std::all_of(faces.begin(), faces.end(), [&](int f) { return m.face_size(f) == 3; });
}

// Far sides of the triangles a zigzag bends around on its right, or nullopt
// when some of them is not a triangle.
std::optional<std::vector<int>> zigzag_far_faces(const PlanarMap& m, const Circuit& z) {
  std::vector<int> far;
  const int len = z.length();
  for (int i = 0; i < len; ++i) {
    const Dart d = z.darts[i], e = z.darts[(i + 1) % len];
    if (m.face_next(d) != e) continue;
    if (m.face_size(m.face_of(d)) != 3) return std::nullopt;
    const int f = m.left_face(m.face_next(e));
    if (m.face_size(f) != 3) return std::nullopt;
    far.push_back(f);
    far.push_back(f);
  }
  return far;
}

}  // namespace

std::vector<Railroad> railroads(const PlanarMap& m, const CircuitSet& set) {
  const int k = static_cast<int>(set.circuits.size());
  // oriented copies: 2i is circuit i (right side), 2i+1 its reverse (left side)
  std::vector<Circuit> sides;
  for (const auto& c : set.circuits) {
    sides.push_back(c);
    sides.push_back(reversed(m, c));
  }
  std::vector<std::vector<int>> edge_faces(2 * k);
  for (int s = 0; s < 2 * k; ++s) edge_faces[s] = sorted(side_faces(m, sides[s], 0));

  std::vector<Railroad> out;
  for (int s = 0; s < 2 * k; ++s) {
    const auto& mine = side_faces(m, sides[s], 0);
    if (!all_triangles(m, mine)) continue;
    std::vector<int> ring;
    int partner = -1;
    if (set.kind == CircuitKind::Central) {
      const auto vf = central_vertex_faces(m, sides[s]);
      if (!all_triangles(m, vf)) continue;
      const auto vfs = sorted(vf);
      for (int t = 0; t < 2 * k && partner < 0; ++t) {
        if (t == s || edge_faces[t] != vfs) continue;
        if (sorted(central_vertex_faces(m, sides[t])) == edge_faces[s]) partner = t;
      }
      ring = mine;
      ring.insert(ring.end(), vf.begin(), vf.end());
    } else {
      const auto far = zigzag_far_faces(m, sides[s]);
      if (!far) continue;
      const auto fs = sorted(*far);
      for (int t = 0; t < 2 * k && partner < 0; ++t)
        if (t != s && edge_faces[t] == fs) partner = t;
      ring = mine;
      ring.insert(ring.end(), far->begin(), far->end());
    }
    if (partner < 0) continue;
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    out.push_back({s / 2, s % 2, partner / 2, partner % 2, std::move(ring)});
  }
  return out;
}

std::vector<Railroad> railroads(const PlanarMap& m, CircuitKind kind) {
  return railroads(m, kind == CircuitKind::Zigzag ? zigzags(m) : central_circuits(m));
}

std::string to_string(Tightness t) {
  switch (t) {
    case Tightness::Tight: return "tight";
    case Tightness::WeaklyTight: return "weakly_tight";
    default: return "neither";
  }
}

TightnessReport tightness(const PlanarMap& m, const CircuitSet& set) {
  TightnessReport r;
  r.kind = set.kind;
  const auto p = m.p_vector();
  r.s_value = p[1] + 2 * p[2];
  r.circuit_count = static_cast<int>(set.circuits.size());
  r.railroads = railroads(m, set);
  bool tight = true;
  for (const auto& c : set.circuits)
    for (int side = 0; side < 2 && tight; ++side)
      if (all_triangles(m, side_faces(m, c, side))) tight = false;
  r.status = tight ? Tightness::Tight : r.railroads.empty() ? Tightness::WeaklyTight : Tightness::Neither;
  return r;
}

TightnessReport tightness(const PlanarMap& m, CircuitKind kind) {
  return tightness(m, kind == CircuitKind::Zigzag ? zigzags(m) : central_circuits(m));
}

PatchReport patch_euler_check(const PlanarMap& m, const std::vector<int>& faces) {
  std::vector<char> in(m.face_count(), 0);
  for (int f : faces) in[f] = 1;
  PatchReport r;
  for (int f : faces)
    if (m.face_size(f) == 2) ++r.p2_count;

  std::vector<Dart> next(m.dart_count(), -1);
  int boundary = 0;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (!in[m.face_of(d)] || in[m.left_face(d)]) continue;
    ++boundary;
    const Dart x = m.twin(d);
    const int deg = m.degree(m.vertex_of(x));
    int angle = 1;
    Dart e = m.vertex_next(x);
    while (in[m.face_of(m.vertex_next(e))] && angle < deg) {
      e = m.vertex_next(e);
      ++angle;
    }
    if (2 * angle > deg) throw IrregularPatch("boundary bends away from the patch");
    if (2 * angle < deg) (angle == 1 ? r.t_ac : r.t_ob)++;
    next[d] = e;
  }
  if (boundary > 0) {
    Dart start = 0;
    while (next[start] < 0) ++start;
    int walked = 0;
    Dart d = start;
    do {
      d = next[d];
      ++walked;
    } while (d != start && walked <= boundary);
    if (walked != boundary) throw IrregularPatch("patch boundary is not a single closed curve");
  }
  r.holds = 6 - r.t_ob - 2 * r.t_ac == 2 * r.p2_count;
  return r;
}

namespace {

std::vector<std::vector<int>> face_components(const PlanarMap& m, const std::vector<char>& cut_edge_dart) {
  std::vector<int> comp(m.face_count(), -1);
  std::vector<std::vector<int>> out;
  for (int f0 = 0; f0 < m.face_count(); ++f0) {
    if (comp[f0] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(f0);
    comp[f0] = id;
    while (!q.empty()) {
      const int f = q.front();
      q.pop();
      out[id].push_back(f);
      for (Dart d : m.face_darts(f)) {
        if (cut_edge_dart[d]) continue;
        const int g = m.left_face(d);
        if (comp[g] < 0) {
          comp[g] = id;
          q.push(g);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> regions_between(const PlanarMap& m, const Circuit& a, const Circuit& b) {
  std::vector<char> cut(m.dart_count(), 0);
  for (const Circuit* c : {&a, &b})
    for (Dart d : c->darts) cut[d] = cut[m.twin(d)] = 1;
  return face_components(m, cut);
}

std::vector<int> interior_faces(const PlanarMap& m, const Circuit& c, int side) {
  std::vector<char> cut(m.dart_count(), 0);
  for (Dart d : c.darts) cut[d] = cut[m.twin(d)] = 1;
  const int target = side == 0 ? m.face_of(c.darts[0]) : m.left_face(c.darts[0]);
  for (auto& comp : face_components(m, cut))
    if (std::binary_search(comp.begin(), comp.end(), target)) return comp;
  return {};
}

CorpusGraph analyse(const PlanarMap& m) {
  CorpusGraph g;
  g.n = m.vertex_count();
  g.p1 = m.p_vector()[1];
  const auto z = zigzags(m);
  const auto c = central_circuits(m);
  g.z_count = static_cast<int>(z.circuits.size());
  g.c_count = static_cast<int>(c.circuits.size());
  g.z = tightness(m, z).status;
  g.c = tightness(m, c).status;
  return g;
}

CorpusBounds classify_corpus(const std::vector<CorpusGraph>& graphs) {
  static constexpr int tight_bound[4] = {6, 4, 3, 1};
  CorpusBounds b;
  auto check = [&](const CorpusGraph& g, const char* kind, Tightness t, int count, int* max_tight, int* max_weak) {
    if (t == Tightness::Tight) {
      max_tight[g.p1] = std::max(max_tight[g.p1], count);
      if (count > tight_bound[g.p1])
        b.violations.push_back("n=" + std::to_string(g.n) + " " + kind + "-tight with " + std::to_string(count));
    }
    if (t != Tightness::Neither) {
      max_weak[g.p1] = std::max(max_weak[g.p1], count);
      if (count > 9 - 2 * g.p1)
        b.violations.push_back("n=" + std::to_string(g.n) + " " + kind + "-weakly tight with " + std::to_string(count));
    }
  };
  for (const auto& g : graphs) {
    if (g.p1 < 0 || g.p1 > 3) continue;
    check(g, "z", g.z, g.z_count, b.max_tight_z, b.max_weak_z);
    check(g, "c", g.c, g.c_count, b.max_tight_c, b.max_weak_c);
    if (g.z_count == 1) ++b.z_knotted;
    if (g.c_count == 1) ++b.c_knotted;
  }
  return b;
}

TransformedVectors gc_line_vectors(const CircuitVector& z, const CircuitVector& c, int u) {
  if (u < 0) throw BadParameter("u must be non-negative");
  const int f = 1 + 3 * u;
  TransformedVectors t;
  auto put = [](CircuitVector& v, const CircuitSymbol& s, int length, int mult) {
    for (int i = 0; i < mult; ++i) v.symbols.push_back({length, s.alpha1, s.alpha2});
  };
  for (const auto& s : z.symbols) {
    if (s.length * f % 2) throw BadParameter("odd zigzag length");
    put(t.z, s, s.length * f, 1 + u);
    put(t.c, s, s.length * f / 2, u);
  }
  for (const auto& s : c.symbols) {
    put(t.z, s, 2 * s.length * f, 2 * u);
    put(t.c, s, s.length * f, 1 + 2 * u);
  }
  std::sort(t.z.symbols.begin(), t.z.symbols.end());
  std::sort(t.c.symbols.begin(), t.c.symbols.end());
  return t;
}

}  // namespace sixreg
