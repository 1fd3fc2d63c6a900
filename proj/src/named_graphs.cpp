#include "sixreg/named_graphs.hpp"

#include <array>
#include <map>
#include <regex>

#include "sixreg/goldberg_coxeter.hpp"

namespace sixreg {

namespace {

struct KindName {
  NamedKind kind;
  const char* name;
  bool series;
};

constexpr KindName kKinds[] = {
    {NamedKind::SixK2, "SixK2", false},
    {NamedKind::ThreeK3, "ThreeK3", false},
    {NamedKind::Trifolium, "Trifolium", false},
    {NamedKind::T2, "T2", false},
    {NamedKind::K2Tetrahedron, "K2Tetrahedron", false},
    {NamedKind::R, "R", true},
    {NamedKind::S, "S", true},
    {NamedKind::SV, "SV", true},
    {NamedKind::A, "A", true},
    {NamedKind::B, "B", true},
    {NamedKind::C, "C", true},
    {NamedKind::Ti, "Ti", true},
};

const KindName& info(NamedKind k) {
  for (const auto& e : kKinds)
    if (e.kind == k) return e;
  throw BadParameter("unknown named graph kind");
}

int min_param(NamedKind k) { return (k == NamedKind::B || k == NamedKind::C) ? 2 : 1; }

Dart vnext3(const PlanarMap& m, Dart d) { return m.vertex_next(m.vertex_next(m.vertex_next(d))); }

// Repeated railroad insertion from a seed, following the freshly created band.
PlanarMap grow(PlanarMap m, Dart start, Shear shear, int times) {
  for (int i = 0; i < times; ++i) m = insert_railroad(m, start, shear, &start);
  return m;
}

// A 1-gon whose vertex lies on a 2-gon at one end, three 2-gons at the other.
PlanarMap r_seed() { return from_edge_labels({{0, 1, 2, 3, 4, 0}, {1, 4, 5, 6, 7, 8}, {2, 8, 7, 6, 5, 3}}); }

// The two n=4 members of the S family; the ends differ by a half turn.
PlanarMap s_seed() {
  return from_edge_labels({{0, 1, 2, 3, 4, 0}, {1, 4, 5, 6, 7, 8}, {2, 8, 9, 10, 5, 3}, {6, 10, 11, 11, 9, 7}});
}
PlanarMap sv_seed() {
  return from_edge_labels({{0, 1, 2, 3, 4, 0}, {1, 4, 5, 6, 7, 8}, {2, 8, 9, 10, 5, 3}, {6, 10, 9, 7, 11, 11}});
}

// Face class holding the 1-gons.
int unigon_class(const PlanarMap& m) {
  const auto parts = face_bipartition(m);
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_size(f) == 1) return parts.face_class[f];
  throw BadParameter("map has no 1-gon");
}

// Helical tube: vertex k is joined to k+-1 twice and to k+-2 once. Both ends
// carry a 1-gon; B and C differ by the side on which the last loop sits.
PlanarMap helix(int n, bool loop_last) {
  // P(k), Q(k): the two edges k -> k+1; E(k): edge k -> k+2
  auto P = [&](int k) { return 3 * k; };
  auto Q = [&](int k) { return 3 * k + 1; };
  auto E = [&](int k) { return 3 * k + 2; };
  const int X = 3 * n, Y = 3 * n + 1, L0 = 3 * n + 2, L1 = 3 * n + 3;
  auto e_label = [&](int k) {
    if (k == -1) return X;
    if (k == n - 2) return Y;
    return E(k);
  };
  std::vector<std::vector<int>> rot(n);
  for (int k = 0; k < n; ++k) {
    std::vector<int> ahead, behind;
    if (k == n - 1)
      ahead = loop_last ? std::vector<int>{L1, L1, Y} : std::vector<int>{Y, L1, L1};
    else
      ahead = {P(k), e_label(k), Q(k)};
    if (k == 0)
      behind = {L0, L0, X};
    else
      behind = {P(k - 1), e_label(k - 2), Q(k - 1)};
    rot[k] = ahead;
    rot[k].insert(rot[k].end(), behind.begin(), behind.end());
  }
  return from_edge_labels(rot);
}

}  // namespace

bool NamedGraphId::is_series() const { return info(kind).series; }

std::string NamedGraphId::to_string() const {
  const auto& k = info(kind);
  if (!k.series) return k.name;
  return std::string(k.name) + "(" + std::to_string(param) + ")";
}

NamedGraphId NamedGraphId::parse(const std::string& text) {
  static const std::regex re(R"(^\s*([A-Za-z0-9]+)\s*(?:\(\s*(\d+)\s*\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw BadParameter("cannot parse named graph '" + text + "'");
  for (const auto& k : kKinds) {
    if (m[1].str() != k.name) continue;
    if (k.series != m[2].matched) throw BadParameter("parameter mismatch in '" + text + "'");
    NamedGraphId id{k.kind, k.series ? std::stoi(m[2].str()) : 0};
    named_graph_vertices(id);  // validates the parameter
    return id;
  }
  throw BadParameter("unknown named graph '" + text + "'");
}

int named_graph_vertices(const NamedGraphId& id) {
  if (id.is_series() && id.param < min_param(id.kind))
    throw BadParameter("parameter out of range for " + id.to_string());
  const int i = id.param;
  switch (id.kind) {
    case NamedKind::SixK2: return 2;
    case NamedKind::ThreeK3: return 3;
    case NamedKind::Trifolium: return 1;
    case NamedKind::T2: return 3;
    case NamedKind::K2Tetrahedron: return 4;
    case NamedKind::R: return 2 * i + 1;
    case NamedKind::S: return 2 * i;
    case NamedKind::SV: return 4 * i;
    case NamedKind::A:
    case NamedKind::B:
    case NamedKind::C: return i;
    case NamedKind::Ti: {
      if (i > 12) throw BadParameter("Ti parameter too large");
      int n = 1;
      for (int k = 1; k < i; ++k) n *= 3;
      return n;
    }
  }
  throw BadParameter("unknown named graph kind");
}

PlanarMap named_graph(const NamedGraphId& id) {
  named_graph_vertices(id);
  const int i = id.param;
  switch (id.kind) {
    case NamedKind::SixK2: return from_edge_labels({{0, 1, 2, 3, 4, 5}, {5, 4, 3, 2, 1, 0}});
    case NamedKind::ThreeK3:
      return from_edge_labels({{0, 1, 2, 8, 7, 6}, {2, 1, 0, 3, 4, 5}, {5, 4, 3, 6, 7, 8}});
    case NamedKind::Trifolium: return from_edge_labels({{0, 0, 1, 1, 2, 2}});
    case NamedKind::T2: return named_graph({NamedKind::Ti, 2});
    case NamedKind::K2Tetrahedron:
      // tetrahedron 0..3 with every edge doubled
      return from_edge_labels({{0, 1, 2, 3, 4, 5},
                               {1, 0, 11, 10, 7, 6},
                               {3, 2, 6, 7, 8, 9},
                               {5, 4, 9, 8, 10, 11}});
    case NamedKind::R: return grow(r_seed(), 8, Shear::Forward, i - 1);
    case NamedKind::S: {
      if (i == 1) return helix(2, false);
      // one band per step cycles C2h, C2, C2v, C2; switch seeds so that
      // S keeps the centrosymmetric member and SV the mirror-symmetric one
      const int steps = i - 2;
      return grow(steps % 4 == 2 ? sv_seed() : s_seed(), 8, Shear::Forward, steps);
    }
    case NamedKind::SV: {
      const int steps = 2 * i - 2;
      return grow(steps % 4 == 0 ? sv_seed() : s_seed(), 8, Shear::Forward, steps);
    }
    case NamedKind::A: return grow(from_edge_labels({{0, 1, 2, 2, 1, 0}}), 1, Shear::Forward, i - 1);
    case NamedKind::B: return helix(i, false);
    case NamedKind::C: return helix(i, true);
    case NamedKind::Ti: {
      PlanarMap m = named_graph({NamedKind::Trifolium});
      for (int k = 1; k < i; ++k) m = oriented_tripling(m, unigon_class(m));
      return m;
    }
  }
  throw BadParameter("unknown named graph kind");
}

std::vector<NamedGraphId> named_graphs_up_to(int max_n) {
  std::vector<NamedGraphId> out;
  for (const auto& k : kKinds) {
    if (!k.series) {
      NamedGraphId id{k.kind, 0};
      if (named_graph_vertices(id) <= max_n) out.push_back(id);
      continue;
    }
    for (int i = min_param(k.kind);; ++i) {
      NamedGraphId id{k.kind, i};
      if (k.kind == NamedKind::Ti && i > 12) break;
      if (named_graph_vertices(id) > max_n) break;
      out.push_back(id);
    }
  }
  return out;
}

PlanarMap from_edge_labels(const std::vector<std::vector<int>>& rotation) {
  std::vector<Dart> rot, twin;
  std::map<int, Dart> open;
  for (const auto& vertex : rotation) {
    const Dart first = static_cast<Dart>(rot.size());
    for (std::size_t k = 0; k < vertex.size(); ++k) {
      const Dart d = static_cast<Dart>(rot.size());
      rot.push_back(k + 1 == vertex.size() ? first : d + 1);
      twin.push_back(-1);
      auto it = open.find(vertex[k]);
      if (it == open.end()) {
        open.emplace(vertex[k], d);
      } else {
        twin[d] = it->second;
        twin[it->second] = d;
        open.erase(it);
      }
    }
  }
  if (!open.empty()) throw MapError(MapError::Kind::BadInput, "edge label used only once");
  return PlanarMap::build(std::move(twin), std::move(rot));
}

PlanarMap insert_railroad(const PlanarMap& m, Dart start, Shear shear, Dart* next) {
  if (start < 0 || start >= m.dart_count()) throw MapError(MapError::Kind::BadInput, "dart out of range");
  std::vector<Dart> fw;
  Dart d = start;
  do {
    fw.push_back(d);
    d = vnext3(m, m.twin(d));
  } while (d != start);
  const int len = static_cast<int>(fw.size());
  std::vector<char> on_circuit(m.vertex_count(), 0);
  for (Dart x : fw) {
    if (m.degree(m.vertex_of(x)) != 6) throw MapError(MapError::Kind::BadInput, "railroad needs a 6-regular map");
    if (on_circuit[m.vertex_of(x)]++) throw MapError(MapError::Kind::BadInput, "central circuit is not simple");
  }

  const int old = m.dart_count();
  std::vector<Dart> twin(m.twins().begin(), m.twins().end());
  std::vector<Dart> rot(m.vertex_nexts().begin(), m.vertex_nexts().end());
  twin.resize(old + 6 * len, -1);
  rot.resize(old + 6 * len, -1);
  // circuit darts stay with the left copy; the right copy and the rungs are new
  std::vector<Dart> back_left(len), fwd_right(len), back_right(len), down1(len), down2(len), up1(len), up2(len);
  Dart fresh = old;
  for (int i = 0; i < len; ++i) {
    back_left[i] = m.twin(fw[(i + len - 1) % len]);
    fwd_right[i] = fresh++;
    back_right[i] = fresh++;
    down1[i] = fresh++;
    down2[i] = fresh++;
    up1[i] = fresh++;
    up2[i] = fresh++;
  }
  auto link = [&](Dart a, Dart b) {
    twin[a] = b;
    twin[b] = a;
  };
  auto cycle = [&](const std::array<Dart, 6>& c) {
    for (int k = 0; k < 6; ++k) rot[c[k]] = c[(k + 1) % 6];
  };
  for (int i = 0; i < len; ++i) {
    const Dart a = fw[i];
    const Dart l1 = m.vertex_next(a), l2 = m.vertex_next(l1);
    const Dart r1 = m.vertex_next(back_left[i]), r2 = m.vertex_next(r1);
    cycle({a, l1, l2, back_left[i], down1[i], down2[i]});
    cycle({fwd_right[i], up1[i], up2[i], back_right[i], r1, r2});
  }
  for (int i = 0; i < len; ++i) {
    const int j = (i + 1) % len, p = (i + len - 1) % len;
    link(fw[i], back_left[j]);
    link(fwd_right[i], back_right[j]);
    if (shear == Shear::Forward) {
      link(down1[i], up1[i]);
      link(down2[i], up2[j]);
    } else {
      link(down1[i], up1[p]);
      link(down2[i], up2[i]);
    }
  }
  if (next) *next = fwd_right[0];
  return PlanarMap::build(std::move(twin), std::move(rot));
}

}  // namespace sixreg
