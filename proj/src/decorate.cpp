#include <algorithm>
#include <map>

#include "sixreg/enumerator.hpp"

namespace sixreg {

namespace {

// ---------------------------------------------------------------------------
// Digons: subdivide base edges with degree-2 vertices, then dualise.

// Edge e of `base` is the dart pair (edges[e], twin). Inserts counts[e]
// degree-2 vertices along it.
PlanarMap subdivide(const PlanarMap& base, const std::vector<Dart>& edges, const std::vector<int>& counts) {
  const int n = base.dart_count();
  int extra = 0;
  for (int c : counts) extra += 2 * c;
  std::vector<Dart> twin(base.twins().begin(), base.twins().end());
  std::vector<Dart> rot(base.vertex_nexts().begin(), base.vertex_nexts().end());
  twin.resize(n + extra);
  rot.resize(n + extra);
  Dart next = n;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (counts[e] == 0) continue;
    const Dart d = edges[e];
    const Dart t = base.twin(d);
    Dart prev = d;  // dart pointing into the next new vertex
    for (int i = 0; i < counts[e]; ++i) {
      const Dart back = next++, fwd = next++;
      rot[back] = fwd;
      rot[fwd] = back;
      twin[prev] = back;
      twin[back] = prev;
      prev = fwd;
    }
    twin[prev] = t;
    twin[t] = prev;
  }
  return PlanarMap::build(std::move(twin), std::move(rot));
}

class DigonSearch {
 public:
  explicit DigonSearch(const PlanarMap& base) : base_(base) {
    for (Dart d = 0; d < base.dart_count(); ++d)
      if (d < base.twin(d)) edges_.push_back(d);
    need_.resize(base.face_count());
    for (int f = 0; f < base.face_count(); ++f) need_[f] = 6 - base.face_size(f);
    last_edge_.assign(base.face_count(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      last_edge_[base.face_of(edges_[e])] = static_cast<int>(e);
      last_edge_[base.left_face(edges_[e])] = static_cast<int>(e);
    }
    counts_.assign(edges_.size(), 0);
  }

  std::map<CanonicalCode, PlanarMap> run(bool mirror_quotient) {
    mirror_quotient_ = mirror_quotient;
    for (int f = 0; f < base_.face_count(); ++f)
      if (need_[f] < 0) return {};
    recurse(0);
    return std::move(found_);
  }

 private:
  void recurse(std::size_t e) {
    if (e == edges_.size()) {
      auto g = dual(subdivide(base_, edges_, counts_));
      auto code = canonical_code(g, mirror_quotient_);
      found_.emplace(std::move(code), std::move(g));
      return;
    }
    const Dart d = edges_[e];
    const int right = base_.face_of(d), left = base_.left_face(d);
    // a bridge has the same face on both sides and feeds it twice
    const int per = right == left ? 2 : 1;
    const int max_x = std::min(need_[right], need_[left]) / per;
    for (int x = 0; x <= max_x; ++x) {
      need_[right] -= x;
      need_[left] -= x;
      counts_[e] = x;
      const bool closed_ok = (last_edge_[right] != static_cast<int>(e) || need_[right] == 0) &&
                             (last_edge_[left] != static_cast<int>(e) || need_[left] == 0);
      if (closed_ok) recurse(e + 1);
      need_[right] += x;
      need_[left] += x;
    }
    counts_[e] = 0;
  }

  const PlanarMap& base_;
  std::vector<Dart> edges_;
  std::vector<int> need_;
  std::vector<int> last_edge_;
  std::vector<int> counts_;
  bool mirror_quotient_ = true;
  std::map<CanonicalCode, PlanarMap> found_;
};

// ---------------------------------------------------------------------------
// Unigons: on the triangulation T = dual(base), replace an edge by a bundle of
// parallel edges. Consecutive parallel edges enclose either a 2-gon or a
// blob (a loop at one end bounding a 1-gon, sitting inside a 3-gon).

enum class Filler : std::uint8_t { Digon, BlobAtOrigin, BlobAtHead };

// Bundle fillers are listed from the right side of the edge's canonical dart
// (the smaller dart id) to its left side.
PlanarMap assemble(const PlanarMap& t, const std::vector<Dart>& edges, const std::vector<int>& edge_of,
                   const std::vector<std::vector<Filler>>& bundles) {
  struct Token {
    int edge;
    int index;  // parallel edge index, or filler index for loop darts
    int kind;   // 0 parallel edge at origin, 1 parallel edge at head, 2 loop dart a, 3 loop dart b
  };
  std::vector<Token> tokens;
  std::vector<std::vector<Dart>> at_origin(edges.size()), at_head(edges.size());
  std::vector<std::vector<std::pair<Dart, Dart>>> loops(edges.size());
  std::vector<Dart> rot;

  auto emit = [&](const Token& tok) {
    const Dart id = static_cast<Dart>(tokens.size());
    tokens.push_back(tok);
    return id;
  };

  for (int v = 0; v < t.vertex_count(); ++v) {
    const Dart first = static_cast<Dart>(tokens.size());
    for (Dart d : t.vertex_darts(v)) {
      const int e = edge_of[d];
      const auto& fill = bundles[e];
      const int m = static_cast<int>(fill.size());
      if (edges[e] == d) {
        at_origin[e].resize(m + 1);
        loops[e].resize(m, {-1, -1});
        for (int i = 0; i <= m; ++i) {
          if (i > 0 && fill[i - 1] == Filler::BlobAtOrigin) {
            loops[e][i - 1].first = emit({e, i - 1, 2});
            loops[e][i - 1].second = emit({e, i - 1, 3});
          }
          at_origin[e][i] = emit({e, i, 0});
        }
      } else {
        at_head[e].resize(m + 1);
        loops[e].resize(m, {-1, -1});
        for (int i = m; i >= 0; --i) {
          at_head[e][i] = emit({e, i, 1});
          if (i > 0 && fill[i - 1] == Filler::BlobAtHead) {
            loops[e][i - 1].first = emit({e, i - 1, 2});
            loops[e][i - 1].second = emit({e, i - 1, 3});
          }
        }
      }
    }
    const Dart last = static_cast<Dart>(tokens.size());
    rot.resize(last);
    for (Dart x = first; x < last; ++x) rot[x] = (x + 1 == last) ? first : x + 1;
  }

  std::vector<Dart> twin(tokens.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t i = 0; i < at_origin[e].size(); ++i) {
      twin[at_origin[e][i]] = at_head[e][i];
      twin[at_head[e][i]] = at_origin[e][i];
    }
    for (auto [a, b] : loops[e]) {
      if (a < 0) continue;
      twin[a] = b;
      twin[b] = a;
    }
  }
  return PlanarMap::build(std::move(twin), std::move(rot));
}

class BundleSearch {
 public:
  BundleSearch(const PlanarMap& tri, int ones) : t_(tri), ones_(ones) {
    edge_of_.assign(tri.dart_count(), -1);
    for (Dart d = 0; d < tri.dart_count(); ++d) {
      if (d < tri.twin(d)) {
        edge_of_[d] = edge_of_[tri.twin(d)] = static_cast<int>(edges_.size());
        edges_.push_back(d);
      }
    }
    room_.resize(tri.vertex_count());
    for (int v = 0; v < tri.vertex_count(); ++v) room_[v] = 6 - tri.degree(v);
    last_edge_.assign(tri.vertex_count(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      last_edge_[tri.vertex_of(edges_[e])] = static_cast<int>(e);
      last_edge_[tri.head(edges_[e])] = static_cast<int>(e);
    }
    bundles_.resize(edges_.size());
  }

  std::map<CanonicalCode, PlanarMap> run(bool mirror_quotient) {
    mirror_quotient_ = mirror_quotient;
    for (int r : room_)
      if (r < 0) return {};
    recurse(0);
    return std::move(found_);
  }

 private:
  void recurse(std::size_t e) {
    if (e == edges_.size()) {
      if (blobs_ != ones_) return;
      auto g = assemble(t_, edges_, edge_of_, bundles_);
      auto code = canonical_code(g, mirror_quotient_);
      found_.emplace(std::move(code), std::move(g));
      return;
    }
    extend(e);
  }

  // Grow the bundle of edge e one filler at a time, recursing on e+1 after
  // every prefix (each prefix is itself a complete choice).
  void extend(std::size_t e) {
    const Dart d = edges_[e];
    const int u = t_.vertex_of(d), v = t_.head(d);
    const int ie = static_cast<int>(e);
    const bool u_done = last_edge_[u] != ie || room_[u] == 0;
    const bool v_done = last_edge_[v] != ie || room_[v] == 0;
    if (u_done && v_done) recurse(e + 1);

    for (Filler f : {Filler::Digon, Filler::BlobAtOrigin, Filler::BlobAtHead}) {
      const bool blob = f != Filler::Digon;
      if (blob && blobs_ == ones_) continue;
      const int cost_u = 1 + (f == Filler::BlobAtOrigin ? 2 : 0);
      const int cost_v = 1 + (f == Filler::BlobAtHead ? 2 : 0);
      room_[u] -= cost_u;
      room_[v] -= cost_v;
      if (room_[u] >= 0 && room_[v] >= 0) {
        bundles_[e].push_back(f);
        if (blob) ++blobs_;
        extend(e);
        if (blob) --blobs_;
        bundles_[e].pop_back();
      }
      room_[u] += cost_u;
      room_[v] += cost_v;
    }
  }

  const PlanarMap& t_;
  int ones_;
  std::vector<Dart> edges_;
  std::vector<int> edge_of_;
  std::vector<int> room_;
  std::vector<int> last_edge_;
  std::vector<std::vector<Filler>> bundles_;
  int blobs_ = 0;
  bool mirror_quotient_ = true;
  std::map<CanonicalCode, PlanarMap> found_;
};

std::vector<PlanarMap> values(std::map<CanonicalCode, PlanarMap>&& found) {
  std::vector<PlanarMap> out;
  out.reserve(found.size());
  for (auto& [code, m] : found) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<PlanarMap> insert_digons(const PlanarMap& base, bool mirror_quotient) {
  return values(DigonSearch(base).run(mirror_quotient));
}

std::vector<PlanarMap> insert_unigons(const PlanarMap& base, int ones, bool mirror_quotient) {
  if (ones < 1 || ones > 3) throw EnumerationError("number of 1-gons must be 1, 2 or 3");
  const PlanarMap tri = dual(base);
  return values(BundleSearch(tri, ones).run(mirror_quotient));
}

namespace detail {
std::vector<PlanarMap> decorate_triangulation(const PlanarMap& tri, int ones, bool mirror_quotient) {
  return values(BundleSearch(tri, ones).run(mirror_quotient));
}
}  // namespace detail

}  // namespace sixreg
