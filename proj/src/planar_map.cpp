#include "sixreg/planar_map.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <tuple>

namespace sixreg {

namespace {

std::vector<Dart> invert(const std::vector<Dart>& p) {
  std::vector<Dart> inv(p.size());
  for (std::size_t d = 0; d < p.size(); ++d) inv[p[d]] = static_cast<Dart>(d);
  return inv;
}

// Labels cycles of a permutation; returns the number of cycles.
int label_cycles(const std::vector<Dart>& perm, std::vector<int>& id, std::vector<Dart>& first,
                 std::vector<int>& size) {
  const auto n = perm.size();
  id.assign(n, -1);
  first.clear();
  size.clear();
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (id[s] != -1) continue;
    first.push_back(static_cast<Dart>(s));
    int len = 0;
    for (Dart d = static_cast<Dart>(s); id[d] == -1; d = perm[d]) {
      id[d] = count;
      ++len;
    }
    size.push_back(len);
    ++count;
  }
  return count;
}

constexpr int kMaxDarts = std::numeric_limits<std::uint16_t>::max();

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw MapError(MapError::Kind::BadInput, "odd-length hex code");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw MapError(MapError::Kind::BadInput, std::string("bad hex digit '") + c + "'");
  };
  CanonicalCode code;
  code.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    code.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return code;
}

FaceBipartition FaceBipartition::swapped() const {
  FaceBipartition out = *this;
  for (auto& c : out.face_class) c ^= 1;
  return out;
}

PlanarMap PlanarMap::build(std::vector<Dart> twin, std::vector<Dart> vertex_next) {
  using K = MapError::Kind;
  const auto n = twin.size();
  if (n != vertex_next.size()) throw MapError(K::BadInput, "twin and vertex_next differ in length");
  if (n == 0 || n % 2 != 0) throw MapError(K::BadInput, "dart count must be positive and even");
  if (n > static_cast<std::size_t>(kMaxDarts)) throw MapError(K::BadInput, "too many darts");

  for (std::size_t d = 0; d < n; ++d) {
    const Dart t = twin[d];
    if (t < 0 || static_cast<std::size_t>(t) >= n) throw MapError(K::NotInvolution, "twin entry out of range");
    if (static_cast<std::size_t>(t) == d) throw MapError(K::NotInvolution, "twin has a fixed point");
    if (static_cast<std::size_t>(twin[t]) != d) throw MapError(K::NotInvolution, "twin is not an involution");
  }
  std::vector<char> seen(n, 0);
  for (Dart v : vertex_next) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
      throw MapError(K::NotPermutation, "vertex_next is not a permutation");
    seen[v] = 1;
  }

  PlanarMap m;
  m.twin_ = std::move(twin);
  m.vnext_ = std::move(vertex_next);
  m.vprev_ = invert(m.vnext_);
  m.fnext_.resize(n);
  for (std::size_t d = 0; d < n; ++d) m.fnext_[d] = m.vnext_[m.twin_[d]];
  m.fprev_ = invert(m.fnext_);

  // connectivity under <twin, vertex_next>
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {m.twin_[d], m.vnext_[d], m.vprev_[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) throw MapError(K::Disconnected, "map is not connected");

  m.vertex_count_ = label_cycles(m.vnext_, m.vertex_of_, m.vertex_first_, m.vertex_size_);
  m.face_count_ = label_cycles(m.fnext_, m.face_of_, m.face_first_, m.face_size_);
  const int euler = m.vertex_count_ - static_cast<int>(n / 2) + m.face_count_;
  if (euler != 2) throw MapError(K::GenusNotZero, "Euler characteristic is " + std::to_string(euler) + ", not 2");
  return m;
}

std::vector<Dart> PlanarMap::vertex_darts(int v) const {
  std::vector<Dart> out;
  const Dart s = vertex_first_[v];
  Dart d = s;
  do {
    out.push_back(d);
    d = vnext_[d];
  } while (d != s);
  return out;
}

std::vector<Dart> PlanarMap::face_darts(int f) const {
  std::vector<Dart> out;
  const Dart s = face_first_[f];
  Dart d = s;
  do {
    out.push_back(d);
    d = fnext_[d];
  } while (d != s);
  return out;
}

PVector PlanarMap::p_vector() const {
  PVector p;
  for (int s : face_size_) ++p.count[s];
  return p;
}

bool PlanarMap::is_regular(int deg) const {
  return std::all_of(vertex_size_.begin(), vertex_size_.end(), [deg](int s) { return s == deg; });
}

bool PlanarMap::is_sphere123() const {
  if (!is_regular(6)) return false;
  const auto p = p_vector();
  for (const auto& [size, count] : p.count)
    if (size < 1 || size > 3) return false;
  // Euler for 6-regular maps: sum_k p_k (3 - k) = 6
  return 2 * p[1] + p[2] == 6;
}

PlanarMap dual(const PlanarMap& m) {
  std::vector<Dart> twin(m.twins().begin(), m.twins().end());
  std::vector<Dart> rot(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) rot[d] = m.face_next(d);
  return PlanarMap::build(std::move(twin), std::move(rot));
}

PlanarMap mirror(const PlanarMap& m) {
  std::vector<Dart> twin(m.twins().begin(), m.twins().end());
  std::vector<Dart> rot(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) rot[d] = m.vertex_prev(d);
  return PlanarMap::build(std::move(twin), std::move(rot));
}

PlanarMap truncate(const PlanarMap& m) {
  const int n = m.dart_count();
  std::vector<Dart> twin(3 * n), rot(3 * n);
  for (Dart d = 0; d < n; ++d) {
    twin[3 * d] = 3 * m.twin(d);
    twin[3 * d + 1] = 3 * m.vertex_next(d) + 2;
    twin[3 * d + 2] = 3 * m.vertex_prev(d) + 1;
    rot[3 * d] = 3 * d + 1;
    rot[3 * d + 1] = 3 * d + 2;
    rot[3 * d + 2] = 3 * d;
  }
  return PlanarMap::build(std::move(twin), std::move(rot));
}

FaceBipartition face_bipartition(const PlanarMap& m) {
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) % 2 != 0)
      throw MapError(MapError::Kind::OddVertexDegree, "vertex " + std::to_string(v) + " has odd degree");
  FaceBipartition out;
  out.face_class.assign(m.face_count(), 2);
  out.face_class[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (Dart d : m.face_darts(f)) {
      const int g = m.left_face(d);
      if (out.face_class[g] == 2) {
        out.face_class[g] = out.face_class[f] ^ 1;
        stack.push_back(g);
      } else if (out.face_class[g] == out.face_class[f]) {
        // cannot happen on the sphere with all degrees even
        throw MapError(MapError::Kind::OddVertexDegree, "faces are not 2-colourable");
      }
    }
  }
  return out;
}

namespace {

// Start-dart invariant; the reversed orientation sees left and right swapped.
using StartKey = std::array<int, 3>;

StartKey start_key(const PlanarMap& m, Dart d, bool reversed) {
  const int right = m.face_size(m.face_of(d));
  const int left = m.face_size(m.left_face(d));
  return reversed ? StartKey{m.degree(m.vertex_of(d)), left, right}
                  : StartKey{m.degree(m.vertex_of(d)), right, left};
}

// Breadth-first dart labelling from `start`, following twin then rotation
// (vertex_next, or vertex_prev when reversed). Emits (label twin, label rot)
// per dart in label order. When `best` is given, generation stops as soon as
// the prefix exceeds it; the return value is the comparison result
// (-1 smaller, 0 equal, 1 larger/aborted).
class CodeBuilder {
 public:
  explicit CodeBuilder(const PlanarMap& m) : m_(m), label_(m.dart_count(), -1) {}

  int run(Dart start, bool reversed, const std::vector<std::uint16_t>* best) {
    const int n = m_.dart_count();
    std::fill(label_.begin(), label_.end(), -1);
    order_.clear();
    code_.clear();
    order_.push_back(start);
    label_[start] = 0;
    int cmp = best ? 0 : -1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Dart d = order_[i];
      const Dart t = m_.twin(d);
      const Dart r = reversed ? m_.vertex_prev(d) : m_.vertex_next(d);
      for (Dart x : {t, r}) {
        if (label_[x] < 0) {
          label_[x] = static_cast<int>(order_.size());
          order_.push_back(x);
        }
        const auto value = static_cast<std::uint16_t>(label_[x]);
        if (cmp == 0) {
          const auto b = (*best)[code_.size()];
          if (value > b) return 1;
          if (value < b) cmp = -1;
        }
        code_.push_back(value);
      }
    }
    (void)n;
    return cmp;
  }

  const std::vector<std::uint16_t>& code() const { return code_; }
  const std::vector<Dart>& order() const { return order_; }

 private:
  const PlanarMap& m_;
  std::vector<int> label_;
  std::vector<Dart> order_;
  std::vector<std::uint16_t> code_;
};

struct StartSet {
  StartKey key;
  std::vector<std::pair<Dart, bool>> starts;
};

StartSet minimal_starts(const PlanarMap& m, bool include_mirror) {
  StartSet s;
  s.key = {std::numeric_limits<int>::max(), 0, 0};
  for (int o = 0; o < (include_mirror ? 2 : 1); ++o) {
    for (Dart d = 0; d < m.dart_count(); ++d) {
      const auto k = start_key(m, d, o == 1);
      if (k < s.key) {
        s.key = k;
        s.starts.clear();
      }
      if (k == s.key) s.starts.emplace_back(d, o == 1);
    }
  }
  return s;
}

CanonicalCode encode(int dart_count, const std::vector<std::uint16_t>& labels) {
  CanonicalCode c;
  c.bytes.reserve(2 * (labels.size() + 1));
  auto put = [&c](std::uint16_t v) {
    c.bytes.push_back(static_cast<char>(v >> 8));
    c.bytes.push_back(static_cast<char>(v & 0xff));
  };
  put(static_cast<std::uint16_t>(dart_count));
  for (auto v : labels) put(v);
  return c;
}

}  // namespace

CanonicalCode canonical_code(const PlanarMap& m, bool include_mirror) {
  const auto starts = minimal_starts(m, include_mirror);
  CodeBuilder builder(m);
  std::vector<std::uint16_t> best;
  bool have = false;
  for (auto [d, reversed] : starts.starts) {
    const int cmp = builder.run(d, reversed, have ? &best : nullptr);
    if (!have || cmp < 0) {
      best = builder.code();
      have = true;
    }
  }
  return encode(m.dart_count(), best);
}

bool is_chiral(const PlanarMap& m) { return canonical_code(m, false) != canonical_code(mirror(m), false); }

std::vector<Automorphism> automorphisms(const PlanarMap& m) {
  const int n = m.dart_count();
  const Dart root = 0;
  const auto root_key = start_key(m, root, false);
  CodeBuilder base(m);
  base.run(root, false, nullptr);
  const auto reference = base.code();
  const auto root_order = base.order();

  std::vector<Automorphism> out;
  CodeBuilder builder(m);
  for (int o = 0; o < 2; ++o) {
    for (Dart d = 0; d < n; ++d) {
      if (start_key(m, d, o == 1) != root_key) continue;
      if (builder.run(d, o == 1, &reference) != 0) continue;
      Automorphism a;
      a.image.resize(n);
      a.preserves_orientation = (o == 0);
      const auto& order = builder.order();
      for (int i = 0; i < n; ++i) a.image[root_order[i]] = order[i];
      out.push_back(std::move(a));
    }
  }
  // identity first: root maps to itself with orientation preserved
  auto it = std::find_if(out.begin(), out.end(),
                         [root](const Automorphism& a) { return a.preserves_orientation && a.image[root] == root; });
  if (it != out.end()) std::iter_swap(out.begin(), it);
  return out;
}

PlanarMap relabel(const PlanarMap& m, std::span<const Dart> perm) {
  const int n = m.dart_count();
  std::vector<Dart> twin(n), rot(n);
  for (Dart d = 0; d < n; ++d) {
    twin[perm[d]] = perm[m.twin(d)];
    rot[perm[d]] = perm[m.vertex_next(d)];
  }
  return PlanarMap::build(std::move(twin), std::move(rot));
}

PlanarMap map_from_code(const CanonicalCode& code) {
  const auto& b = code.bytes;
  auto get = [&b](std::size_t i) -> int {
    return (static_cast<unsigned char>(b[2 * i]) << 8) | static_cast<unsigned char>(b[2 * i + 1]);
  };
  if (b.size() < 2 || b.size() % 2 != 0) throw MapError(MapError::Kind::BadInput, "malformed canonical code");
  const int n = get(0);
  if (b.size() != 2 * (1 + 2 * static_cast<std::size_t>(n)))
    throw MapError(MapError::Kind::BadInput, "canonical code length mismatch");
  std::vector<Dart> twin(n), rot(n);
  for (int i = 0; i < n; ++i) {
    twin[i] = get(1 + 2 * i);
    rot[i] = get(2 + 2 * i);
  }
  return PlanarMap::build(std::move(twin), std::move(rot));
}

}  // namespace sixreg
