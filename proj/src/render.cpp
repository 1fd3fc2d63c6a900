#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "sixreg/io.hpp"

namespace sixreg {

namespace {

using Vec = std::array<double, 3>;

Vec add(Vec a, Vec b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec scale(Vec a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot(Vec a, Vec b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec normalized(Vec a) {
  const double l = std::sqrt(dot(a, a));
  return l < 1e-12 ? Vec{0, 0, 1} : scale(a, 1 / l);
}

// Spring layout with all-pairs repulsion, kept on the unit sphere.
std::vector<Vec> sphere_layout(const PlanarMap& m) {
  const int n = m.vertex_count();
  std::vector<Vec> p(n);
  const double golden = M_PI * (3 - std::sqrt(5.0));
  for (int v = 0; v < n; ++v) {
    const double z = n == 1 ? 0 : 1 - 2.0 * (v + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    p[v] = {r * std::cos(golden * v), r * std::sin(golden * v), z};
  }
  for (int it = 0; it < 400; ++it) {
    std::vector<Vec> f(n, Vec{0, 0, 0});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Vec d = add(p[a], scale(p[b], -1));
        const double l2 = std::max(dot(d, d), 1e-4);
        d = scale(d, 0.02 / l2);
        f[a] = add(f[a], d);
        f[b] = add(f[b], scale(d, -1));
      }
    for (Dart d = 0; d < m.dart_count(); ++d) {
      const int a = m.vertex_of(d), b = m.head(d);
      if (a != b) f[a] = add(f[a], scale(add(p[b], scale(p[a], -1)), 0.05));
    }
    for (int v = 0; v < n; ++v) p[v] = normalized(add(p[v], f[v]));
  }
  return p;
}

}  // namespace

std::string render_svg(const PlanarMap& m, const std::string& title) {
  const int n = m.vertex_count();
  auto p = sphere_layout(m);

  int outer = 0;
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_size(f) > m.face_size(outer)) outer = f;
  Vec pole{0, 0, 0};
  for (Dart d : m.face_darts(outer)) pole = add(pole, p[m.vertex_of(d)]);
  pole = normalized(pole);
  if (n <= 2) pole = normalized(add(pole, Vec{0.3, 0.5, 0.8}));

  // orthonormal frame with the pole as third axis
  Vec e1 = std::abs(pole[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  e1 = normalized(add(e1, scale(pole, -dot(e1, pole))));
  const Vec e2{pole[1] * e1[2] - pole[2] * e1[1], pole[2] * e1[0] - pole[0] * e1[2], pole[0] * e1[1] - pole[1] * e1[0]};
  std::vector<std::array<double, 2>> xy(n);
  for (int v = 0; v < n; ++v) {
    const double z = std::min(dot(p[v], pole), 0.95);
    xy[v] = {dot(p[v], e1) / (1 - z), dot(p[v], e2) / (1 - z)};
  }
  double lo = 1e300, hi = -1e300;
  for (const auto& q : xy)
    for (double c : q) lo = std::min(lo, c), hi = std::max(hi, c);
  const double size = 600, margin = 60;
  const double s = hi - lo < 1e-9 ? 1 : (size - 2 * margin) / (hi - lo);
  auto X = [&](int v) { return margin + (xy[v][0] - lo) * s; };
  auto Y = [&](int v) { return margin + (xy[v][1] - lo) * s; };

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  if (!title.empty()) out << "<title>" << title << "</title>\n";
  out << "<g stroke=\"black\" fill=\"none\" stroke-width=\"1.5\">\n";

  std::map<std::pair<int, int>, int> seen, total;
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (d < m.twin(d)) ++total[std::minmax(m.vertex_of(d), m.head(d))];
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d > m.twin(d)) continue;
    const int a = m.vertex_of(d), b = m.head(d);
    const auto key = std::minmax(a, b);
    const int i = seen[key]++, k = total[key];
    if (a == b) {
      const double r = 14 + 8 * i;
      out << "<circle cx=\"" << X(a) + r << "\" cy=\"" << Y(a) << "\" r=\"" << r << "\"/>\n";
      continue;
    }
    const int u = key.first, w = key.second;
    const double mx = (X(u) + X(w)) / 2, my = (Y(u) + Y(w)) / 2;
    const double dx = X(w) - X(u), dy = Y(w) - Y(u);
    const double len = std::max(std::hypot(dx, dy), 1e-9);
    const double off = (i - (k - 1) / 2.0) * std::min(40.0, 0.35 * len);
    out << "<path d=\"M" << X(u) << "," << Y(u) << " Q" << mx - dy / len * off << "," << my + dx / len * off << " "
        << X(w) << "," << Y(w) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
  for (int v = 0; v < n; ++v)
    out << "<circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"5\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace sixreg
