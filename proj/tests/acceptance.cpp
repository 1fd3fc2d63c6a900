// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sixreg/circuits.hpp"
#include "sixreg/eisenstein.hpp"
#include "sixreg/enumerator.hpp"
#include "sixreg/goldberg_coxeter.hpp"
#include "sixreg/named_graphs.hpp"
#include "sixreg/symmetry.hpp"

using namespace sixreg;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (details.size() < 20) details.push_back(what);
    }
  }
};

// reference census, n = 1..12
constexpr std::array<std::array<int, 4>, 12> kTable = {{{0, 0, 1, 1},
                                                      {1, 0, 1, 0},
                                                      {1, 1, 3, 1},
                                                      {3, 1, 5, 1},
                                                      {2, 3, 5, 0},
                                                      {7, 2, 8, 0},
                                                      {5, 6, 6, 1},
                                                      {12, 5, 12, 0},
                                                      {10, 8, 8, 1},
                                                      {19, 6, 12, 0},
                                                      {16, 14, 9, 0},
                                                      {29, 11, 17, 1}}};

// reference N3 column, n = 1..53
constexpr std::array<int, 53> kN3 = {1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1,
                                     1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 1, 0};

std::vector<EnumeratedSphere> corpus(int max_n) {
  EnumerationRequest req;
  req.max_n = max_n;
  req.threads = 2;
  return enumerate(req);
}

std::set<CanonicalCode> codes(const std::vector<PlanarMap>& ms) {
  std::set<CanonicalCode> out;
  for (const auto& m : ms) out.insert(canonical_code(m, false));
  return out;
}

std::string param(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

Outcome table_reproduction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::map<int, std::array<int, 4>> got;
  for (const auto& s : corpus(12)) ++got[s.n][s.p1];
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (int n = 1; n <= 12; ++n) {
    const auto& want = kTable[n - 1];
    for (int i = 0; i < 4; ++i)
      o.expect(got[n][i] == want[i], "n=" + std::to_string(n) + " N" + std::to_string(i) + " = " +
                                         std::to_string(got[n][i]) + ", table " + std::to_string(want[i]));
  }
  o.expect(secs < 300, "enumeration took " + std::to_string(secs) + " s");
  return o;
}

Outcome n3_law() {
  Outcome o;
  for (int n = 1; n <= 53; ++n) {
    int count = 0;
    for (int k = 0; k * k <= n; ++k)
      for (int l = 0; l <= k; ++l) count += k * k + k * l + l * l == n;
    o.expect(count == kN3[n - 1], "N3(" + std::to_string(n) + ") = " + std::to_string(count));
  }
  // the census itself follows the law
  std::map<int, int> seen;
  for (const auto& s : corpus(20))
    if (s.p1 == 3) ++seen[s.n];
  for (int n = 1; n <= 20; ++n) o.expect(seen[n] == kN3[n - 1], "census N3(" + std::to_string(n) + ")");
  return o;
}

Outcome gc_laws() {
  Outcome o;
  const int bound = 13;
  for (auto kind : {NamedKind::SixK2, NamedKind::Trifolium, NamedKind::K2Tetrahedron}) {
    const NamedGraphId id{kind, 0};
    const auto m = named_graph(id);
    const auto seed = id.to_string();
    o.expect(codes(gc(m, 1, 0).members) == codes({m}), seed + " gc(1,0)");
    for (int k = 0; k * k <= bound; ++k)
      for (int l = 0; l * l <= bound; ++l) {
        const EisensteinInt z{k, l};
        if (norm(z) == 0 || norm(z) > bound) continue;
        const auto g = gc(m, k, l);
        for (const auto& x : g.members)
          o.expect(x.vertex_count() == m.vertex_count() * norm(z), seed + param(k, l) + " vertex count");
        const auto r = mul_j_power(z, 2);
        o.expect(codes(gc(m, int(r.k), int(r.l)).members) == codes(g.members), seed + param(k, l) + " j^2");
      }
    o.expect(codes(gc(m, 1, 1).members) == codes({oriented_tripling(m, 0), oriented_tripling(m, 1)}),
             seed + " gc(1,1) vs tripling");

    std::vector<EisensteinInt> bs;
    for (int k = 0; k * k <= bound; ++k)
      for (int l = 0; l * l <= bound; ++l)
        if (norm({k, l}) > 1 && norm({k, l}) <= bound && lattice_class({k, l}) == LatticeClass::B)
          bs.push_back({k, l});
    for (const auto& a : bs)
      for (const auto& b : bs) {
        if (norm(a) * norm(b) * m.vertex_count() > 400) continue;
        const auto ab = mul(a, b);
        const auto inner = gc(m, int(a.k), int(a.l)).members.front();
        o.expect(codes(gc(inner, int(b.k), int(b.l)).members) == codes(gc(m, int(ab.k), int(ab.l)).members),
                 seed + " gc(gc(" + a.to_string() + ")," + b.to_string() + ")");
      }
  }
  return o;
}

Outcome figure_constructions() {
  Outcome o;
  const auto six = named_graph({NamedKind::SixK2, 0});
  auto check = [&](const PlanarMap& m, int n, const std::string& group, const std::string& what) {
    const auto g = point_group(m).name;
    o.expect(m.vertex_count() == n && g == group,
             what + ": n=" + std::to_string(m.vertex_count()) + " " + g + ", want n=" + std::to_string(n) + " " + group);
  };
  const std::vector<std::tuple<int, int, int, std::string>> rows = {
      {2, 0, 8, "D6h"}, {2, 1, 14, "D6"}, {3, 1, 26, "D6"}, {4, 0, 32, "D6h"}, {3, 2, 38, "D6"}};
  for (const auto& [k, l, n, group] : rows)
    for (const auto& m : gc(six, k, l).members) check(m, n, group, "gc(6xK2," + param(k, l) + ")");
  for (int c = 0; c < 2; ++c) {
    check(oriented_tripling(six, c), 6, "D3d", "tripling(6xK2)");
    check(oriented_tripling(named_graph({NamedKind::K2Tetrahedron, 0}), c), 12, "Th", "tripling(K2xTetrahedron)");
  }
  return o;
}

Outcome trifolium_family() {
  Outcome o;
  const auto t = named_graph({NamedKind::Trifolium, 0});
  for (int k = 0; k * k <= 20; ++k)
    for (int l = 0; l <= k; ++l) {
      const int nz = k * k + k * l + l * l;
      if (nz == 0 || nz > 20) continue;
      const std::string want = k == l ? "C3h" : l == 0 ? "C3v" : "C3";
      for (const auto& m : gc(t, k, l).members) {
        const auto g = point_group(m).name;
        o.expect(g == want, "gc(Trifolium," + param(k, l) + ") is " + g + ", want " + want);
      }
    }
  o.expect(point_group(gc(t, 3, 0).members.front()).name == "C3v", "n=9 anchor");
  return o;
}

Outcome type_two(const std::vector<EnumeratedSphere>& all) {
  Outcome o;
  for (const auto& s : all) {
    if (s.n > 10) continue;
    for (const auto& set : {zigzags(s.map), central_circuits(s.map)})
      for (const auto& row : set.matrix)
        for (const auto& e : row) o.expect(e.type1 == 0, "type I intersection at n=" + std::to_string(s.n) + " " + s.code.hex());
  }
  return o;
}

Outcome sum_rules(const std::vector<EnumeratedSphere>& all) {
  Outcome o;
  for (const auto& s : all) {
    o.expect(zigzags(s.map).vector.total_length() == 6 * s.n, "z sum at " + s.code.hex());
    o.expect(central_circuits(s.map).vector.total_length() == 3 * s.n, "c sum at " + s.code.hex());
  }
  return o;
}

struct Caption {
  int n;
  int p1;
  std::string group;
  CircuitKind kind;
  std::string status;  // empty: not stated
  std::string vector;
};

Outcome captions(const std::vector<EnumeratedSphere>& all) {
  Outcome o;
  const auto Z = CircuitKind::Zigzag, C = CircuitKind::Central;
  const std::vector<Caption> list = {
      {2, 0, "D6h", Z, "", "6^2"},
      {2, 0, "D6h", C, "", "2^3"},
      {4, 0, "Td", Z, "", "6^4"},
      {4, 0, "Td", C, "", "3^4"},
      {12, 0, "Th", Z, "", "12^6"},
      {12, 0, "Th", C, "", "6^6"},
      {14, 0, "D6", Z, "", "14^6"},
      {6, 0, "D3", Z, "", "8^3, 12"},
      {8, 0, "D2d", C, "", "4, 5^4"},
      {8, 0, "D6h", C, "", "4^3, 6^2"},
      // smallest weakly tight / tight spheres with many circuits
      {11, 0, "D3h", C, "tight", "5^3, 6_{0,1}"},
      {14, 0, "D6", Z, "tight", "14^6"},
      {4, 1, "Cs", C, "tight", "3, 4_{0,1}, 5_{0,1}"},
      {14, 1, "Cs", C, "weakly_tight", "5, 11_{0,1}, 12_{0,3}, 7_{0,1}^2"},
      {13, 1, "C1", Z, "tight", "16_{0,1}, 20_{0,1}, 43_{0,9}"},
      {11, 1, "Cs", Z, "weakly_tight", "10, 12, 14_{0,1}^2, 16_{0,1}"},
      {10, 2, "C2", C, "tight", "8_{0,2}^2, 14_{0,6}"},
      {7, 2, "C2", Z, "tight", "14_{0,1}, 14_{0,2}^2"},
      {6, 2, "C2v", Z, "weakly_tight", "6^2, 12_{0,2}^2"},
  };
  for (const auto& cap : list) {
    const auto want = CircuitVector::parse(cap.vector);
    bool found = false;
    std::string near;
    for (const auto& s : all) {
      if (found || s.n != cap.n || s.p1 != cap.p1 || point_group(s.map).name != cap.group) continue;
      const auto set = cap.kind == CircuitKind::Zigzag ? zigzags(s.map) : central_circuits(s.map);
      const bool status_ok = cap.status.empty() || to_string(tightness(s.map, set).status) == cap.status;
      if (status_ok) near += " [" + set.vector.to_string() + "]";
      found = status_ok && set.vector == want;
    }
    o.expect(found, "no n=" + std::to_string(cap.n) + " p1=" + std::to_string(cap.p1) + " " + cap.group +
                        (cap.kind == CircuitKind::Zigzag ? " z=" : " c=") + cap.vector +
                        (cap.status.empty() ? "" : " " + cap.status) + "; corpus has" + near);
  }
  return o;
}

Outcome tightness_bounds(const std::vector<EnumeratedSphere>& all) {
  Outcome o;
  std::vector<CorpusGraph> graphs;
  for (const auto& s : all)
    if (s.n <= 12) graphs.push_back(analyse(s.map));
  const auto b = classify_corpus(graphs);
  for (const auto& v : b.violations) o.expect(false, v);
  for (const auto& g : graphs) {
    if (g.p1 != 3) continue;
    o.expect(g.z != Tightness::Tight && g.c != Tightness::Tight, "tight ({1,3},6)-sphere at n=" + std::to_string(g.n));
    if (g.z == Tightness::WeaklyTight) o.expect(g.z_count == 1 || g.z_count == 3, "weakly tight z count");
    if (g.c == Tightness::WeaklyTight) o.expect(g.c_count == 1 || g.c_count == 3, "weakly tight c count");
  }
  return o;
}

Outcome simple_classification(const std::vector<EnumeratedSphere>& all) {
  Outcome o;
  std::multiset<std::pair<int, std::string>> zs, cs;
  for (const auto& s : all) {
    if (s.p1 != 0) continue;
    const auto z = zigzags(s.map), c = central_circuits(s.map);
    if (z.all_simple() && tightness(s.map, z).status != Tightness::Neither) zs.insert({s.n, point_group(s.map).name});
    if (c.all_simple() && tightness(s.map, c).status != Tightness::Neither) cs.insert({s.n, point_group(s.map).name});
  }
  const std::multiset<std::pair<int, std::string>> want_c = {{2, "D6h"}, {4, "Td"}, {8, "D6h"}, {8, "D2d"}, {12, "Th"}};
  const std::multiset<std::pair<int, std::string>> want_z = {{2, "D6h"}, {4, "Td"}, {6, "D3"}, {12, "Th"}, {14, "D6"}};
  auto show = [](const auto& set) {
    std::string out;
    for (const auto& [n, g] : set) out += " " + std::to_string(n) + g;
    return out;
  };
  o.expect(cs == want_c, "c-graphs:" + show(cs));
  o.expect(zs == want_z, "z-graphs:" + show(zs));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int p1 = 0; p1 <= 3; ++p1) {
    EnumerationRequest req;
    req.max_n = 6;
    req.p1_filter = p1;
    std::map<int, std::set<CanonicalCode>> pipeline;
    for (const auto& s : enumerate(req)) pipeline[s.n].insert(s.code);
    for (int n = 1; n <= 6; ++n) {
      std::set<CanonicalCode> oracle;
      for (const auto& m : brute_force_oracle(n, p1, true)) oracle.insert(canonical_code(m, true));
      o.expect(oracle == pipeline[n], "n=" + std::to_string(n) + " p1=" + std::to_string(p1) + ": oracle " +
                                          std::to_string(oracle.size()) + ", pipeline " +
                                          std::to_string(pipeline[n].size()));
    }
  }
  return o;
}

Outcome minimal_representatives(const std::vector<EnumeratedSphere>& all) {
  Outcome o;
  std::vector<std::pair<int, std::string>> rows;
  for (const auto& s : all)
    if (s.p1 == 0 && s.n <= 12) rows.push_back({s.n, point_group(s.map).name});
  const auto census = group_census(rows);
  const std::map<std::string, int> want = {{"D6h", 2}, {"D3h", 3}, {"D2", 4},  {"D2d", 4}, {"Td", 4},  {"C2", 5},
                                           {"D2h", 6}, {"D3", 6},  {"D3d", 6}, {"C2v", 6}, {"C3v", 7}, {"C1", 8},
                                           {"S4", 8},  {"Cs", 9},  {"C3h", 9}, {"C2h", 10}, {"C3", 10}, {"Th", 12}};
  for (const auto& [g, n] : want) {
    auto it = census.find(g);
    o.expect(it != census.end() && it->second.min_n == n,
             g + " first at " + (it == census.end() ? std::string("none") : std::to_string(it->second.min_n)) +
                 ", want " + std::to_string(n));
  }
  return o;
}

Outcome gc_vector_transform() {
  Outcome o;
  EnumerationRequest req;
  req.max_n = 4;
  req.p1_filter = 0;
  for (const auto& s : enumerate(req)) {
    const auto z = zigzags(s.map).vector, c = central_circuits(s.map).vector;
    const auto t = gc_line_vectors(z, c, 1);
    o.expect(t.z.total_length() == 6 * 16 * s.n && t.c.total_length() == 3 * 16 * s.n, "sum rules at " + s.code.hex());
    const auto g = gc(s.map, 4, 0).members.front();
    o.expect(zigzags(g).vector == t.z && central_circuits(g).vector == t.c, "GC_{4,0} traces at " + s.code.hex());
  }
  return o;
}

}  // namespace

int main() {
  const auto all = corpus(14);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"census table n<=12", table_reproduction},
      {"({1,3},6) count law n<=53", n3_law},
      {"GC laws", gc_laws},
      {"figure constructions", figure_constructions},
      {"Trifolium family groups", trifolium_family},
      {"type II intersections n<=10", [&] { return type_two(all); }},
      {"circuit sum rules", [&] { return sum_rules(all); }},
      {"caption circuit vectors", [&] { return captions(all); }},
      {"tightness bounds n<=12", [&] { return tightness_bounds(all); }},
      {"weakly tight simple classification n<=14", [&] { return simple_classification(all); }},
      {"oracle equivalence n<=6", oracle_equivalence},
      {"minimal group representatives", [&] { return minimal_representatives(all); }},
      {"GC_{4,0} vector transform", gc_vector_transform},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
