#include "sixreg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sixreg/circuits.hpp"
#include "sixreg/eisenstein.hpp"
#include "sixreg/enumerator.hpp"
#include "sixreg/goldberg_coxeter.hpp"
#include "sixreg/io.hpp"
#include "sixreg/symmetry.hpp"

namespace sixreg {

namespace {

struct Checker {
  SuiteResult& r;
  void operator()(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok && r.failures.size() < 50) r.failures.push_back(what);
  }
};

std::string id_of(const EnumeratedSphere& s) { return "n=" + std::to_string(s.n) + " p1=" + std::to_string(s.p1) + " " + s.code.hex(); }

std::set<CanonicalCode> codes_of(const std::vector<PlanarMap>& ms, bool mq = false) {
  std::set<CanonicalCode> out;
  for (const auto& m : ms) out.insert(canonical_code(m, mq));
  return out;
}

SuiteResult census(const std::vector<EnumeratedSphere>& corpus, int max_n, int threads) {
  SuiteResult r;
  r.name = "census";
  Checker check{r};
  for (const auto& s : corpus) {
    const auto p = s.map.p_vector();
    check(s.map.is_sphere123(), id_of(s) + " is not a ({1,2,3},6)-sphere");
    check(2 * p[1] + p[2] == 6, id_of(s) + " violates 2p1+p2=6");
    check(2 * s.n == 4 + p[3] - p[1], id_of(s) + " violates n=2+(p3-p1)/2");
    check(canonical_code(from_dartlist(to_dartlist(s.map)), true) == s.code, id_of(s) + " dart list round trip");
  }
  EnumerationRequest req;
  req.max_n = max_n;
  req.threads = 1;
  const auto serial = enumerate(req);
  bool same = serial.size() == corpus.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i) same = serial[i].code == corpus[i].code;
  check(same, "census differs between 1 and " + std::to_string(threads) + " threads");

  std::map<int, int> n3;
  for (const auto& s : corpus)
    if (s.p1 == 3) ++n3[s.n];
  for (int n = 1; n <= max_n; ++n) {
    int expect = 0;
    for (int k = 0; k * k <= n; ++k)
      for (int l = 0; l <= k; ++l)
        if (k * k + k * l + l * l == n) ++expect;
    check(n3[n] == expect, "N3(" + std::to_string(n) + ")=" + std::to_string(n3[n]) + " expected " + std::to_string(expect));
  }
  std::ostringstream table;
  std::map<std::pair<int, int>, int> count;
  for (const auto& s : corpus) ++count[{s.n, s.p1}];
  for (int n = 1; n <= max_n; ++n) {
    table.str("");
    table << "n=" << n << " (N0,N1,N2,N3)=(" << count[{n, 0}] << "," << count[{n, 1}] << "," << count[{n, 2}] << ","
          << count[{n, 3}] << ")";
    r.notes.push_back(table.str());
  }
  return r;
}

SuiteResult oracle(int max_n) {
  SuiteResult r;
  r.name = "oracle";
  Checker check{r};
  const int top = std::min(max_n, 6);
  EnumerationRequest req;
  req.max_n = top;
  const auto corpus = enumerate(req);
  for (int n = 1; n <= top; ++n)
    for (int p1 = 0; p1 <= 3; ++p1) {
      std::set<CanonicalCode> mine;
      for (const auto& s : corpus)
        if (s.n == n && s.p1 == p1) mine.insert(s.code);
      check(codes_of(brute_force_oracle(n, p1), true) == mine,
            "oracle and pipeline differ at n=" + std::to_string(n) + " p1=" + std::to_string(p1));
    }
  return r;
}

SuiteResult symmetry(const std::vector<EnumeratedSphere>& corpus) {
  SuiteResult r;
  r.name = "symmetry";
  Checker check{r};
  const auto& names = sphere_group_names();
  for (const auto& s : corpus) {
    const auto group = automorphisms(s.map);
    std::set<std::vector<Dart>> elements;
    bool reversing = false;
    for (const auto& a : group) {
      elements.insert(a.image);
      reversing |= !a.preserves_orientation;
    }
    bool closed = true;
    for (const auto& a : group) {
      for (const auto& b : group) {
        std::vector<Dart> ab(a.image.size());
        for (std::size_t d = 0; d < ab.size(); ++d) ab[d] = a.image[b.image[d]];
        if (!elements.count(ab)) closed = false;
      }
      if (!closed) break;
    }
    check(closed, id_of(s) + " automorphisms not closed under composition");
    check(reversing == !is_chiral(s.map), id_of(s) + " chirality disagrees with the group");
    PointGroup pg;
    try {
      pg = classify(s.map, group);
    } catch (const SymmetryError& e) {
      check(false, id_of(s) + " " + e.what());
      continue;
    }
    check(pg.order == static_cast<int>(group.size()), id_of(s) + " group order");
    if (s.p1 == 0)
      check(std::find(names.begin(), names.end(), pg.name) != names.end(), id_of(s) + " unexpected group " + pg.name);
  }
  return r;
}

SuiteResult gc_laws(int norm_bound) {
  SuiteResult r;
  r.name = "gc";
  Checker check{r};
  for (auto kind : {NamedKind::SixK2, NamedKind::Trifolium, NamedKind::K2Tetrahedron}) {
    const NamedGraphId id{kind, 0};
    const PlanarMap m = named_graph(id);
    const auto seed = id.to_string();
    check(codes_of(gc(m, 1, 0).members) == codes_of({m}), seed + " gc(1,0) is not the identity");
    for (int k = 0; k * k <= norm_bound; ++k)
      for (int l = 0; l <= k; ++l) {
        const EisensteinInt z{k, l};
        if (norm(z) == 0 || norm(z) > norm_bound) continue;
        const auto g = gc(m, k, l);
        const auto param = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
        for (const auto& x : g.members)
          check(x.vertex_count() == m.vertex_count() * norm(z), seed + param + " vertex count");
        const auto rot = mul_j_power(z, 2);
        check(codes_of(gc(m, static_cast<int>(rot.k), static_cast<int>(rot.l)).members) == codes_of(g.members),
              seed + param + " not invariant under z -> z j^2");
      }
    const auto tripled = codes_of({oriented_tripling(m, 0), oriented_tripling(m, 1)});
    check(codes_of(gc(m, 1, 1).members) == tripled, seed + " gc(1,1) differs from the oriented triplings");

    // multiplicativity on class B parameters
    std::vector<EisensteinInt> bs;
    for (int k = 1; k <= 3; ++k)
      for (int l = 0; l <= k; ++l)
        if (lattice_class({k, l}) == LatticeClass::B && norm({k, l}) > 1 && norm({k, l}) <= 7) bs.push_back({k, l});
    for (const auto& a : bs)
      for (const auto& b : bs) {
        if (norm(a) * norm(b) > 49) continue;
        const auto ab = mul(a, b);
        const auto inner = gc(m, static_cast<int>(a.k), static_cast<int>(a.l)).members.front();
        const auto twice = gc(inner, static_cast<int>(b.k), static_cast<int>(b.l)).members;
        const auto once = gc(m, static_cast<int>(ab.k), static_cast<int>(ab.l)).members;
        check(codes_of(twice) == codes_of(once),
              seed + " gc(gc(" + a.to_string() + ")," + b.to_string() + ") != gc(" + ab.to_string() + ")");
      }
  }
  return r;
}

SuiteResult circuits(const std::vector<EnumeratedSphere>& corpus) {
  SuiteResult r;
  r.name = "circuits";
  Checker check{r};
  std::vector<CorpusGraph> graphs;
  int patches = 0, skipped = 0;
  for (const auto& s : corpus) {
    const auto& m = s.map;
    const auto p = m.p_vector();
    const auto z = zigzags(m);
    const auto c = central_circuits(m);
    check(z.vector.total_length() == 6 * s.n, id_of(s) + " zigzag lengths do not sum to 6n");
    check(c.vector.total_length() == 3 * s.n, id_of(s) + " central lengths do not sum to 3n");
    for (const auto* set : {&z, &c})
      for (const auto& row : set->matrix)
        for (const auto& e : row) check(e.type1 == 0, id_of(s) + " type I intersection under canonical orientation");

    auto self = [](const CircuitSet& set, std::size_t i) { return set.matrix[i][i].size() > 0; };
    auto any_self = [&](const CircuitSet& set) {
      for (std::size_t i = 0; i < set.circuits.size(); ++i)
        if (self(set, i)) return true;
      return false;
    };
    auto all_self = [&](const CircuitSet& set) {
      for (std::size_t i = 0; i < set.circuits.size(); ++i)
        if (!self(set, i)) return false;
      return true;
    };
    if (s.p1 >= 1) {
      check(any_self(z), id_of(s) + " has a 1-gon but no self-intersecting zigzag");
      check(any_self(c), id_of(s) + " has a 1-gon but no self-intersecting central circuit");
    }
    if (s.p1 == 3) {
      check(all_self(z) && all_self(c), id_of(s) + " ({1,3},6)-sphere with a simple circuit");
      std::multiset<int> zl;
      for (const auto& sym : z.vector.symbols) zl.insert(sym.length);
      bool ok = c.circuits.size() == z.circuits.size();
      for (const auto& sym : c.vector.symbols) {
        auto it = zl.find(2 * sym.length);
        if (it == zl.end()) {
          ok = false;
          break;
        }
        zl.erase(it);
      }
      check(ok, id_of(s) + " central circuits do not pair with zigzags of double length");
    }

    for (const auto* set : {&z, &c}) {
      const auto& mat = set->matrix;
      for (std::size_t i = 0; i < mat.size(); ++i) {
        int row = 0;
        for (std::size_t j = 0; j < mat.size(); ++j) row += (i == j ? 2 : 1) * mat[i][j].size();
        const int passes = set->kind == CircuitKind::Central ? 2 * set->circuits[i].length() : set->circuits[i].length();
        check(row == passes, id_of(s) + " intersection row does not count passages");
      }
      if (mat.size() >= 2) {
        auto flipped = set->circuits;
        flipped[0] = reversed(m, flipped[0]);
        const auto fm = intersection_matrix(m, flipped);
        bool ok = true;
        for (std::size_t j = 0; j < mat.size(); ++j) {
          if (j == 0) {
            ok &= fm[0][0].type1 == mat[0][0].type1 && fm[0][0].type2 == mat[0][0].type2;
          } else {
            ok &= fm[0][j].type1 == mat[0][j].type2 && fm[0][j].type2 == mat[0][j].type1;
          }
        }
        check(ok, id_of(s) + " reversing a circuit does not swap its crossing types");
      }
    }

    if (s.p1 == 0) {
      for (const auto* set : {&z, &c})
        for (std::size_t i = 0; i < set->circuits.size(); ++i)
          for (std::size_t j = i + 1; j < set->circuits.size(); ++j) {
            if (self(*set, i) || self(*set, j)) continue;
            const int k = set->matrix[i][j].size();
            check(k == 0 || k == 2 || k == 4 || k == 6, id_of(s) + " simple circuits meet " + std::to_string(k) + " times");
          }
      for (std::size_t i = 0; i < c.circuits.size(); ++i) {
        if (self(c, i)) continue;
        for (int side = 0; side < 2; ++side) {
          const auto rep = patch_euler_check(m, interior_faces(m, c.circuits[i], side));
          ++patches;
          check(rep.holds && rep.t_ob == 0 && rep.t_ac == 0 && rep.p2_count == 3,
                id_of(s) + " simple central circuit does not enclose three 2-gons");
        }
        for (std::size_t j = i + 1; j < c.circuits.size(); ++j) {
          if (self(c, j) || c.matrix[i][j].size() == 0) continue;
          for (const auto& region : regions_between(m, c.circuits[i], c.circuits[j])) {
            try {
              const auto rep = patch_euler_check(m, region);
              ++patches;
              check(rep.holds, id_of(s) + " local Euler formula fails on a patch");
            } catch (const IrregularPatch&) {
              ++skipped;
            }
          }
        }
      }
    }

    const auto tz = tightness(m, z), tc = tightness(m, c);
    for (const auto* t : {&tz, &tc}) {
      check(t->s_value == p[1] + 2 * p[2], id_of(s) + " s value");
      if (t->status == Tightness::Tight) check(t->railroads.empty(), id_of(s) + " tight with a railroad");
      if (s.p1 == 3) check(t->status != Tightness::Tight, id_of(s) + " tight ({1,3},6)-sphere");
    }
    CorpusGraph g;
    g.n = s.n;
    g.p1 = s.p1;
    g.z_count = static_cast<int>(z.circuits.size());
    g.c_count = static_cast<int>(c.circuits.size());
    g.z = tz.status;
    g.c = tc.status;
    graphs.push_back(g);
    if (s.p1 == 3 && g.z != Tightness::Neither) check(g.z_count == 1 || g.z_count == 3, id_of(s) + " weakly tight z count");
    if (s.p1 == 3 && g.c != Tightness::Neither) check(g.c_count == 1 || g.c_count == 3, id_of(s) + " weakly tight c count");
  }
  const auto b = classify_corpus(graphs);
  check(b.violations.empty(), "tightness bound violated: " + (b.violations.empty() ? "" : b.violations.front()));
  std::ostringstream o;
  for (int p1 = 0; p1 <= 3; ++p1) {
    o.str("");
    o << "p1=" << p1 << " max tight z/c " << b.max_tight_z[p1] << "/" << b.max_tight_c[p1] << ", weakly tight z/c "
      << b.max_weak_z[p1] << "/" << b.max_weak_c[p1];
    r.notes.push_back(o.str());
  }
  r.notes.push_back("patches checked " + std::to_string(patches) + ", irregular skipped " + std::to_string(skipped));
  return r;
}

SuiteResult gc_vectors() {
  SuiteResult r;
  r.name = "gc-vectors";
  Checker check{r};
  EnumerationRequest req;
  req.max_n = 4;
  req.p1_filter = 0;
  for (const auto& s : enumerate(req)) {
    const auto z = zigzags(s.map).vector, c = central_circuits(s.map).vector;
    const auto predicted = gc_line_vectors(z, c, 1);
    const auto g4 = gc(s.map, 4, 0).members.front();
    check(zigzags(g4).vector == predicted.z && central_circuits(g4).vector == predicted.c,
          id_of(s) + " GC_{4,0} vectors differ from the u=1 transform");
    check(predicted.z.total_length() == 6 * 16 * s.n && predicted.c.total_length() == 3 * 16 * s.n,
          id_of(s) + " transformed vectors break the sum rules");
    const auto g5 = gc(s.map, 5, 0).members.front();
    r.notes.push_back(id_of(s) + ": u=1 transform sums to n=" + std::to_string(predicted.c.total_length() / 3) +
                      "; GC_{4,0} has n=" + std::to_string(g4.vertex_count()) + ", GC_{5,0} has n=" +
                      std::to_string(g5.vertex_count()));
  }
  r.notes.push_back(
      "discrepancy: the transform stated for GC_{1+4u,0} matches GC_{1+3u,0}; for u=1 it predicts 16n vertices while "
      "GC_{5,0} has 25n");
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"census", "oracle", "symmetry", "gc", "circuits", "gc-vectors"};
  return names;
}

std::vector<SuiteResult> run_verify(const std::string& suite, int max_n, int threads) {
  const auto& names = verify_suites();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw BadParameter("unknown suite '" + suite + "'");
  auto wanted = [&](const char* s) { return suite == "all" || suite == s; };

  std::vector<EnumeratedSphere> corpus;
  if (wanted("census") || wanted("symmetry") || wanted("circuits")) {
    EnumerationRequest req;
    req.max_n = max_n;
    req.threads = threads;
    corpus = enumerate(req);
  }
  std::vector<SuiteResult> out;
  if (wanted("census")) out.push_back(census(corpus, max_n, threads));
  if (wanted("oracle")) out.push_back(oracle(max_n));
  if (wanted("symmetry")) out.push_back(symmetry(corpus));
  if (wanted("gc")) out.push_back(gc_laws(13));
  if (wanted("circuits")) out.push_back(circuits(corpus));
  if (wanted("gc-vectors")) out.push_back(gc_vectors());
  return out;
}

}  // namespace sixreg
