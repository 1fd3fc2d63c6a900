#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "sixreg/circuits.hpp"
#include "sixreg/enumerator.hpp"
#include "sixreg/goldberg_coxeter.hpp"
#include "sixreg/io.hpp"
#include "sixreg/named_graphs.hpp"
#include "sixreg/symmetry.hpp"
#include "sixreg/verify.hpp"

using namespace sixreg;

namespace {

struct Options {
  int max_n = 8;
  std::optional<int> p1;
  std::string seed;
  std::string in;
  int k = 1;
  int l = 0;
  int face_class = 0;
  std::string out;
  std::string render;
  std::string format = "jsonl";
  int threads = 1;
  std::string mirror = "quotient";
  std::string suite = "all";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NamedGraphId seed_id(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"six-k2", "SixK2"},     {"6xk2", "SixK2"}, {"three-k3", "ThreeK3"}, {"trifolium", "Trifolium"},
      {"t1", "Trifolium"},     {"t2", "T2"},      {"k2-tetrahedron", "K2Tetrahedron"}};
  auto it = alias.find(name);
  return NamedGraphId::parse(it == alias.end() ? name : it->second);
}

struct Input {
  PlanarMap map;
  std::string provenance;
};

std::vector<Input> inputs(const Options& o) {
  if (!o.seed.empty() && !o.in.empty()) throw UsageError("give either --seed or --in");
  if (!o.seed.empty()) {
    const auto id = seed_id(o.seed);
    return {{named_graph(id), "named:" + id.to_string()}};
  }
  if (o.in.empty()) throw UsageError("a map is required: --seed NAME or --in FILE");
  std::ifstream f(o.in);
  if (!f) throw UsageError("cannot open " + o.in);
  std::vector<Input> out;
  int line = 0;
  for (auto& m : read_dartlists(f)) out.push_back({std::move(m), o.in + ":" + std::to_string(++line)});
  if (out.empty()) throw UsageError(o.in + " holds no maps");
  return out;
}

bool quotient(const Options& o) { return o.mirror == "quotient"; }

void write_maps(const Options& o, const std::vector<Input>& maps) {
  if (o.out.empty()) return;
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + o.out);
  if (o.format == "dartlist") {
    for (const auto& x : maps) f << to_dartlist(x.map) << "\n";
  } else if (o.format == "planarcode") {
    std::vector<PlanarMap> ms;
    for (const auto& x : maps) ms.push_back(x.map);
    f << to_planar_code(ms);
  } else {
    for (const auto& x : maps) f << to_json_line(make_record(x.map, x.provenance, quotient(o))) << "\n";
  }
}

void print_records(const Options& o, const std::vector<Input>& maps) {
  for (const auto& x : maps) std::cout << to_json_line(make_record(x.map, x.provenance, quotient(o))) << "\n";
  write_maps(o, maps);
  if (!o.render.empty() && !maps.empty()) {
    std::ofstream f(o.render);
    f << render_svg(maps.front().map, maps.front().provenance);
  }
}

int cmd_enumerate(const Options& o) {
  EnumerationRequest req;
  req.max_n = o.max_n;
  req.p1_filter = o.p1;
  req.dedup_mirror = quotient(o);
  req.threads = o.threads;
  const auto spheres = enumerate(req);

  std::map<std::pair<int, int>, std::vector<const EnumeratedSphere*>> cells;
  for (const auto& s : spheres) cells[{s.n, s.p1}].push_back(&s);
  std::cout << "n N0 N1 N2 N3\n";
  for (int n = 1; n <= o.max_n; ++n) {
    std::cout << n;
    for (int p1 = 0; p1 <= 3; ++p1) {
      auto it = cells.find({n, p1});
      const bool shown = !o.p1 || *o.p1 == p1;
      std::cout << ' ' << (shown ? std::to_string(it == cells.end() ? 0 : it->second.size()) : "-");
    }
    std::cout << "\n";
  }
  std::cout << "total " << spheres.size() << "\n";

  if (o.out.empty()) return 0;
  if (o.format != "jsonl") {
    std::vector<Input> maps;
    for (const auto& s : spheres) maps.push_back({s.map, s.provenance});
    write_maps(o, maps);
    return 0;
  }
  RecordStore store(o.out);
  int skipped = 0;
  for (int n = 1; n <= o.max_n; ++n)
    for (int p1 = 0; p1 <= 3; ++p1) {
      if (o.p1 && *o.p1 != p1) continue;
      if (store.has_cell(n, p1)) {
        ++skipped;
        continue;
      }
      std::vector<GraphRecord> records;
      auto it = cells.find({n, p1});
      if (it != cells.end())
        for (const auto* s : it->second) records.push_back(make_record(s->map, s->provenance, quotient(o)));
      store.append_cell(n, p1, records);
    }
  if (skipped) std::cerr << "resumed: " << skipped << " cells already stored\n";
  return 0;
}

int cmd_named(const Options& o) {
  std::vector<Input> maps;
  if (!o.seed.empty()) {
    maps = inputs(o);
  } else {
    for (const auto& id : named_graphs_up_to(o.max_n)) maps.push_back({named_graph(id), "named:" + id.to_string()});
  }
  print_records(o, maps);
  return 0;
}

int cmd_gc(const Options& o) {
  std::vector<Input> maps;
  for (const auto& x : inputs(o)) {
    const auto r = gc(x.map, o.k, o.l);
    const std::string tag = x.provenance + "+gc(" + std::to_string(o.k) + "," + std::to_string(o.l) + ")";
    for (std::size_t i = 0; i < r.members.size(); ++i)
      maps.push_back({r.members[i], tag + (r.members.size() > 1 ? "#" + std::to_string(i) : "")});
  }
  print_records(o, maps);
  return 0;
}

int cmd_tripling(const Options& o) {
  std::vector<Input> maps;
  for (const auto& x : inputs(o))
    maps.push_back({oriented_tripling(x.map, o.face_class), x.provenance + "+or" + std::to_string(o.face_class)});
  print_records(o, maps);
  return 0;
}

void print_matrix(const CircuitSet& set) {
  for (const auto& row : set.matrix) {
    std::cout << "   ";
    for (const auto& e : row) std::cout << ' ' << e.type1 << '/' << e.type2;
    std::cout << "\n";
  }
}

int cmd_circuits(const Options& o, bool matrix) {
  for (const auto& x : inputs(o)) {
    const auto z = zigzags(x.map);
    const auto c = central_circuits(x.map);
    std::cout << x.provenance << " n=" << x.map.vertex_count() << "\n";
    std::cout << "  z: " << z.vector.to_string() << (z.all_simple() ? " (simple)" : "") << "\n";
    if (matrix) print_matrix(z);
    std::cout << "  c: " << c.vector.to_string() << (c.all_simple() ? " (simple)" : "") << "\n";
    if (matrix) print_matrix(c);
  }
  return 0;
}

int cmd_symmetry(const Options& o) {
  for (const auto& x : inputs(o)) {
    const auto pg = point_group(x.map);
    std::cout << x.provenance << " n=" << x.map.vertex_count() << " group=" << pg.name << " order=" << pg.order
              << " rotations=" << pg.rotation_order << " reflections=" << pg.reflections
              << (pg.has_inversion ? " inversion" : "") << "\n";
  }
  return 0;
}

int cmd_tight(const Options& o) {
  for (const auto& x : inputs(o)) {
    std::cout << x.provenance << " n=" << x.map.vertex_count() << "\n";
    for (auto kind : {CircuitKind::Zigzag, CircuitKind::Central}) {
      const auto t = tightness(x.map, kind);
      std::cout << "  " << (kind == CircuitKind::Zigzag ? 'z' : 'c') << ": " << to_string(t.status)
                << " circuits=" << t.circuit_count << " s=" << t.s_value << " railroads=" << t.railroads.size() << "\n";
      for (const auto& r : t.railroads)
        std::cout << "    circuit " << r.circuit << " side " << r.side << " || circuit " << r.partner << " side "
                  << r.partner_side << " (" << r.faces.size() << " faces)\n";
    }
  }
  return 0;
}

int cmd_render(const Options& o) {
  if (o.out.empty()) throw UsageError("render needs --out FILE.svg");
  const auto maps = inputs(o);
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << render_svg(maps.front().map, maps.front().provenance);
  return 0;
}

int cmd_verify(const Options& o) {
  bool ok = true;
  for (const auto& r : run_verify(o.suite, o.max_n, o.threads)) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
    for (const auto& f : r.failures) std::cout << "  violation: " << f << "\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    ok &= r.ok();
  }
  return ok ? 0 : 2;
}

int f0(int v) {
  if (v % 2 == 0) return v / 2 + (v % 4 == 0 ? 1 : 2);
  const int r = v % 9;
  return v / 3 + (r == 2 || r == 4 || r == 6 ? 3 : 1);
}
int f1(int v) {
  if (v % 2) return (v - 1) / 2 + (v % 4 == 3 ? 1 : 2);
  return (v - 1) / 3 + 2;
}

int cmd_conjecture_scan(const Options& o) {
  EnumerationRequest req;
  req.max_n = o.max_n;
  req.threads = o.threads;
  const auto spheres = enumerate(req);
  const std::set<std::string> knotted_groups = {"C1", "C2", "C3", "D2", "D3"};
  const std::set<std::string> simple_groups = {"Td", "Th", "D6h", "D3d", "D2d", "D2h", "D3", "C2h", "C3v"};

  std::map<std::string, int> knotted;
  std::set<std::string> simple_seen;
  std::map<std::pair<int, int>, std::pair<int, std::string>> best;  // (p1, n) -> (count, example)
  std::vector<std::string> remarks;
  for (const auto& s : spheres) {
    const auto group = point_group(s.map).name;
    const auto z = zigzags(s.map);
    const auto c = central_circuits(s.map);
    const std::string where = "n=" + std::to_string(s.n) + " p1=" + std::to_string(s.p1) + " " + group;
    for (const auto* set : {&z, &c}) {
      if (set->circuits.size() != 1) continue;
      const std::string kind = set == &z ? "z" : "c";
      ++knotted[kind + "-knotted " + group];
      if (!knotted_groups.count(group) && !(s.p1 == 3 && s.n == 1))
        remarks.push_back("(i) " + kind + "-knotted sphere outside the listed groups: " + where);
    }
    if (s.p1 == 0 && c.all_simple()) {
      simple_seen.insert(group);
      if (!simple_groups.count(group)) remarks.push_back("(ii) only simple central circuits but group not listed: " + where);
    }
    if ((group == "D6h" || group == "Th" || group == "Td") && !(z.all_simple() && c.all_simple()))
      remarks.push_back("(iii) " + where + " has a self-intersecting circuit");
    if (s.p1 == 0 && (group == "Td" || group == "Th")) {
      const int unit = group == "Td" ? 4 : 12;
      int x = 1;
      while (unit * x * x < s.n) ++x;
      const int mult = group == "Td" ? 4 * x : 6 * x;
      const int cl = group == "Td" ? 3 * x : 6 * x;
      const bool fits = unit * x * x == s.n &&
                        c.vector == CircuitVector{std::vector<CircuitSymbol>(mult, CircuitSymbol{cl, 0, 0})} &&
                        z.vector == CircuitVector{std::vector<CircuitSymbol>(mult, CircuitSymbol{2 * cl, 0, 0})};
      if (!fits) remarks.push_back("(iv/v) " + where + " z=" + z.vector.to_string() + " c=" + c.vector.to_string());
    }
    auto& b = best[{s.p1, s.n}];
    const int cc = static_cast<int>(c.circuits.size());
    if (cc > b.first) b = {cc, group + " c=" + c.vector.to_string()};
  }

  std::cout << "knotted spheres by group:\n";
  for (const auto& [k, v] : knotted) std::cout << "  " << k << ": " << v << "\n";
  std::cout << "groups with only simple central circuits (p1=0):";
  for (const auto& g : simple_seen) std::cout << ' ' << g;
  std::cout << "\nmaximal number of central circuits f_i(v):\n";
  for (const auto& [key, b] : best) {
    const auto [p1, n] = key;
    std::optional<int> conj;
    if (p1 == 2) conj = n + 1;
    if (p1 == 1 && n >= 3) conj = f1(n);
    if (p1 == 0 && n >= 6) conj = f0(n);
    std::cout << "  p1=" << p1 << " v=" << n << " max=" << b.first;
    if (conj) std::cout << " conjectured=" << *conj << (*conj == b.first ? "" : " (differs)");
    std::cout << "  " << b.second << "\n";
  }
  std::cout << "remarks:\n";
  for (const auto& r : remarks) std::cout << "  " << r << "\n";
  if (remarks.empty()) std::cout << "  none\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and analyse 6-regular plane graphs with faces of size 1, 2 or 3"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--mirror", o.mirror, "identify mirror images (quotient) or not (chiral)")
        ->check(CLI::IsMember({"quotient", "chiral"}));
  };
  auto add_map = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "named graph, e.g. six-k2, trifolium, k2-tetrahedron, R(3), Ti(2)");
    c->add_option("--in", o.in, "file of dart lists, one map per line");
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output file");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"dartlist", "planarcode", "jsonl"}));
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "census of spheres with n <= max-n");
  enumerate_cmd->add_option("--max-n", o.max_n)->required()->check(CLI::Range(1, 40));
  enumerate_cmd->add_option("--p1", o.p1, "only this number of 1-gons")->check(CLI::Range(0, 3));
  add_common(enumerate_cmd);
  add_out(enumerate_cmd);

  auto* named_cmd = app.add_subcommand("named", "named graphs and series members");
  named_cmd->add_option("--max-n", o.max_n, "all named graphs up to this size");
  named_cmd->add_option("--seed", o.seed, "a single named graph");
  add_common(named_cmd);
  add_out(named_cmd);

  auto* gc_cmd = app.add_subcommand("gc", "Goldberg-Coxeter construction");
  add_map(gc_cmd);
  gc_cmd->add_option("--k", o.k)->required();
  gc_cmd->add_option("--l", o.l)->required();
  gc_cmd->add_option("--render", o.render, "also write an SVG of the first result");
  add_common(gc_cmd);
  add_out(gc_cmd);

  auto* trip_cmd = app.add_subcommand("tripling", "oriented tripling");
  add_map(trip_cmd);
  trip_cmd->add_option("--class", o.face_class, "face class 0 or 1")->check(CLI::Range(0, 1));
  trip_cmd->add_option("--render", o.render, "also write an SVG of the result");
  add_common(trip_cmd);
  add_out(trip_cmd);

  bool matrix = false;
  auto* circ_cmd = app.add_subcommand("circuits", "z- and c-vectors");
  add_map(circ_cmd);
  circ_cmd->add_flag("--matrix", matrix, "print intersection matrices (type I/type II)");

  auto* sym_cmd = app.add_subcommand("symmetry", "point group");
  add_map(sym_cmd);

  auto* tight_cmd = app.add_subcommand("tight", "tightness and railroads");
  add_map(tight_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG drawing");
  add_map(render_cmd);
  render_cmd->add_option("--out", o.out, "SVG file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-n", o.max_n)->check(CLI::Range(1, 30));
  add_common(verify_cmd);

  auto* scan_cmd = app.add_subcommand("conjecture-scan", "report the quantities of the open conjectures");
  scan_cmd->add_option("--max-n", o.max_n)->check(CLI::Range(1, 30));
  add_common(scan_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*named_cmd) return cmd_named(o);
    if (*gc_cmd) return cmd_gc(o);
    if (*trip_cmd) return cmd_tripling(o);
    if (*circ_cmd) return cmd_circuits(o, matrix);
    if (*sym_cmd) return cmd_symmetry(o);
    if (*tight_cmd) return cmd_tight(o);
    if (*render_cmd) return cmd_render(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*scan_cmd) return cmd_conjecture_scan(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BadParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
