#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sixreg/enumerator.hpp"
#include "sixreg/io.hpp"
#include "sixreg/named_graphs.hpp"

using namespace sixreg;

TEST_CASE("dart list round trip") {
  const auto m = named_graph({NamedKind::Trifolium, 0});
  const auto back = from_dartlist(to_dartlist(m));
  CHECK(canonical_code(back, false) == canonical_code(m, false));
  CHECK_THROWS_AS(from_dartlist("4 1 0"), MapError);
  CHECK_THROWS_AS(from_dartlist("2 1 0 0 1 9"), MapError);
  std::istringstream in("# comment\n" + to_dartlist(m) + "\n\n");
  CHECK(read_dartlists(in).size() == 1);
}

TEST_CASE("planar code") {
  const auto m = named_graph({NamedKind::SixK2, 0});
  const auto pc = to_planar_code({m});
  CHECK(pc.rfind(">>planar_code<<", 0) == 0);
  CHECK(pc.size() == 15 + 1 + 2 * 7);
  CHECK_THROWS_AS(to_planar_code({named_graph({NamedKind::Trifolium, 0})}), BadParameter);
}

TEST_CASE("json record round trip") {
  const auto m = named_graph({NamedKind::K2Tetrahedron, 0});
  const auto r = make_record(m, "named:K2Tetrahedron");
  const auto back = from_json_line(to_json_line(r));
  CHECK(back.code == r.code);
  CHECK(back.group == "Td");
  CHECK(back.z_vector == "6^4");
  CHECK(back.p_vector == r.p_vector);
  CHECK_THROWS_AS(from_json_line("{\"n\": 1}"), MapError);
}

TEST_CASE("record store resumes from its index") {
  const auto dir = std::filesystem::temp_directory_path() / "sixreg_store_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = (dir / "census.jsonl").string();
  EnumerationRequest req;
  req.max_n = 3;
  std::vector<GraphRecord> cell;
  for (const auto& s : enumerate(req))
    if (s.n == 3 && s.p1 == 2) cell.push_back(make_record(s.map, s.provenance));
  {
    RecordStore store(path);
    store.append_cell(3, 2, cell);
  }
  {
    // a partial write after the last index update is discarded
    std::ofstream junk(path, std::ios::app);
    junk << "{\"partial\":";
  }
  RecordStore store(path);
  CHECK(store.has_cell(3, 2));
  CHECK_FALSE(store.has_cell(3, 1));
  CHECK(store.read_cell(3, 2).size() == cell.size());
  CHECK(store.read_all().size() == cell.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg output") {
  const auto svg = render_svg(named_graph({NamedKind::SixK2, 0}), "six");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<title>six</title>") != std::string::npos);
}
