#include "sixreg/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sixreg/circuits.hpp"
#include "sixreg/symmetry.hpp"

namespace sixreg {

using nlohmann::json;

std::string to_dartlist(const PlanarMap& m) {
  std::ostringstream out;
  out << m.dart_count();
  for (Dart t : m.twins()) out << ' ' << t;
  for (Dart v : m.vertex_nexts()) out << ' ' << v;
  return out.str();
}

PlanarMap from_dartlist(const std::string& line) {
  std::istringstream in(line);
  long long n = -1;
  if (!(in >> n) || n < 0 || n > (1 << 26)) throw MapError(MapError::Kind::BadInput, "dart list: bad dart count");
  std::vector<Dart> twin(n), vnext(n);
  for (auto* arr : {&twin, &vnext})
    for (auto& x : *arr)
      if (!(in >> x)) throw MapError(MapError::Kind::BadInput, "dart list: too few entries");
  std::string rest;
  if (in >> rest) throw MapError(MapError::Kind::BadInput, "dart list: trailing data");
  return PlanarMap::build(std::move(twin), std::move(vnext));
}

std::vector<PlanarMap> read_dartlists(std::istream& in) {
  std::vector<PlanarMap> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    out.push_back(from_dartlist(line));
  }
  return out;
}

std::string to_planar_code(const std::vector<PlanarMap>& maps) {
  std::string out = ">>planar_code<<";
  for (const auto& m : maps) {
    for (Dart d = 0; d < m.dart_count(); ++d)
      if (m.head(d) == m.vertex_of(d)) throw BadParameter("planar_code cannot represent loops");
    const int n = m.vertex_count();
    const bool wide = n > 255;
    auto put = [&](int x) {
      if (wide) {
        out.push_back(static_cast<char>(x & 0xff));
        out.push_back(static_cast<char>(x >> 8));
      } else {
        out.push_back(static_cast<char>(x));
      }
    };
    if (wide) out.push_back('\0');
    put(n);
    for (int v = 0; v < n; ++v) {
      // clockwise: walk vertex_prev
      const Dart first = m.vertex_dart(v);
      Dart d = first;
      do {
        put(m.head(d) + 1);
        d = m.vertex_prev(d);
      } while (d != first);
      put(0);
    }
  }
  return out;
}

GraphRecord make_record(const PlanarMap& m, const std::string& provenance, bool mirror_quotient) {
  GraphRecord r;
  r.code = canonical_code(m, mirror_quotient);
  r.n = m.vertex_count();
  r.p_vector = m.p_vector();
  r.group = point_group(m).name;
  const auto z = zigzags(m);
  const auto c = central_circuits(m);
  r.z_vector = z.vector.to_string();
  r.c_vector = c.vector.to_string();
  r.tight_z = to_string(tightness(m, z).status);
  r.tight_c = to_string(tightness(m, c).status);
  r.provenance = provenance;
  r.dartlist = to_dartlist(m);
  return r;
}

std::string to_json_line(const GraphRecord& r) {
  json p = json::object();
  for (const auto& [k, v] : r.p_vector.count) p[std::to_string(k)] = v;
  json j = {{"code", r.code.hex()},         {"n", r.n},
            {"p_vector", p},                {"group", r.group},
            {"z_vector", r.z_vector},       {"c_vector", r.c_vector},
            {"tight_z", r.tight_z},         {"tight_c", r.tight_c},
            {"provenance", r.provenance},   {"dartlist", r.dartlist}};
  return j.dump();
}

GraphRecord from_json_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    GraphRecord r;
    r.code = CanonicalCode::from_hex(j.at("code").get<std::string>());
    r.n = j.at("n").get<int>();
    for (const auto& [k, v] : j.at("p_vector").items()) r.p_vector.count[std::stoi(k)] = v.get<int>();
    r.group = j.at("group").get<std::string>();
    r.z_vector = j.at("z_vector").get<std::string>();
    r.c_vector = j.at("c_vector").get<std::string>();
    r.tight_z = j.at("tight_z").get<std::string>();
    r.tight_c = j.at("tight_c").get<std::string>();
    r.provenance = j.at("provenance").get<std::string>();
    r.dartlist = j.value("dartlist", std::string());
    return r;
  } catch (const json::exception& e) {
    throw MapError(MapError::Kind::BadInput, std::string("record: ") + e.what());
  }
}

RecordStore::RecordStore(std::string path) : path_(std::move(path)) { load_index(); }

void RecordStore::load_index() {
  cells_.clear();
  std::ifstream in(path_ + ".idx");
  if (!in) return;
  try {
    const json j = json::parse(in);
    for (const auto& c : j.at("cells")) {
      const int n = c.at("n").get<int>(), p1 = c.at("p1").get<int>();
      cells_[{n, p1}] = Cell{c.at("offset").get<std::uint64_t>(), c.at("count").get<int>()};
    }
  } catch (const json::exception& e) {
    throw MapError(MapError::Kind::BadInput, std::string("index: ") + e.what());
  }
  // records appended after the last index write are dropped on resume
  std::uint64_t end = 0;
  for (const auto& [key, c] : cells_) {
    std::ifstream data(path_);
    data.seekg(static_cast<std::streamoff>(c.offset));
    std::string line;
    for (int i = 0; i < c.count && std::getline(data, line); ++i) {
    }
    end = std::max<std::uint64_t>(end, static_cast<std::uint64_t>(data.tellg()));
  }
  if (std::filesystem::exists(path_) && std::filesystem::file_size(path_) > end)
    std::filesystem::resize_file(path_, end);
}

void RecordStore::save_index() const {
  json cells = json::array();
  for (const auto& [key, c] : cells_)
    cells.push_back({{"n", key.first}, {"p1", key.second}, {"offset", c.offset}, {"count", c.count}});
  std::ofstream out(path_ + ".idx", std::ios::trunc);
  out << json{{"file", std::filesystem::path(path_).filename().string()}, {"cells", cells}}.dump(1) << "\n";
}

void RecordStore::append_cell(int n, int p1, const std::vector<GraphRecord>& records) {
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  out.seekp(0, std::ios::end);
  const auto offset = static_cast<std::uint64_t>(out.tellp());
  for (const auto& r : records) out << to_json_line(r) << '\n';
  out.close();
  cells_[{n, p1}] = Cell{offset, static_cast<int>(records.size())};
  save_index();
}

std::vector<GraphRecord> RecordStore::read_all() const {
  std::vector<GraphRecord> out;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(from_json_line(line));
  return out;
}

std::vector<GraphRecord> RecordStore::read_cell(int n, int p1) const {
  auto it = cells_.find({n, p1});
  if (it == cells_.end()) return {};
  std::ifstream in(path_);
  in.seekg(static_cast<std::streamoff>(it->second.offset));
  std::vector<GraphRecord> out;
  std::string line;
  for (int i = 0; i < it->second.count && std::getline(in, line); ++i) out.push_back(from_json_line(line));
  return out;
}

}  // namespace sixreg
