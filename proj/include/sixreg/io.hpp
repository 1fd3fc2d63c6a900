#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sixreg/planar_map.hpp"

namespace sixreg {

/// "n_darts t_0 ... t_{n-1} v_0 ... v_{n-1}" on one line (twin, vertex_next).
std::string to_dartlist(const PlanarMap& m);
/// Throws MapError(BadInput) on malformed text.
PlanarMap from_dartlist(const std::string& line);
/// One map per non-empty line; lines starting with '#' are skipped.
std::vector<PlanarMap> read_dartlists(std::istream& in);

/// plantri planar_code with the ">>planar_code<<" header. Neighbours are listed
/// clockwise. Throws BadParameter for maps with loops.
std::string to_planar_code(const std::vector<PlanarMap>& maps);

struct GraphRecord {
  CanonicalCode code;
  int n = 0;
  PVector p_vector;
  std::string group;
  std::string z_vector;
  std::string c_vector;
  std::string tight_z;
  std::string tight_c;
  std::string provenance;
  std::string dartlist;  // the stored map itself

  bool operator==(const GraphRecord&) const = default;
};

/// Full analysis of a map. `mirror_quotient` selects the canonical code kind.
GraphRecord make_record(const PlanarMap& m, const std::string& provenance, bool mirror_quotient = true);

std::string to_json_line(const GraphRecord& r);
/// Throws MapError(BadInput).
GraphRecord from_json_line(const std::string& line);

/// Append-only JSON-lines store with a side index "<path>.idx" mapping each
/// (n, p1) cell to the byte offset of its first record and its record count.
class RecordStore {
 public:
  struct Cell {
    std::uint64_t offset = 0;
    int count = 0;
  };

  explicit RecordStore(std::string path);

  /// Cells already present in the index (empty for a new store).
  const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }
  bool has_cell(int n, int p1) const { return cells_.count({n, p1}) > 0; }

  /// Appends one complete cell and rewrites the index.
  void append_cell(int n, int p1, const std::vector<GraphRecord>& records);

  std::vector<GraphRecord> read_all() const;
  std::vector<GraphRecord> read_cell(int n, int p1) const;

  const std::string& path() const { return path_; }

 private:
  void load_index();
  void save_index() const;

  std::string path_;
  std::map<std::pair<int, int>, Cell> cells_;
};

/// Best-effort SVG drawing: vertices relaxed on the sphere, projected
/// stereographically from the largest face.
std::string render_svg(const PlanarMap& m, const std::string& title = "");

}  // namespace sixreg
