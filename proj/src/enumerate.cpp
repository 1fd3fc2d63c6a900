#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <thread>

#include "sixreg/enumerator.hpp"
#include "sixreg/named_graphs.hpp"

namespace sixreg {

namespace {

struct Found {
  PlanarMap map;
  std::string provenance;
};

using Cell = std::map<CanonicalCode, Found>;

// Named spheres that the decoration step cannot reach, by number of 1-gons.
bool injected(NamedKind k, int p1) {
  switch (k) {
    case NamedKind::SixK2:
    case NamedKind::ThreeK3: return p1 == 0;
    case NamedKind::R: return p1 == 1;
    case NamedKind::A:
    case NamedKind::B:
    case NamedKind::C:
    case NamedKind::S:
    case NamedKind::SV: return p1 == 2;
    case NamedKind::Trifolium:
    case NamedKind::T2: return p1 == 3;
    default: return false;
  }
}

void add(Cell& cell, PlanarMap&& m, const std::string& provenance, bool mirror_quotient) {
  auto code = canonical_code(m, mirror_quotient);
  cell.try_emplace(std::move(code), Found{std::move(m), provenance});
}

// Runs job(i) for i in [0, count) on up to `threads` workers.
template <class Job>
void parallel_for(int count, int threads, Job job) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(threads, count); ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) job(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<EnumeratedSphere> enumerate(const EnumerationRequest& req) {
  if (req.max_n < 1) return {};
  if (req.p1_filter && (*req.p1_filter < 0 || *req.p1_filter > 3))
    throw EnumerationError("p1 must be between 0 and 3");
  const bool mq = req.dedup_mirror;
  auto wanted = [&](int p1) { return !req.p1_filter || *req.p1_filter == p1; };

  // bases, one list per face count; a base with n faces yields spheres with n vertices
  std::vector<std::vector<PlanarMap>> bases(req.max_n + 1);
  parallel_for(req.max_n, req.threads, [&](int i) { bases[i + 1] = enumerate_base_exact(i + 1, mq); });

  struct Task {
    int n;
    const PlanarMap* base;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= req.max_n; ++n)
    for (const auto& b : bases[n]) tasks.push_back({n, &b});

  // per task and p1, decorations sorted by code; merged below in task order
  std::vector<std::array<std::vector<PlanarMap>, 4>> produced(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), req.threads, [&](int i) {
    for (int p1 = 0; p1 <= 3; ++p1) {
      if (!wanted(p1)) continue;
      produced[i][p1] = p1 == 0 ? insert_digons(*tasks[i].base, mq) : insert_unigons(*tasks[i].base, p1, mq);
    }
  });

  std::map<std::pair<int, int>, Cell> cells;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string origin = "base:" + canonical_code(*tasks[i].base, mq).hex();
    for (int p1 = 0; p1 <= 3; ++p1)
      for (auto& g : produced[i][p1])
        add(cells[{tasks[i].n, p1}], std::move(g), origin + (p1 == 0 ? "+digons" : "+unigons"), mq);
  }
  for (const auto& id : named_graphs_up_to(req.max_n)) {
    PlanarMap m = named_graph(id);
    const int n = m.vertex_count(), p1 = m.p_vector()[1];
    if (!injected(id.kind, p1) || !wanted(p1)) continue;
    const std::string origin = "named:" + id.to_string();
    if (!mq) add(cells[{n, p1}], mirror(m), origin + "/mirror", mq);
    add(cells[{n, p1}], std::move(m), origin, mq);
  }

  std::vector<EnumeratedSphere> out;
  for (auto& [key, cell] : cells)
    for (auto& [code, f] : cell) {
      if (!f.map.is_sphere123()) throw EnumerationError("pipeline produced an invalid sphere: " + f.provenance);
      out.push_back({code, std::move(f.map), key.first, key.second, std::move(f.provenance)});
    }
  return out;
}

}  // namespace sixreg
