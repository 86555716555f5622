#include <algorithm>
#include <map>
#include <stdexcept>

#include "qlozenge/lattice.hpp"

namespace qlozenge {

namespace {

using Point = std::pair<int, int>;

struct Edge {
  Point from;
  Point to;
  Triangle owner;
};

// Direction index of a unit step, counter-clockwise from east.
int direction(const Point& from, const Point& to) {
  const int di = to.first - from.first;
  const int dj = to.second - from.second;
  if (di == 1 && dj == 0) return 0;
  if (di == 0 && dj == 1) return 1;
  if (di == -1 && dj == 1) return 2;
  if (di == -1 && dj == 0) return 3;
  if (di == 0 && dj == -1) return 4;
  if (di == 1 && dj == -1) return 5;
  throw std::logic_error("boundary: not a unit lattice step");
}

std::array<Edge, 3> directed_edges(const Triangle& t) {
  const int k = t.pos, r = t.row;
  if (t.is_up()) {
    return {Edge{{k, r}, {k + 1, r}, t}, Edge{{k + 1, r}, {k, r + 1}, t}, Edge{{k, r + 1}, {k, r}, t}};
  }
  return {Edge{{k + 1, r}, {k + 1, r + 1}, t}, Edge{{k + 1, r + 1}, {k, r + 1}, t},
          Edge{{k, r + 1}, {k + 1, r}, t}};
}

}  // namespace

std::vector<BoundaryCycle> boundary_cycles(const Region& region) {
  std::map<std::pair<Point, Point>, Triangle> all;
  for (const auto& t : region.triangles()) {
    for (const auto& e : directed_edges(t)) all.emplace(std::make_pair(e.from, e.to), e.owner);
  }
  // A boundary edge is one whose reverse belongs to no region triangle.
  std::map<Point, std::vector<Edge>> outgoing;
  for (const auto& [key, owner] : all) {
    if (all.count({key.second, key.first})) continue;
    outgoing[key.first].push_back(Edge{key.first, key.second, owner});
  }
  std::map<std::pair<Point, Point>, bool> used;

  std::vector<BoundaryCycle> cycles;
  for (const auto& [start_point, edges] : outgoing) {
    for (const auto& first : edges) {
      if (used[{first.from, first.to}]) continue;
      BoundaryCycle cycle;
      Edge cur = first;
      while (true) {
        used[{cur.from, cur.to}] = true;
        cycle.vertices.push_back(cur.from);
        cycle.edge_triangles.push_back(cur.owner);
        // The successor is the sharpest right turn; this pairs every incoming
        // boundary edge with exactly one outgoing one.
        const int in = direction(cur.from, cur.to);
        const Edge* best = nullptr;
        int best_rank = 99;
        for (const auto& e : outgoing[cur.to]) {
          static constexpr int kRank[6] = {2, 3, 4, 99, 0, 1};
          const int turn = ((direction(e.from, e.to) - in) % 6 + 6) % 6;
          if (kRank[turn] < best_rank) {
            best_rank = kRank[turn];
            best = &e;
          }
        }
        if (best == nullptr) throw std::logic_error("boundary: open boundary walk");
        if (best->from == first.from && best->to == first.to) break;
        if (used[{best->from, best->to}]) throw std::logic_error("boundary: walk re-entered a used edge");
        cur = *best;
      }
      std::int64_t area = 0;
      const std::size_t n = cycle.vertices.size();
      for (std::size_t k = 0; k < n; ++k) {
        const auto& p = cycle.vertices[k];
        const auto& q = cycle.vertices[(k + 1) % n];
        area += static_cast<std::int64_t>(p.first) * q.second - static_cast<std::int64_t>(q.first) * p.second;
      }
      cycle.twice_area = area;
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

}  // namespace qlozenge
