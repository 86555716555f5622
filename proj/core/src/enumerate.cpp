#include "qlozenge/enumerate.hpp"

#include <algorithm>
#include <bitset>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "qlozenge/errors.hpp"

namespace qlozenge {

std::string region_digest(const Region& region) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& t : region.triangles()) {
    mix(std::to_string(t.row));
    mix(",");
    mix(std::to_string(t.pos));
    mix(t.is_up() ? "U;" : "D;");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// One later partner of a triangle in the sweep order.
struct Partner {
  std::size_t offset;
  std::int64_t exponent;
};

struct SweepPlan {
  std::vector<std::vector<Partner>> partners;
  std::size_t max_offset = 0;
};

std::ptrdiff_t index_in(const std::vector<Triangle>& tris, const Triangle& t) {
  auto it = std::lower_bound(tris.begin(), tris.end(), t);
  if (it == tris.end() || *it != t) return -1;
  return it - tris.begin();
}

// Weight used inside the sweep; wt0 is realized through wt2 and a final shift.
Weight sweep_weight(Weight w) { return w == Weight::Wt0 ? Weight::Wt2 : w; }

SweepPlan plan_sweep(const Region& region, Weight w) {
  const auto& tris = region.triangles();
  SweepPlan plan;
  plan.partners.resize(tris.size());
  for (std::size_t p = 0; p < tris.size(); ++p) {
    const Triangle& t = tris[p];
    // Only partners that come later in (row, pos, orient) order.
    std::vector<Triangle> later;
    if (t.is_up()) {
      later = {down(t.row, t.pos)};
    } else {
      later = {up(t.row, t.pos + 1), up(t.row + 1, t.pos)};
    }
    for (const auto& n : later) {
      const auto idx = index_in(tris, n);
      if (idx < 0) continue;
      const auto off = static_cast<std::size_t>(idx) - p;
      plan.partners[p].push_back({off, lozenge_exponent(w, region, Lozenge::make(t, n))});
      plan.max_offset = std::max(plan.max_offset, off);
    }
  }
  return plan;
}

// Mask helpers so the sweep can run on a machine word or on a wide bitset.
inline bool bit(std::uint64_t m, std::size_t k) { return (m >> k) & 1U; }
inline std::uint64_t with_bit(std::uint64_t m, std::size_t k) { return m | (std::uint64_t{1} << k); }
template <std::size_t N>
bool bit(const std::bitset<N>& m, std::size_t k) {
  return m.test(k);
}
template <std::size_t N>
std::bitset<N> with_bit(std::bitset<N> m, std::size_t k) {
  return m.set(k);
}

inline void accumulate(BigInt& into, const BigInt& v, std::int64_t) { into += v; }
inline void accumulate(QPoly& into, const QPoly& v, std::int64_t e) { into.add_shifted(v, e); }

template <class Mask, class Value>
Value sweep(const SweepPlan& plan, const Budget& budget) {
  std::unordered_map<Mask, Value> cur;
  cur.emplace(Mask{}, Value(1));
  for (std::size_t p = 0; p < plan.partners.size(); ++p) {
    std::unordered_map<Mask, Value> next;
    next.reserve(cur.size() * 2);
    for (const auto& [mask, val] : cur) {
      if (bit(mask, 0)) {
        accumulate(next[mask >> 1], val, 0);
        continue;
      }
      for (const auto& pr : plan.partners[p]) {
        if (bit(mask, pr.offset)) continue;
        accumulate(next[with_bit(mask, pr.offset) >> 1], val, pr.exponent);
      }
    }
    if (next.size() > budget.max_states) {
      throw BudgetExceeded("frontier has " + std::to_string(next.size()) + " states, budget " +
                           std::to_string(budget.max_states));
    }
    cur = std::move(next);
  }
  auto it = cur.find(Mask{});
  return it == cur.end() ? Value() : it->second;
}

template <class Value>
Value run_sweep(const Region& region, Weight w, const Budget& budget) {
  if (region.empty()) return Value(1);
  if (!region.balanced()) return Value();
  const SweepPlan plan = plan_sweep(region, sweep_weight(w));
  if (plan.max_offset < 64) return sweep<std::uint64_t, Value>(plan, budget);
  if (plan.max_offset < 256) return sweep<std::bitset<256>, Value>(plan, budget);
  throw BudgetExceeded("region rows are too wide for the frontier sweep");
}

}  // namespace

BigInt count_tilings(const Region& region, const Budget& budget) {
  return run_sweep<BigInt>(region, Weight::Uniform, budget);
}

GenFunction gen_function(const Region& region, Weight w, const Budget& budget) {
  require_weight_support(w, region);
  QPoly poly = run_sweep<QPoly>(region, w, budget);
  if (w == Weight::Wt0 && !poly.is_zero()) poly = poly.unshifted(poly.low_degree());
  return {std::move(poly), w, region_digest(region)};
}

namespace {

// Exhaustive search that always branches on the smallest uncovered triangle.
class Backtracker {
 public:
  explicit Backtracker(const Region& region) : tris_(region.triangles()), covered_(tris_.size(), 0) {}

  template <class Leaf>
  bool run(Leaf&& leaf) {
    return step(0, leaf);
  }

 private:
  template <class Leaf>
  bool step(std::size_t from, Leaf& leaf) {
    while (from < tris_.size() && covered_[from]) ++from;
    if (from == tris_.size()) return leaf(stack_);
    const Triangle& t = tris_[from];
    covered_[from] = 1;
    bool keep_going = true;
    for (const auto& n : t.neighbors()) {
      const auto idx = index_in(tris_, n);
      if (idx < 0 || covered_[static_cast<std::size_t>(idx)]) continue;
      covered_[static_cast<std::size_t>(idx)] = 1;
      stack_.push_back(Lozenge::make(t, n));
      keep_going = step(from + 1, leaf);
      stack_.pop_back();
      covered_[static_cast<std::size_t>(idx)] = 0;
      if (!keep_going) break;
    }
    covered_[from] = 0;
    return keep_going;
  }

  const std::vector<Triangle>& tris_;
  std::vector<char> covered_;
  std::vector<Lozenge> stack_;
};

void check_budget(const Region& region, const Budget& budget) {
  if (region.size() > budget.max_triangles) {
    throw BudgetExceeded("region has " + std::to_string(region.size()) + " triangles, budget " +
                         std::to_string(budget.max_triangles));
  }
}

}  // namespace

GenFunction gen_function_oracle(const Region& region, Weight w, const Budget& budget) {
  check_budget(region, budget);
  require_weight_support(w, region);
  std::map<std::int64_t, BigInt> counts;
  if (region.balanced()) {
    std::optional<Tiling> empty;
    if (w == Weight::Wt0 && !region.empty()) {
      if (auto any = some_tiling(region)) empty = empty_pile_tiling(region);
    }
    Backtracker bt(region);
    bt.run([&](const std::vector<Lozenge>& loz) {
      std::int64_t e = 0;
      if (w == Weight::Wt0) {
        if (!loz.empty()) e = pile_height(make_tiling(loz), *empty);
      } else {
        for (const auto& l : loz) e += lozenge_exponent(w, region, l);
      }
      counts[e] += 1;
      return true;
    });
  }
  std::vector<QPoly::Term> terms;
  for (auto& [e, c] : counts) terms.push_back({e, std::move(c)});
  return {QPoly::from_terms(std::move(terms)), w, region_digest(region)};
}

void iter_tilings(const Region& region, const std::function<bool(const Tiling&)>& visit, const Budget& budget) {
  check_budget(region, budget);
  if (!region.balanced()) return;
  Backtracker bt(region);
  bt.run([&](const std::vector<Lozenge>& loz) { return visit(make_tiling(loz)); });
}

std::vector<Tiling> list_tilings(const Region& region, std::size_t limit, const Budget& budget) {
  std::vector<Tiling> out;
  iter_tilings(
      region,
      [&](const Tiling& t) {
        out.push_back(t);
        return limit == 0 || out.size() < limit;
      },
      budget);
  return out;
}

namespace {

// Positions of a triangle on a boundary walk, as one cyclic run start, or -1
// when absent. Throws when the triangle meets the walk in separated places.
std::ptrdiff_t run_start(const BoundaryCycle& cyc, const Triangle& t) {
  const auto n = static_cast<std::ptrdiff_t>(cyc.edge_triangles.size());
  std::vector<std::ptrdiff_t> hits;
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    if (cyc.edge_triangles[static_cast<std::size_t>(k)] == t) hits.push_back(k);
  }
  if (hits.empty()) return -1;
  // Count maximal runs cyclically.
  std::size_t runs = 0;
  std::ptrdiff_t start = hits.front();
  for (std::size_t k = 0; k < hits.size(); ++k) {
    const std::ptrdiff_t prev = (hits[k] - 1 + n) % n;
    if (!std::binary_search(hits.begin(), hits.end(), prev)) {
      ++runs;
      start = hits[k];
    }
  }
  if (runs > 1) throw BadMarks("mark " + t.to_string() + " touches the boundary at a pinch point");
  return start;
}

}  // namespace

std::array<Region, 5> kuo_remove(const Region& region, const std::array<Triangle, 4>& marks) {
  const auto& [u, v, w, s] = marks;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!region.contains(marks[i])) throw BadMarks("mark " + marks[i].to_string() + " is not in the region");
    for (std::size_t j = 0; j < i; ++j) {
      if (marks[i] == marks[j]) throw BadMarks("marks must be distinct");
    }
  }
  if (u.orient != w.orient || v.orient != s.orient || u.orient == v.orient) {
    throw BadMarks("u and w must share one orientation and v and s the other");
  }
  bool ordered = false;
  for (const auto& cyc : boundary_cycles(region)) {
    if (cyc.twice_area <= 0) continue;
    std::array<std::ptrdiff_t, 4> pos{};
    bool all = true;
    for (std::size_t i = 0; i < 4; ++i) {
      pos[i] = run_start(cyc, marks[i]);
      if (pos[i] < 0) all = false;
    }
    if (!all) continue;
    int descents = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (pos[(i + 1) % 4] < pos[i]) ++descents;
    }
    ordered = descents == 1 || descents == 3;
    break;
  }
  if (!ordered) throw BadMarks("marks are not in cyclic order along one outer boundary");
  return {region.without({u, v, w, s}), region.without({u, v}), region.without({w, s}),
          region.without({u, s}), region.without({v, w})};
}

}  // namespace qlozenge
