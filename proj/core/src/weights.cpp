#include "qlozenge/weights.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "qlozenge/errors.hpp"

namespace qlozenge {

std::string weight_name(Weight w) {
  switch (w) {
    case Weight::Uniform: return "uniform";
    case Weight::Wt0: return "wt0";
    case Weight::Wt1: return "wt1";
    case Weight::Wt2: return "wt2";
    case Weight::Wt3: return "wt3";
  }
  return "?";
}

Weight parse_weight(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "uniform" || s == "none") return Weight::Uniform;
  if (s == "wt0") return Weight::Wt0;
  if (s == "wt1") return Weight::Wt1;
  if (s == "wt2") return Weight::Wt2;
  if (s == "wt3") return Weight::Wt3;
  throw std::invalid_argument("unknown weight '" + name + "' (expected uniform, wt0, wt1, wt2 or wt3)");
}

Tiling make_tiling(std::vector<Lozenge> lozenges) {
  std::sort(lozenges.begin(), lozenges.end());
  return Tiling{std::move(lozenges)};
}

bool tiles(const Region& region, const Tiling& tiling) {
  std::vector<Triangle> covered;
  covered.reserve(2 * tiling.lozenges.size());
  for (const auto& l : tiling.lozenges) {
    covered.push_back(l.up);
    covered.push_back(l.down);
  }
  std::sort(covered.begin(), covered.end());
  return covered == region.triangles();
}

void require_weight_support(Weight w, const Region& region) {
  switch (w) {
    case Weight::Uniform:
    case Weight::Wt2:
      return;
    case Weight::Wt1:
      if (!region.frame()) throw MissingFrame("wt1 needs the region's southeast side");
      return;
    case Weight::Wt3:
      if (!region.frame() || !region.frame()->magnet_bar) {
        throw MissingFrame("wt3 is only defined on magnet bar regions");
      }
      return;
    case Weight::Wt0:
      if (!region.provenance() || !region.provenance()->is_q_family()) {
        throw MissingFrame("wt0 needs a region built by a Q-family builder");
      }
      return;
  }
}

std::int64_t lozenge_exponent(Weight w, const Region& region, const Lozenge& loz) {
  require_weight_support(w, region);
  const LozengeKind kind = loz.kind();
  switch (w) {
    case Weight::Uniform:
      return 0;
    case Weight::Wt2:
      return kind == LozengeKind::Right ? loz.up.row + 1 : 0;
    case Weight::Wt1:
      return kind == LozengeKind::Right ? region.frame()->southeast - loz.up.pos : 0;
    case Weight::Wt3:
      return kind == LozengeKind::Vertical ? loz.up.pos + loz.up.row + 1 - region.frame()->southwest : 0;
    case Weight::Wt0:
      throw std::invalid_argument("wt0 exponents depend on the whole tiling; use tiling_exponent");
  }
  return 0;
}

namespace {

// Rows of right lozenges grouped by the line they slide along when cubes are added.
std::map<int, std::vector<int>> right_rows_by_line(const Tiling& t) {
  std::map<int, std::vector<int>> lines;
  for (const auto& l : t.lozenges) {
    if (l.kind() == LozengeKind::Right) lines[l.up.row + l.up.pos].push_back(l.up.row);
  }
  for (auto& [key, rows] : lines) std::sort(rows.begin(), rows.end());
  return lines;
}

}  // namespace

std::int64_t pile_height(const Tiling& tiling, const Tiling& empty) {
  const auto now = right_rows_by_line(tiling);
  const auto base = right_rows_by_line(empty);
  std::int64_t total = 0;
  for (const auto& [key, rows] : now) {
    auto it = base.find(key);
    if (it == base.end() || it->second.size() != rows.size()) {
      throw std::invalid_argument("tiling does not belong to the region of the empty pile");
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const int h = rows[k] - it->second[k];
      if (h < 0) throw NegativeVolume("column lies below the empty pile");
      total += h;
    }
  }
  return total;
}

std::int64_t tiling_exponent(Weight w, const Region& region, const Tiling& tiling) {
  if (w == Weight::Wt0) {
    require_weight_support(w, region);
    return pile_height(tiling, empty_pile_tiling(region));
  }
  std::int64_t total = 0;
  for (const auto& l : tiling.lozenges) total += lozenge_exponent(w, region, l);
  return total;
}

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::int64_t f_exponent(const RegionParams& p) {
  const std::int64_t x = p.x, y = p.y, z = p.z, m = p.m, a = p.a, b = p.b, c = p.c;
  return m * binom2(y + b + 1) + z * binom2(y + 1) + m * (z + b) * (y + a + b) + (z + b) * binom2(m + 1) +
         x * (z + b + c) * (y + m + a + b + c) + (z + b + c) * binom2(x + 1) + a * (x + c) * (y + a + b) +
         a * binom2(x + c + 1);
}

std::int64_t g_exponent(const RegionParams& p) {
  const std::int64_t x = p.x, y = p.y, z = p.z, m = p.m, a = p.a, b = p.b, c = p.c;
  return (y + b) * binom2(m + 1) + m * y * z + y * binom2(z + 1) + m * (z + b) * (m + a) + m * binom2(z + b + 1) +
         x * (m + a) * (z + b + c) + x * binom2(z + b + c + 1) + (x + c) * binom2(a + 1);
}

std::int64_t tiling_volume(const Region& region, const Tiling& tiling) {
  if (!region.provenance() || !region.provenance()->is_q_family()) {
    throw MissingFrame("tiling_volume needs a region built by a Q-family builder");
  }
  const std::int64_t v = tiling_exponent(Weight::Wt2, region, tiling) - g_exponent(region.provenance()->params);
  if (v < 0) throw NegativeVolume("tiling_volume: wt2 exponent below g");
  return v;
}

ForcedResult remove_forced(const Region& region, Weight w) {
  if (w == Weight::Wt0) throw std::invalid_argument("remove_forced: wt0 is not lozenge-local");
  require_weight_support(w, region);
  const auto& tris = region.triangles();
  std::vector<char> alive(tris.size(), 1);
  auto index_of = [&](const Triangle& t) -> std::ptrdiff_t {
    auto it = std::lower_bound(tris.begin(), tris.end(), t);
    if (it == tris.end() || *it != t) return -1;
    return it - tris.begin();
  };

  ForcedResult out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < tris.size(); ++k) {
      if (!alive[k]) continue;
      std::ptrdiff_t only = -1;
      int degree = 0;
      for (const auto& n : tris[k].neighbors()) {
        const auto idx = index_of(n);
        if (idx >= 0 && alive[static_cast<std::size_t>(idx)]) {
          ++degree;
          only = idx;
        }
      }
      if (degree == 0) throw Untileable("triangle " + tris[k].to_string() + " cannot be covered");
      if (degree > 1) continue;
      const Lozenge loz = Lozenge::make(tris[k], tris[static_cast<std::size_t>(only)]);
      out.exponent += lozenge_exponent(w, region, loz);
      out.removed.push_back(loz);
      alive[k] = 0;
      alive[static_cast<std::size_t>(only)] = 0;
      changed = true;
    }
  }
  std::vector<Triangle> gone;
  for (const auto& l : out.removed) {
    gone.push_back(l.up);
    gone.push_back(l.down);
  }
  out.region = region.without(gone);
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

std::optional<Tiling> some_tiling(const Region& region) {
  if (!region.balanced()) return std::nullopt;
  // Bipartite matching of Up triangles to Down triangles by augmenting paths.
  std::vector<Triangle> ups, downs;
  for (const auto& t : region.triangles()) (t.is_up() ? ups : downs).push_back(t);
  std::map<Triangle, std::size_t> down_index;
  for (std::size_t k = 0; k < downs.size(); ++k) down_index[downs[k]] = k;
  std::vector<std::vector<std::size_t>> adj(ups.size());
  for (std::size_t k = 0; k < ups.size(); ++k) {
    for (const auto& n : ups[k].neighbors()) {
      auto it = down_index.find(n);
      if (it != down_index.end()) adj[k].push_back(it->second);
    }
  }
  std::vector<std::ptrdiff_t> match_down(downs.size(), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t d : adj[u]) {
      if (seen[d]) continue;
      seen[d] = 1;
      if (match_down[d] < 0 || self(self, static_cast<std::size_t>(match_down[d]))) {
        match_down[d] = static_cast<std::ptrdiff_t>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < ups.size(); ++u) {
    seen.assign(downs.size(), 0);
    if (!augment(augment, u)) return std::nullopt;
  }
  std::vector<Lozenge> loz;
  for (std::size_t d = 0; d < downs.size(); ++d) {
    loz.push_back(Lozenge{ups[static_cast<std::size_t>(match_down[d])], downs[d]});
  }
  return make_tiling(std::move(loz));
}

namespace {

// The two ways three lozenges can tile the unit hexagon around vertex (i, j).
// The second one carries one more cube than the first.
std::array<Lozenge, 3> low_hexagon(int i, int j) {
  return {Lozenge{up(j, i), down(j, i - 1)}, Lozenge{up(j, i - 1), down(j - 1, i - 1)},
          Lozenge{up(j - 1, i), down(j - 1, i)}};
}

std::array<Lozenge, 3> high_hexagon(int i, int j) {
  return {Lozenge{up(j, i), down(j - 1, i)}, Lozenge{up(j, i - 1), down(j, i - 1)},
          Lozenge{up(j - 1, i), down(j - 1, i - 1)}};
}

bool has_all(const std::set<Lozenge>& s, const std::array<Lozenge, 3>& l) {
  return s.count(l[0]) && s.count(l[1]) && s.count(l[2]);
}

}  // namespace

std::vector<Flip> available_flips(const Tiling& tiling) {
  const std::set<Lozenge> s(tiling.lozenges.begin(), tiling.lozenges.end());
  std::set<std::pair<int, int>> candidates;
  for (const auto& l : tiling.lozenges) {
    if (l.kind() != LozengeKind::Right) continue;
    candidates.insert({l.up.pos, l.up.row + 1});
    candidates.insert({l.up.pos + 1, l.up.row});
  }
  std::vector<Flip> out;
  for (const auto& [i, j] : candidates) {
    if (has_all(s, low_hexagon(i, j))) out.push_back({{i, j}, +1});
    if (has_all(s, high_hexagon(i, j))) out.push_back({{i, j}, -1});
  }
  return out;
}

Tiling apply_flip(const Tiling& tiling, const Flip& flip) {
  std::set<Lozenge> s(tiling.lozenges.begin(), tiling.lozenges.end());
  const auto [i, j] = flip.vertex;
  const auto from = flip.direction > 0 ? low_hexagon(i, j) : high_hexagon(i, j);
  const auto to = flip.direction > 0 ? high_hexagon(i, j) : low_hexagon(i, j);
  if (!has_all(s, from)) throw std::invalid_argument("apply_flip: hexagon is not in the required position");
  for (const auto& l : from) s.erase(l);
  for (const auto& l : to) s.insert(l);
  return Tiling{std::vector<Lozenge>(s.begin(), s.end())};
}

Tiling empty_pile_tiling(const Region& region) {
  auto start = some_tiling(region);
  if (!start) throw Untileable("region has no tiling");
  Tiling cur = std::move(*start);
  while (true) {
    const auto flips = available_flips(cur);
    auto it = std::find_if(flips.begin(), flips.end(), [](const Flip& f) { return f.direction < 0; });
    if (it == flips.end()) return cur;
    cur = apply_flip(cur, *it);
  }
}

}  // namespace qlozenge
