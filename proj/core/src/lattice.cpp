#include "qlozenge/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qlozenge/errors.hpp"

namespace qlozenge {

std::array<Triangle, 3> Triangle::neighbors() const noexcept {
  if (orient == Orient::Up) return {down(row, pos), down(row, pos - 1), down(row - 1, pos)};
  return {up(row, pos), up(row, pos + 1), up(row + 1, pos)};
}

std::string Triangle::to_string() const {
  std::ostringstream os;
  os << (orient == Orient::Up ? "U(" : "D(") << row << ',' << pos << ')';
  return os.str();
}

char kind_letter(LozengeKind k) noexcept {
  switch (k) {
    case LozengeKind::Left: return 'L';
    case LozengeKind::Right: return 'R';
    case LozengeKind::Vertical: return 'V';
  }
  return '?';
}

Lozenge Lozenge::make(const Triangle& a, const Triangle& b) {
  const Triangle& u = a.is_up() ? a : b;
  const Triangle& d = a.is_up() ? b : a;
  if (!u.is_up() || d.is_up()) throw std::invalid_argument("Lozenge: needs one Up and one Down triangle");
  const auto nb = u.neighbors();
  if (std::find(nb.begin(), nb.end(), d) == nb.end()) {
    throw std::invalid_argument("Lozenge: triangles " + u.to_string() + " and " + d.to_string() +
                                " do not share an edge");
  }
  return {u, d};
}

LozengeKind Lozenge::kind() const noexcept {
  if (down.row == up.row) return down.pos == up.pos ? LozengeKind::Right : LozengeKind::Left;
  return LozengeKind::Vertical;
}

bool RegionParams::nonnegative() const noexcept {
  return x >= 0 && y >= 0 && z >= 0 && t >= 0 && m >= 0 && a >= 0 && b >= 0 && c >= 0;
}

std::string RegionParams::to_string() const {
  std::ostringstream os;
  os << x << ',' << y << ',' << z << ',' << t << ',' << m << ',' << a << ',' << b << ',' << c;
  return os.str();
}

RegionParams RegionParams::parse(const std::string& text) {
  std::vector<int> v;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("params: '" + item + "' is not an integer");
    }
    if (used != item.size()) throw std::invalid_argument("params: '" + item + "' is not an integer");
    v.push_back(value);
  }
  if (v.size() != 8) throw std::invalid_argument("params: expected 8 comma-separated values x,y,z,t,m,a,b,c");
  RegionParams p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  if (!p.nonnegative()) throw std::invalid_argument("params: values must be nonnegative");
  return p;
}

Region::Region(std::vector<Triangle> triangles) : tris_(std::move(triangles)) {
  std::sort(tris_.begin(), tris_.end());
  tris_.erase(std::unique(tris_.begin(), tris_.end()), tris_.end());
}

bool Region::contains(const Triangle& t) const {
  return std::binary_search(tris_.begin(), tris_.end(), t);
}

std::size_t Region::up_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(tris_.begin(), tris_.end(), [](const Triangle& t) { return t.is_up(); }));
}

Region Region::without(const std::vector<Triangle>& removed) const {
  std::vector<Triangle> gone = removed;
  std::sort(gone.begin(), gone.end());
  std::vector<Triangle> keep;
  keep.reserve(tris_.size());
  std::set_difference(tris_.begin(), tris_.end(), gone.begin(), gone.end(), std::back_inserter(keep));
  Region out(std::move(keep));
  out.frame_ = frame_;
  return out;
}

Region Region::translated(int drow, int dpos) const {
  std::vector<Triangle> moved = tris_;
  for (auto& t : moved) {
    t.row += drow;
    t.pos += dpos;
  }
  return Region(std::move(moved));
}

std::vector<Triangle> Region::boundary_triangles() const {
  std::vector<Triangle> out;
  for (const auto& t : tris_) {
    for (const auto& n : t.neighbors()) {
      if (!contains(n)) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

std::pair<Region, std::pair<int, int>> Region::normalized() const {
  if (tris_.empty()) return {Region{}, {0, 0}};
  // tris_ is sorted by (row, pos, orient), so the first entry has the lowest
  // row and the lowest pos within it.
  const int r0 = tris_.front().row;
  const int k0 = tris_.front().pos;
  return {translated(-r0, -k0), {r0, k0}};
}

namespace {

// Centroid tests are done in thirds of lattice units so everything stays integral.
struct Thirds {
  int i3;
  int j3;
};

Thirds centroid(const Triangle& t) {
  if (t.is_up()) return {3 * t.pos + 1, 3 * t.row + 1};
  return {3 * t.pos + 2, 3 * t.row + 2};
}

bool in_shamrock(Thirds p, int m, int a, int b, int c) {
  const int i = p.i3, j = p.j3, s = i + j;
  if (j > 0 && i > 0 && s < 3 * a) return true;
  if (j < 3 * (a + m) && i < 0 && s > 3 * a) return true;
  if (j > 3 * (a + m) && i > -3 * (m + c) && s < 3 * a) return true;
  if (j > 3 * (a + m) && i > 0 && s < 3 * (a + m + b)) return true;
  return false;
}

void check_nonnegative(std::initializer_list<int> values, const char* who) {
  for (int v : values) {
    if (v < 0) throw std::invalid_argument(std::string(who) + ": parameters must be nonnegative");
  }
}

}  // namespace

std::set<Triangle> build_shamrock(int m, int a, int b, int c, std::pair<int, int> anchor) {
  check_nonnegative({m, a, b, c}, "build_shamrock");
  std::set<Triangle> out;
  const int top = a + m + std::max(b, c);
  for (int r = 0; r < top; ++r) {
    for (int k = -(m + c) - top - 1; k <= a + b + m + 1; ++k) {
      for (Orient o : {Orient::Up, Orient::Down}) {
        const Triangle t{r, k, o};
        if (in_shamrock(centroid(t), m, a, b, c)) {
          out.insert({r + anchor.second, k + anchor.first, o});
        }
      }
    }
  }
  return out;
}

Region build_q_region(const RegionParams& p) {
  if (!p.nonnegative()) throw std::invalid_argument("build_q_region: parameters must be nonnegative");
  const int S = p.a + p.b + p.c;
  const int E = p.x + p.y + S;  // south side
  const int D = p.z + p.m;      // southeast side
  const int C = p.t + S;        // northeast side
  const int F = p.t + p.m;      // southwest side
  const int H = D + C;

  std::vector<Triangle> tris;
  for (int r = 0; r < H; ++r) {
    for (int k = -F - 1; k <= E + 1; ++k) {
      for (Orient o : {Orient::Up, Orient::Down}) {
        const Triangle t{r, k, o};
        const auto [i3, j3] = centroid(t);
        if (j3 > 0 && j3 < 3 * H && i3 > -3 * F && i3 < 3 * E && i3 + j3 > 0 && i3 + j3 < 3 * (E + D)) {
          tris.push_back(t);
        }
      }
    }
  }
  Region hex(std::move(tris));
  const auto hole = build_shamrock(p.m, p.a, p.b, p.c, {p.x + p.c, 0});
  for (const auto& t : hole) {
    if (!hex.contains(t)) throw Unbalanced("build_q_region: shamrock leaves the hexagon at " + t.to_string());
  }
  Region out = hex.without(std::vector<Triangle>(hole.begin(), hole.end()));
  if (!out.balanced()) throw Unbalanced("build_q_region: region is not balanced for " + p.to_string());
  out.set_provenance(Provenance{"q_region", p, 0, 0, {}});
  out.set_frame(Frame{E, 0, p.b == 0 && p.c == 0});
  return out;
}

Region build_hexagon(int a, int b, int c) {
  check_nonnegative({a, b, c}, "build_hexagon");
  RegionParams p;
  p.z = a;
  p.x = b;
  p.t = c;
  Region out = build_q_region(p);
  out.set_provenance(Provenance{"hexagon", p, 0, 0, {}});
  return out;
}

Region build_magnet_bar(int m, int a, int x, int y, int z, int t) {
  check_nonnegative({m, a, x, y, z, t}, "build_magnet_bar");
  const RegionParams p{x, y, z, t, m, a, 0, 0};
  Region out = build_q_region(p);
  out.set_provenance(Provenance{"magnet_bar", p, 0, 0, {}});
  return out;
}

Region build_k_region(int a, int x, int y, int z, int t) {
  check_nonnegative({a, x, y, z, t}, "build_k_region");
  const RegionParams p{x, y, z, t, 0, a, 0, 0};
  Region out = build_q_region(p);
  out.set_provenance(Provenance{"k_region", p, 0, 0, {}});
  return out;
}

Region build_semihexagon_dented(int a, int b, const std::vector<int>& dents) {
  if (a < 0 || b < 0) throw BadDents("semihexagon: a and b must be nonnegative");
  if (static_cast<int>(dents.size()) != a) {
    throw BadDents("semihexagon: expected " + std::to_string(a) + " dents, got " + std::to_string(dents.size()));
  }
  for (std::size_t k = 0; k < dents.size(); ++k) {
    if (dents[k] < 1 || dents[k] > a + b) throw BadDents("semihexagon: dent out of range 1..a+b");
    if (k > 0 && dents[k] <= dents[k - 1]) throw BadDents("semihexagon: dents must be strictly increasing");
  }
  std::vector<Triangle> tris;
  for (int r = 0; r < a; ++r) {
    for (int k = 0; k + r < a + b; ++k) {
      tris.push_back(up(r, k));
      if (k + r + 1 < a + b) tris.push_back(down(r, k));
    }
  }
  std::vector<Triangle> removed;
  for (int s : dents) removed.push_back(up(0, s - 1));
  Region out = Region(std::move(tris)).without(removed);
  out.set_frame(std::nullopt);
  out.set_provenance(Provenance{"semihexagon", {}, a, b, dents});
  return out;
}

std::pair<Region, Region> split_region(const Region& region, const std::vector<Triangle>& part) {
  Region inner(part);
  for (const auto& t : inner.triangles()) {
    if (!region.contains(t)) throw std::invalid_argument("split_region: part is not contained in the region");
  }
  if (!inner.balanced()) throw NotBalanced("split_region: part is not balanced");
  Region rest = region.without(inner.triangles());
  std::optional<Orient> border;
  for (const auto& t : inner.triangles()) {
    for (const auto& n : t.neighbors()) {
      if (!rest.contains(n)) continue;
      if (border && *border != t.orient) {
        throw SeparatingViolated("split_region: both triangle orientations run along the border");
      }
      border = t.orient;
    }
  }
  inner.set_frame(region.frame());
  return {inner, rest};
}

}  // namespace qlozenge
