#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qlozenge {

// Lattice point (i, j) sits at real position (i + j/2, j*sqrt(3)/2).
// Up(r, k) has corners (k, r), (k+1, r), (k, r+1).
// Down(r, k) has corners (k+1, r), (k, r+1), (k+1, r+1).

enum class Orient : std::uint8_t { Up = 0, Down = 1 };

struct Triangle {
  int row = 0;
  int pos = 0;
  Orient orient = Orient::Up;

  auto operator<=>(const Triangle&) const = default;

  bool is_up() const noexcept { return orient == Orient::Up; }
  /// The three edge-adjacent triangles, in a fixed order.
  std::array<Triangle, 3> neighbors() const noexcept;
  std::string to_string() const;
};

inline Triangle up(int row, int pos) { return {row, pos, Orient::Up}; }
inline Triangle down(int row, int pos) { return {row, pos, Orient::Down}; }

enum class LozengeKind : std::uint8_t { Left, Right, Vertical };

char kind_letter(LozengeKind k) noexcept;

struct Lozenge {
  Triangle up;
  Triangle down;

  /// Pairs two edge-adjacent triangles of opposite orientation, in either order.
  static Lozenge make(const Triangle& a, const Triangle& b);
  LozengeKind kind() const noexcept;

  auto operator<=>(const Lozenge&) const = default;
};

struct RegionParams {
  int x = 0, y = 0, z = 0, t = 0;
  int m = 0, a = 0, b = 0, c = 0;

  bool operator==(const RegionParams&) const = default;
  auto operator<=>(const RegionParams&) const = default;

  int sum() const noexcept { return x + y + z + t + m + a + b + c; }
  bool nonnegative() const noexcept;
  /// "x,y,z,t,m,a,b,c"
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static RegionParams parse(const std::string& text);
};

/// Which builder produced a region; kept for rendering, wt0 and reporting.
struct Provenance {
  std::string family;  // hexagon, q_region, magnet_bar, k_region, semihexagon
  RegionParams params;  // Q-family parameters (unused for semihexagon)
  int semi_a = 0;
  int semi_b = 0;
  std::vector<int> dents;

  bool is_q_family() const { return family != "semihexagon"; }
};

/// Reference sides used by the distance-based weights.
struct Frame {
  int southeast = 0;       // the SE side lies on the line i = southeast
  int southwest = 0;       // the SW side lies on the line i + j = southwest
  bool magnet_bar = false; // the region is a b = c = 0 degeneration
};

class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Triangle> triangles);

  const std::vector<Triangle>& triangles() const noexcept { return tris_; }
  std::size_t size() const noexcept { return tris_.size(); }
  bool empty() const noexcept { return tris_.empty(); }
  bool contains(const Triangle& t) const;

  std::size_t up_count() const noexcept;
  std::size_t down_count() const noexcept { return tris_.size() - up_count(); }
  bool balanced() const noexcept { return 2 * up_count() == tris_.size(); }

  const std::optional<Provenance>& provenance() const noexcept { return prov_; }
  const std::optional<Frame>& frame() const noexcept { return frame_; }
  Region& set_provenance(std::optional<Provenance> p) {
    prov_ = std::move(p);
    return *this;
  }
  Region& set_frame(std::optional<Frame> f) {
    frame_ = f;
    return *this;
  }

  /// Removes the given triangles; keeps the frame, drops the provenance.
  Region without(const std::vector<Triangle>& removed) const;
  /// Shifts every triangle; drops frame and provenance.
  Region translated(int drow, int dpos) const;
  /// Triangles with at least one neighbour outside the region.
  std::vector<Triangle> boundary_triangles() const;
  /// Canonical translate with lowest row 0 and lowest pos in that row 0,
  /// together with the (row, pos) shift that was subtracted.
  std::pair<Region, std::pair<int, int>> normalized() const;

  /// Set equality of triangles; provenance and frame are ignored.
  bool operator==(const Region& other) const { return tris_ == other.tris_; }

 private:
  std::vector<Triangle> tris_;
  std::optional<Provenance> prov_;
  std::optional<Frame> frame_;
};

Region build_hexagon(int a, int b, int c);
Region build_semihexagon_dented(int a, int b, const std::vector<int>& dents);
/// Shamrock with the lower-left corner of its a-lobe at lattice point anchor.
std::set<Triangle> build_shamrock(int m, int a, int b, int c, std::pair<int, int> anchor = {0, 0});
Region build_q_region(const RegionParams& p);
Region build_magnet_bar(int m, int a, int x, int y, int z, int t);
Region build_k_region(int a, int x, int y, int z, int t);

/// Returns (part, region - part) after checking the two splitting conditions.
std::pair<Region, Region> split_region(const Region& region, const std::vector<Triangle>& part);

/// Closed directed boundary walk, interior on the left.
struct BoundaryCycle {
  std::vector<std::pair<int, int>> vertices;
  /// The region triangle to the left of each edge vertices[k] -> vertices[k+1].
  std::vector<Triangle> edge_triangles;
  /// Twice the signed area in lattice units; positive for outer boundaries.
  std::int64_t twice_area = 0;
};

std::vector<BoundaryCycle> boundary_cycles(const Region& region);

}  // namespace qlozenge
