#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/formulas.hpp"
#include "qlozenge/lattice.hpp"
#include "qlozenge/qpoly.hpp"
#include "qlozenge/weights.hpp"

namespace qlozenge {

enum class Status : std::uint8_t { Pass, Fail, Skipped };

std::string status_name(Status s);

struct Report {
  std::string check;
  std::string params;
  Status status = Status::Skipped;
  QPoly lhs;
  QPoly rhs;
  std::optional<QPoly> witness;  // lhs - rhs on failure
  std::string detail;

  bool passed() const noexcept { return status == Status::Pass; }
};

/// Pass iff lhs == rhs; fills the witness otherwise.
Report make_report(std::string check, std::string params, QPoly lhs, QPoly rhs, std::string detail = {});
Report skipped_report(std::string check, std::string params, std::string why);

/// A builder name with its integer arguments:
///   hexagon a,b,c | q_region x,y,z,t,m,a,b,c | magnet_bar m,a,x,y,z,t |
///   k_region a,x,y,z,t | semihexagon a,b plus dents.
struct BuilderSpec {
  std::string family;
  std::vector<int> args;
  std::vector<int> dents;

  std::string to_string() const;
};

Region build_region(const BuilderSpec& spec);
/// The closed-form generating function the paper gives for this builder and weight.
/// Throws std::invalid_argument when the paper has no formula for the pair.
QPoly formula_for(const BuilderSpec& spec, Weight w);

Report check_formula_vs_enumeration(const BuilderSpec& spec, Weight w, const Budget& budget = {});

/// M(G) M(G-{u,v,w,s}) = M(G-{u,v}) M(G-{w,s}) + M(G-{u,s}) M(G-{v,w}).
Report check_kuo(const Region& region, const std::array<Triangle, 4>& marks, Weight w, const Budget& budget = {});

/// Three-term recurrence of the magnet bar formulas; w is Wt2 or Wt3.
Report check_magnet_recurrence(int m, int a, int x, int y, int z, int t, Weight w = Weight::Wt2);
/// Three-term recurrence of q^g times the Theorem 1.2 product.
Report check_q_recurrence(const RegionParams& p);
/// The two-fraction identity for the closed form together with [A] + q^A [z] = [A + z].
Report check_psi_recurrence(const RegionParams& p);
Report check_q_int_addition(int A, int z);

/// Per-tiling relation wt1 - f = wt2 - g = pile height >= 0, and the two
/// generating-function identities it implies, by full enumeration.
Report check_prop31(const RegionParams& p, const Budget& budget = {});
/// Sum over enumerated tilings of q^volume, volume from wt2 and g.
QPoly volume_series(const Region& region, const Budget& budget = {});

/// Corner marks on a Q-region whose deletions give the smaller Q-regions of the recurrence.
/// Needs y >= 1, t >= 1 and z + m >= 1.
std::array<Triangle, 4> standard_marks(const RegionParams& p);
/// Four alternating boundary triangles spread along the outer boundary walk.
std::optional<std::array<Triangle, 4>> spread_marks(const Region& region, std::size_t offset);

/// Each mark-deleted Q-region, after forced lozenges are stripped, equals the
/// smaller Q-region of the recurrence with the recorded wt2 exponent.
/// One report per deleted mark set.
std::vector<Report> check_kuo_reduction(const RegionParams& p);

struct MarkPlacement {
  std::string name;
  Region region;
  std::array<Triangle, 4> marks;
};
/// Deterministic set of valid placements across hexagons, magnet bars and Q-regions.
std::vector<MarkPlacement> mark_library();

/// Oracle and frontier engine on random sub-regions of Hex(3,3,3).
Report check_oracle_equivalence(const Region& region, Weight w, const Budget& budget = {});
std::vector<Region> random_subregions(std::size_t count, std::uint64_t seed);

struct SuiteOptions {
  int max_sum = -1;   // -1 selects the suite's own default
  int max_entry = 2;
  unsigned jobs = 1;
  std::uint64_t seed = 20240531;
  Budget budget;
};

std::vector<std::string> suite_names();
/// Runs a named suite. Reports come back in a fixed order regardless of jobs.
std::vector<Report> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qlozenge
