#include "qlozenge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qlozenge/errors.hpp"

namespace qlozenge {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Report make_report(std::string check, std::string params, QPoly lhs, QPoly rhs, std::string detail) {
  Report r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) r.witness = lhs - rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.detail = std::move(detail);
  return r;
}

Report skipped_report(std::string check, std::string params, std::string why) {
  Report r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.status = Status::Skipped;
  r.detail = std::move(why);
  return r;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

void expect_args(const BuilderSpec& spec, std::size_t n) {
  if (spec.args.size() != n) {
    throw std::invalid_argument(spec.family + " expects " + std::to_string(n) + " integer arguments");
  }
}

RegionParams q_params_of(const BuilderSpec& spec) {
  const auto& v = spec.args;
  if (spec.family == "hexagon") {
    expect_args(spec, 3);
    return RegionParams{v[1], 0, v[0], v[2], 0, 0, 0, 0};
  }
  if (spec.family == "q_region") {
    expect_args(spec, 8);
    return RegionParams{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }
  if (spec.family == "magnet_bar") {
    expect_args(spec, 6);
    return RegionParams{v[2], v[3], v[4], v[5], v[0], v[1], 0, 0};
  }
  if (spec.family == "k_region") {
    expect_args(spec, 5);
    return RegionParams{v[1], v[2], v[3], v[4], 0, v[0], 0, 0};
  }
  throw std::invalid_argument("no Q-region parameters for family '" + spec.family + "'");
}

QPoly constant(const BigInt& v) { return QPoly(v); }

}  // namespace

std::string BuilderSpec::to_string() const {
  std::string s = family + "(" + join(args);
  if (!dents.empty() || family == "semihexagon") s += ";" + join(dents);
  return s + ")";
}

Region build_region(const BuilderSpec& spec) {
  const auto& v = spec.args;
  if (spec.family == "hexagon") {
    expect_args(spec, 3);
    return build_hexagon(v[0], v[1], v[2]);
  }
  if (spec.family == "q_region") {
    expect_args(spec, 8);
    return build_q_region(q_params_of(spec));
  }
  if (spec.family == "magnet_bar") {
    expect_args(spec, 6);
    return build_magnet_bar(v[0], v[1], v[2], v[3], v[4], v[5]);
  }
  if (spec.family == "k_region") {
    expect_args(spec, 5);
    return build_k_region(v[0], v[1], v[2], v[3], v[4]);
  }
  if (spec.family == "semihexagon") {
    expect_args(spec, 2);
    return build_semihexagon_dented(v[0], v[1], spec.dents);
  }
  throw std::invalid_argument("unknown region family '" + spec.family + "'");
}

QPoly formula_for(const BuilderSpec& spec, Weight w) {
  if (spec.family == "semihexagon") {
    expect_args(spec, 2);
    const QPoly p = semihex_dents_m2(spec.args[0], spec.args[1], spec.dents).poly;
    if (w == Weight::Wt2) return p;
    if (w == Weight::Uniform) return constant(p.at_one());
    throw std::invalid_argument("semihexagon has a closed form for wt2 and uniform weights only");
  }
  const RegionParams p = q_params_of(spec);
  const auto& v = spec.args;
  switch (w) {
    case Weight::Uniform:
      if (spec.family == "hexagon") return constant(macmahon_q(v[0], v[1], v[2]).poly.at_one());
      if (spec.family == "magnet_bar") return constant(magnet_m2(v[0], v[1], v[2], v[3], v[4], v[5]).poly.at_one());
      if (spec.family == "k_region") return constant(k_region_m2(v[0], v[1], v[2], v[3], v[4]).poly.at_one());
      return constant(theorem_main(p));
    case Weight::Wt0:
      if (spec.family == "hexagon") return macmahon_q(v[0], v[1], v[2]).poly;
      return theorem_qmain(p).poly;
    case Weight::Wt1:
      if (spec.family == "hexagon") return hex_m1(v[0], v[1], v[2]).poly;
      return theorem_qmain(p).poly.shifted(f_exponent(p));
    case Weight::Wt2:
      if (spec.family == "hexagon") return hex_m2(v[0], v[1], v[2]).poly;
      if (spec.family == "magnet_bar") return magnet_m2(v[0], v[1], v[2], v[3], v[4], v[5]).poly;
      if (spec.family == "k_region") return k_region_m2(v[0], v[1], v[2], v[3], v[4]).poly;
      return theorem_qmain(p).poly.shifted(g_exponent(p));
    case Weight::Wt3:
      if (p.b != 0 || p.c != 0) throw std::invalid_argument("wt3 has a closed form on magnet bars only");
      return magnet_m3(p.m, p.a, p.x, p.y, p.z, p.t).poly;
  }
  throw std::invalid_argument("unknown weight");
}

Report check_formula_vs_enumeration(const BuilderSpec& spec, Weight w, const Budget& budget) {
  const std::string name = "formula_vs_enumeration/" + weight_name(w);
  const QPoly formula = formula_for(spec, w);
  const Region region = build_region(spec);
  QPoly enumerated;
  if (w == Weight::Uniform) {
    enumerated = constant(count_tilings(region, budget));
  } else {
    enumerated = gen_function(region, w, budget).poly;
  }
  return make_report(name, spec.to_string(), formula, enumerated);
}

Report check_kuo(const Region& region, const std::array<Triangle, 4>& marks, Weight w, const Budget& budget) {
  const auto parts = kuo_remove(region, marks);
  auto M = [&](const Region& r) { return gen_function(r, w, budget).poly; };
  const QPoly whole = M(region);
  QPoly lhs = whole * M(parts[0]);
  QPoly rhs = M(parts[1]) * M(parts[2]) + M(parts[3]) * M(parts[4]);
  std::string params;
  for (const auto& t : marks) params += (params.empty() ? "" : " ") + t.to_string();
  return make_report("kuo/" + weight_name(w), params, std::move(lhs), std::move(rhs),
                     "M(G) = " + whole.to_string());
}

namespace {

std::string magnet_params(int m, int a, int x, int y, int z, int t) {
  return "m=" + std::to_string(m) + ",a=" + std::to_string(a) + ",x=" + std::to_string(x) +
         ",y=" + std::to_string(y) + ",z=" + std::to_string(z) + ",t=" + std::to_string(t);
}

// theorem_qmain values recur across many recurrence checks.
const QPoly& cached_phi(const RegionParams& p) {
  static std::mutex mu;
  static std::map<RegionParams, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  QPoly v = theorem_qmain(p).poly;
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(p, std::move(v)).first->second;
}

RegionParams with(RegionParams p, int dy, int dz, int dt) {
  p.y += dy;
  p.z += dz;
  p.t += dt;
  return p;
}

}  // namespace

Report check_magnet_recurrence(int m, int a, int x, int y, int z, int t, Weight w) {
  const std::string name = "magnet_recurrence/" + weight_name(w);
  const std::string params = magnet_params(m, a, x, y, z, t);
  if (w != Weight::Wt2 && w != Weight::Wt3) throw std::invalid_argument("magnet recurrence needs wt2 or wt3");
  if (y < 1 || t < 1) return skipped_report(name, params, "needs y >= 1 and t >= 1");
  auto M = [&](int yy, int zz, int tt) -> QPoly {
    if (zz < 0) return {};  // the region with z - 1 < 0 does not exist
    return w == Weight::Wt2 ? magnet_m2(m, a, x, yy, zz, tt).poly : magnet_m3(m, a, x, yy, zz, tt).poly;
  };
  const std::int64_t factor = w == Weight::Wt2 ? z + t + m + a : m + a + x + y + z;
  QPoly lhs = M(y, z, t) * M(y - 1, z, t - 1);
  QPoly rhs = M(y - 1, z, t) * M(y, z, t - 1) + (M(y - 1, z + 1, t - 1) * M(y, z - 1, t)).shifted(factor);
  return make_report(name, params, std::move(lhs), std::move(rhs));
}

Report check_q_recurrence(const RegionParams& p) {
  const std::string name = "q_recurrence";
  if (p.y < 1 || p.t < 1) return skipped_report(name, p.to_string(), "needs y >= 1 and t >= 1");
  auto M2 = [&](int dy, int dz, int dt) -> QPoly {
    const RegionParams r = with(p, dy, dz, dt);
    if (r.z < 0) return {};
    return cached_phi(r).shifted(g_exponent(r));
  };
  const std::int64_t factor = p.z + p.t + p.m + p.a + p.b + p.c;
  QPoly lhs = M2(0, 0, 0) * M2(-1, 0, -1);
  QPoly rhs = M2(-1, 0, 0) * M2(0, 0, -1) + (M2(-1, 1, -1) * M2(0, -1, 0)).shifted(factor);
  return make_report(name, p.to_string(), std::move(lhs), std::move(rhs));
}

Report check_q_int_addition(int A, int z) {
  return make_report("q_int_addition", "A=" + std::to_string(A) + ",z=" + std::to_string(z),
                     q_int(A) + q_int(z).shifted(A), q_int(A + z));
}

Report check_psi_recurrence(const RegionParams& p) {
  const std::string name = "psi_recurrence";
  if (p.y < 1 || p.t < 1 || p.z < 1) return skipped_report(name, p.to_string(), "needs y, z, t >= 1");
  auto phi = [&](int dy, int dz, int dt) -> const QPoly& { return cached_phi(with(p, dy, dz, dt)); };
  auto g = [&](int dy, int dz, int dt) { return g_exponent(with(p, dy, dz, dt)); };

  // Dividing the recurrence for q^g * Phi by Psi(x,y,z,t) Psi(x,y-1,z,t-1)
  // leaves q-powers e1, e2 in front of the two Phi-fractions.
  const std::int64_t hh = p.z + p.t + p.m + p.a + p.b + p.c;
  const std::int64_t e1 = g(-1, 0, 0) + g(0, 0, -1) - g(0, 0, 0) - g(-1, 0, -1);
  const std::int64_t e2 = hh + g(0, -1, 0) + g(-1, 1, -1) - g(0, 0, 0) - g(-1, 0, -1);
  const std::int64_t A = p.m + p.a + p.b + p.c + p.x + p.y + p.t - 1;

  const QPoly first = phi(-1, 0, 0) * phi(0, 0, -1);
  const QPoly second = phi(0, -1, 0) * phi(-1, 1, -1);
  const QPoly base = phi(0, 0, 0) * phi(-1, 0, -1);
  const std::int64_t low = std::min<std::int64_t>({0, e1, e2});
  QPoly lhs = first.shifted(e1 - low) + second.shifted(e2 - low);
  QPoly rhs = base.shifted(-low);

  std::vector<std::string> problems;
  if (first * q_int(A + p.z) != base * q_int(A)) problems.push_back("first fraction is not [A]/[A+z]");
  if (second * q_int(A + p.z) != base * q_int(p.z)) problems.push_back("second fraction is not [z]/[A+z]");
  if (e1 != 0) problems.push_back("first q-power is " + std::to_string(e1) + ", not 0");
  if (e2 != A) problems.push_back("second q-power is " + std::to_string(e2) + ", not A=" + std::to_string(A));
  if (!check_q_int_addition(static_cast<int>(A), p.z).passed()) problems.push_back("[A] + q^A [z] != [A+z]");

  std::string detail = "A=" + std::to_string(A);
  for (const auto& s : problems) detail += "; " + s;
  Report r = make_report(name, p.to_string(), std::move(lhs), std::move(rhs), detail);
  if (!problems.empty()) r.status = Status::Fail;
  return r;
}

QPoly volume_series(const Region& region, const Budget& budget) {
  std::map<std::int64_t, BigInt> counts;
  iter_tilings(
      region,
      [&](const Tiling& t) {
        counts[tiling_volume(region, t)] += 1;
        return true;
      },
      budget);
  std::vector<QPoly::Term> terms;
  for (auto& [e, c] : counts) terms.push_back({e, std::move(c)});
  return QPoly::from_terms(std::move(terms));
}

Report check_prop31(const RegionParams& p, const Budget& budget) {
  const std::string name = "prop31";
  const Region region = build_q_region(p);
  if (region.size() > budget.max_triangles) {
    throw BudgetExceeded("prop31: region has " + std::to_string(region.size()) + " triangles");
  }
  const std::int64_t f = f_exponent(p), g = g_exponent(p);
  const Tiling empty = empty_pile_tiling(region);
  std::map<std::int64_t, BigInt> counts;
  std::string problem;
  std::size_t n = 0;
  iter_tilings(
      region,
      [&](const Tiling& t) {
        ++n;
        const std::int64_t e1 = tiling_exponent(Weight::Wt1, region, t);
        const std::int64_t e2 = tiling_exponent(Weight::Wt2, region, t);
        const std::int64_t h = pile_height(t, empty);
        if (e1 - f != h || e2 - g != h || h < 0) {
          problem = "tiling " + std::to_string(n) + ": wt1-f=" + std::to_string(e1 - f) +
                    " wt2-g=" + std::to_string(e2 - g) + " height=" + std::to_string(h);
          return false;
        }
        counts[h] += 1;
        return true;
      },
      budget);
  std::vector<QPoly::Term> terms;
  for (auto& [e, c] : counts) terms.push_back({e, std::move(c)});
  const QPoly volumes = QPoly::from_terms(std::move(terms));
  const QPoly m1 = gen_function(region, Weight::Wt1, budget).poly;
  const QPoly m2 = gen_function(region, Weight::Wt2, budget).poly;
  if (problem.empty() && m1 != volumes.shifted(f)) problem = "M1 differs from q^f times the volume series";
  Report r = make_report(name, p.to_string(), m2, volumes.shifted(g),
                         "tilings=" + std::to_string(n) + (problem.empty() ? "" : "; " + problem));
  if (!problem.empty()) r.status = Status::Fail;
  if (r.status == Status::Fail && !r.witness) r.witness = r.lhs - r.rhs;
  return r;
}

std::array<Triangle, 4> standard_marks(const RegionParams& p) {
  if (p.y < 1 || p.t < 1 || p.z + p.m < 1) {
    throw BadMarks("standard marks need y >= 1, t >= 1 and z + m >= 1");
  }
  const int S = p.a + p.b + p.c;
  const int E = p.x + p.y + S, D = p.z + p.m, C = p.t + S, F = p.t + p.m, H = D + C;
  return {up(0, E - 1), down(D - 1, E - 1), up(H - 1, E - C), down(H - 1, -F)};
}

std::optional<std::array<Triangle, 4>> spread_marks(const Region& region, std::size_t offset) {
  const BoundaryCycle* outer = nullptr;
  const auto cycles = boundary_cycles(region);
  for (const auto& c : cycles) {
    if (c.twice_area > 0 && (!outer || c.twice_area > outer->twice_area)) outer = &c;
  }
  if (!outer) return std::nullopt;
  std::vector<Triangle> seq;
  for (const auto& t : outer->edge_triangles) {
    if (seq.empty() || seq.back() != t) seq.push_back(t);
  }
  while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
  const std::size_t n = seq.size();
  if (n < 4) return std::nullopt;
  const std::size_t start = offset % n;
  std::array<Triangle, 4> out;
  out[0] = seq[start];
  std::size_t at = start;
  for (std::size_t k = 1; k < 4; ++k) {
    const Orient want = (k % 2 == 0) ? out[0].orient : (out[0].is_up() ? Orient::Down : Orient::Up);
    std::size_t pos = std::max(at + 1, start + k * n / 4);
    while (pos < start + n && seq[pos % n].orient != want) ++pos;
    if (pos >= start + n) return std::nullopt;
    out[k] = seq[pos % n];
    at = pos;
  }
  return out;
}

std::vector<Report> check_kuo_reduction(const RegionParams& p) {
  const std::string name = "kuo_reduction";
  if (p.y < 1 || p.t < 1 || p.z + p.m < 1) {
    return {skipped_report(name, p.to_string(), "needs y >= 1, t >= 1 and z + m >= 1")};
  }
  const Region G = build_q_region(p);
  const auto [u, v, w, s] = standard_marks(p);
  const std::int64_t hh = p.z + p.t + p.m + p.a + p.b + p.c;
  const std::int64_t bsum = p.x + p.y + p.m;

  struct Case {
    std::string label;
    std::vector<Triangle> marks;
    RegionParams target;
    std::int64_t exponent;
  };
  std::vector<Case> cases = {
      {"uv", {u, v}, with(p, -1, 0, 0), 0},
      {"ws", {w, s}, with(p, 0, 0, -1), (bsum - 1) * hh},
      {"us", {u, s}, with(p, -1, 1, -1), 0},
      {"uvws", {u, v, w, s}, with(p, -1, 0, -1), (bsum - 1) * hh},
  };
  if (p.z >= 1) cases.push_back({"vw", {v, w}, with(p, 0, -1, 0), bsum * hh});

  std::vector<Report> out;
  for (const auto& c : cases) {
    const std::string params = p.to_string() + " " + c.label + " -> " + c.target.to_string();
    const ForcedResult got = remove_forced(G.without(c.marks), Weight::Wt2);
    const ForcedResult want = remove_forced(build_q_region(c.target), Weight::Wt2);
    const auto [got_shape, got_shift] = got.region.normalized();
    const auto [want_shape, want_shift] = want.region.normalized();
    const bool same_shape = got_shape == want_shape && (got_shape.empty() || got_shift.first == want_shift.first);
    const std::int64_t diff = got.exponent - want.exponent;
    if (!same_shape || diff < 0) {
      Report r = skipped_report(name, params, "");
      r.status = Status::Fail;
      r.detail = same_shape ? "negative exponent difference " + std::to_string(diff)
                            : "reduced region differs from the target";
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(make_report(name, params, QPoly::monomial(diff), QPoly::monomial(c.exponent)));
  }
  return out;
}

std::vector<MarkPlacement> mark_library() {
  std::vector<MarkPlacement> out;
  auto add = [&](const std::string& name, const Region& r, const std::array<Triangle, 4>& marks) {
    try {
      (void)kuo_remove(r, marks);
      out.push_back({name, r, marks});
    } catch (const BadMarks&) {
      // invalid placements are simply not part of the library
    }
  };
  auto add_spread = [&](const std::string& name, const Region& r, std::initializer_list<std::size_t> offsets) {
    for (auto off : offsets) {
      if (auto m = spread_marks(r, off)) add(name + " spread@" + std::to_string(off), r, *m);
    }
  };
  const std::vector<RegionParams> q_params = {
      {1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0, 0, 0}, {0, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 1, 1, 0, 0, 0},
      {1, 2, 1, 1, 1, 1, 0, 0}, {2, 1, 1, 2, 0, 1, 0, 0}, {1, 1, 1, 1, 1, 0, 1, 0}, {1, 1, 1, 1, 0, 1, 1, 1},
      {0, 1, 0, 1, 1, 1, 1, 1}, {2, 2, 1, 1, 1, 0, 1, 0}, {1, 1, 1, 1, 1, 1, 0, 0}, {2, 1, 1, 1, 1, 1, 0, 0},
      {1, 2, 1, 2, 1, 0, 0, 0}, {0, 1, 1, 1, 2, 1, 0, 0},
  };
  for (const auto& p : q_params) add("Q(" + p.to_string() + ") standard", build_q_region(p), standard_marks(p));
  add_spread("Hex(1,1,1)", build_hexagon(1, 1, 1), {0});
  add_spread("Hex(2,2,2)", build_hexagon(2, 2, 2), {0, 1, 3});
  add_spread("Hex(1,2,3)", build_hexagon(1, 2, 3), {0, 2});
  add_spread("B(1,1;1,1,1,1)", build_magnet_bar(1, 1, 1, 1, 1, 1), {0, 5});
  add_spread("Q(1,1,1,1;1,1,1,1)", build_q_region({1, 1, 1, 1, 1, 1, 1, 1}), {0, 7});
  add_spread("K_1(1,1,1,1)", build_k_region(1, 1, 1, 1, 1), {0, 3});
  return out;
}

Report check_oracle_equivalence(const Region& region, Weight w, const Budget& budget) {
  const QPoly fast = gen_function(region, w, budget).poly;
  const QPoly slow = gen_function_oracle(region, w, budget).poly;
  Report r = make_report("oracle/" + weight_name(w), region_digest(region), fast, slow);
  if (fast.to_string() != slow.to_string()) r.status = Status::Fail;
  return r;
}

std::vector<Region> random_subregions(std::size_t count, std::uint64_t seed) {
  const Region hex = build_hexagon(3, 3, 3);
  const auto tilings = list_tilings(hex);
  std::mt19937_64 rng(seed);
  std::vector<Region> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k % 5 == 4) {
      // Drop one Up and one Down triangle; the result may well be untileable.
      std::vector<Triangle> ups, downs;
      for (const auto& t : hex.triangles()) (t.is_up() ? ups : downs).push_back(t);
      std::uniform_int_distribution<std::size_t> pu(0, ups.size() - 1), pd(0, downs.size() - 1);
      out.push_back(hex.without({ups[pu(rng)], downs[pd(rng)]}));
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, tilings.size() - 1);
    std::vector<Lozenge> loz = tilings[pick(rng)].lozenges;
    std::shuffle(loz.begin(), loz.end(), rng);
    std::uniform_int_distribution<std::size_t> howmany(1, loz.size() - 1);
    const std::size_t drop = howmany(rng);
    std::vector<Triangle> removed;
    for (std::size_t j = 0; j < drop; ++j) {
      removed.push_back(loz[j].up);
      removed.push_back(loz[j].down);
    }
    out.push_back(hex.without(removed));
  }
  return out;
}

namespace {

using Task = std::function<std::vector<Report>()>;

std::vector<Report> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<Report>> results(tasks.size());
  auto run_one = [&](std::size_t k) {
    try {
      results[k] = tasks[k]();
    } catch (const BudgetExceeded& e) {
      results[k] = {skipped_report("budget", std::to_string(k), e.what())};
    } catch (const std::exception& e) {
      Report r = skipped_report("error", std::to_string(k), e.what());
      r.status = Status::Fail;
      results[k] = {r};
    }
  };
  if (jobs <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) run_one(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Report> flat;
  for (auto& r : results) {
    for (auto& x : r) flat.push_back(std::move(x));
  }
  return flat;
}

// All tuples of the given length with entries in [0, max_entry] and sum <= max_sum.
std::vector<std::vector<int>> tuples(std::size_t len, int max_entry, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
    if (i == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= max_entry && sum + v <= max_sum; ++v) {
      cur[i] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

RegionParams as_params(const std::vector<int>& v) {
  return RegionParams{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

int sum_or(const SuiteOptions& opt, int fallback) { return opt.max_sum >= 0 ? opt.max_sum : fallback; }

std::vector<Task> suite_tasks(const std::string& name, const SuiteOptions& opt) {
  std::vector<Task> tasks;
  const Budget budget = opt.budget;
  auto single = [](Report r) { return std::vector<Report>{std::move(r)}; };

  if (name == "macmahon") {
    for (const auto& v : tuples(3, 3, sum_or(opt, 9))) {
      for (Weight w : {Weight::Uniform, Weight::Wt0, Weight::Wt1, Weight::Wt2, Weight::Wt3}) {
        tasks.push_back([=] { return single(check_formula_vs_enumeration({"hexagon", v, {}}, w, budget)); });
      }
    }
  } else if (name == "qmain") {
    for (const auto& v : tuples(8, opt.max_entry, sum_or(opt, 4))) {
      for (Weight w : {Weight::Uniform, Weight::Wt0, Weight::Wt1, Weight::Wt2}) {
        tasks.push_back([=] { return single(check_formula_vs_enumeration({"q_region", v, {}}, w, budget)); });
      }
    }
  } else if (name == "prop31") {
    for (const auto& v : tuples(8, opt.max_entry, sum_or(opt, 4))) {
      tasks.push_back([=] { return single(check_prop31(as_params(v), budget)); });
    }
  } else if (name == "magnet") {
    for (const auto& v : tuples(6, std::max(opt.max_entry, 3), sum_or(opt, 5))) {
      for (Weight w : {Weight::Uniform, Weight::Wt2, Weight::Wt3}) {
        tasks.push_back([=] { return single(check_formula_vs_enumeration({"magnet_bar", v, {}}, w, budget)); });
      }
      if (v[0] == 0) {
        tasks.push_back([=] {
          return single(make_report("magnet_m0_is_k_region", magnet_params(0, v[1], v[2], v[3], v[4], v[5]),
                                    magnet_m2(0, v[1], v[2], v[3], v[4], v[5]).poly,
                                    k_region_m2(v[1], v[2], v[3], v[4], v[5]).poly));
        });
      }
    }
  } else if (name == "semihex") {
    const int limit = sum_or(opt, 6);
    for (int n = 0; n <= limit; ++n) {
      for (int a = 0; a <= n; ++a) {
        const int b = n - a;
        // every a-subset of 1..n as a bitmask
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
          if (std::popcount(mask) != a) continue;
          std::vector<int> dents;
          for (int s = 0; s < n; ++s) {
            if (mask & (1U << s)) dents.push_back(s + 1);
          }
          tasks.push_back([=] {
            return single(check_formula_vs_enumeration({"semihexagon", {a, b}, dents}, Weight::Wt2, budget));
          });
        }
      }
    }
  } else if (name == "kregion") {
    for (const auto& v : tuples(5, std::max(opt.max_entry, 3), sum_or(opt, 5))) {
      tasks.push_back([=] { return single(check_formula_vs_enumeration({"k_region", v, {}}, Weight::Wt2, budget)); });
      tasks.push_back([=] {
        // After stripping forced lozenges on both sides the dented semihexagon and
        // the K-region coincide; degenerate K-regions are themselves partly forced.
        const int a = v[0], x = v[1], y = v[2], z = v[3], t = v[4];
        std::vector<int> dents;
        for (int s = 1; s <= t; ++s) dents.push_back(s);
        for (int s = t + x + 1; s <= t + x + a; ++s) dents.push_back(s);
        for (int s = t + x + a + y + 1; s <= t + x + a + y + z; ++s) dents.push_back(s);
        const BuilderSpec sh{"semihexagon", {a + z + t, x + y}, dents};
        const auto reduced = remove_forced(build_region(sh), Weight::Wt2);
        const auto k = remove_forced(build_k_region(a, x, y, z, t), Weight::Wt2);
        const std::string params = sh.to_string();
        if (reduced.region.normalized().first != k.region.normalized().first) {
          Report r = skipped_report("k_region_from_semihex", params, "forced reduction differs from the K-region");
          r.status = Status::Fail;
          return single(r);
        }
        return single(make_report("k_region_from_semihex", params, semihex_dents_m2(a + z + t, x + y, dents).poly,
                                  k_region_m2(a, x, y, z, t).poly));
      });
    }
  } else if (name == "kuo") {
    for (const auto& mp : mark_library()) {
      std::vector<Weight> weights = {Weight::Uniform, Weight::Wt2};
      if (mp.region.frame()) weights.push_back(Weight::Wt1);
      if (mp.region.frame() && mp.region.frame()->magnet_bar) weights.push_back(Weight::Wt3);
      for (Weight w : weights) {
        tasks.push_back([=] {
          Report r = check_kuo(mp.region, mp.marks, w, budget);
          r.params = mp.name + ": " + r.params;
          return single(r);
        });
      }
    }
  } else if (name == "kuo-reduction") {
    for (const auto& v : tuples(8, opt.max_entry, sum_or(opt, 16))) {
      const RegionParams p = as_params(v);
      if (p.y < 1 || p.t < 1 || p.z + p.m < 1) continue;
      tasks.push_back([=] { return check_kuo_reduction(p); });
    }
  } else if (name == "recurrence") {
    for (const auto& v : tuples(6, opt.max_entry, sum_or(opt, 12))) {
      if (v[3] < 1 || v[5] < 1) continue;
      for (Weight w : {Weight::Wt2, Weight::Wt3}) {
        tasks.push_back([=] { return single(check_magnet_recurrence(v[0], v[1], v[2], v[3], v[4], v[5], w)); });
      }
    }
    for (const auto& v : tuples(8, opt.max_entry, sum_or(opt, 16))) {
      if (v[1] < 1 || v[3] < 1) continue;
      tasks.push_back([=] { return single(check_q_recurrence(as_params(v))); });
    }
  } else if (name == "psi") {
    for (const auto& v : tuples(8, opt.max_entry, sum_or(opt, 16))) {
      if (v[1] < 1 || v[2] < 1 || v[3] < 1) continue;
      tasks.push_back([=] { return single(check_psi_recurrence(as_params(v))); });
    }
    for (int A = 0; A <= 20; ++A) {
      tasks.push_back([=] {
        std::vector<Report> out;
        for (int z = 0; z <= 20; ++z) out.push_back(check_q_int_addition(A, z));
        return out;
      });
    }
  } else if (name == "oracle") {
    const auto regions = random_subregions(200, opt.seed);
    const Weight cycle[] = {Weight::Uniform, Weight::Wt1, Weight::Wt2, Weight::Wt3};
    for (std::size_t k = 0; k < regions.size(); ++k) {
      const Region r = regions[k];
      const Weight w = cycle[k % 4];
      tasks.push_back([=] { return single(check_oracle_equivalence(r, w, budget)); });
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return tasks;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"macmahon", "qmain", "prop31", "magnet", "semihex", "kregion",
          "kuo", "kuo-reduction", "recurrence", "psi", "oracle", "all"};
}

std::vector<Report> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "all") {
    std::vector<Report> all;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, opt);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  return run_tasks(suite_tasks(name, opt), std::max(1U, opt.jobs));
}

}  // namespace qlozenge
