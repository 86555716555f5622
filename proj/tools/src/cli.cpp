#include "qlozenge_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/errors.hpp"
#include "qlozenge/formulas.hpp"
#include "qlozenge/json_io.hpp"
#include "qlozenge/lattice.hpp"
#include "qlozenge/verify.hpp"
#include "qlozenge/weights.hpp"
#include "qlozenge_cli/svg.hpp"

namespace qlozenge::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string name;  // formula name or builder family
  int a = -1, b = -1, c = -1;
  std::string params;
  std::string dents;
  std::string weight = "uniform";
  bool json_out = false;
  std::string svg_file;
  int max_sum = -1;
  int max_entry = 2;
  unsigned jobs = 1;
  std::uint64_t seed = 20240531;
  std::size_t max_triangles = Budget{}.max_triangles;
  std::size_t max_states = Budget{}.max_states;
  std::size_t limit = 10;
  long tiling_index = -1;
  std::string marks;
  std::string suite;

  Budget budget() const { return {max_triangles, max_states}; }
};

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad integer '") + item + "' in " + what);
    }
  }
  return out;
}

std::vector<int> abc(const Options& o, const std::string& who) {
  if (!o.params.empty()) {
    auto v = int_list(o.params, "--params");
    if (v.size() != 3) throw UsageError(who + " takes three parameters a,b,c");
    return v;
  }
  if (o.a < 0 || o.b < 0 || o.c < 0) throw UsageError(who + " needs --a, --b and --c");
  return {o.a, o.b, o.c};
}

std::vector<int> params_of_size(const Options& o, std::size_t n, const std::string& who, const char* layout) {
  auto v = int_list(o.params, "--params");
  if (v.size() != n) throw UsageError(who + " needs --params " + layout);
  return v;
}

BuilderSpec builder_spec(const Options& o) {
  const std::string& f = o.name;
  if (f == "hexagon") return {f, abc(o, f), {}};
  if (f == "q_region") return {f, params_of_size(o, 8, f, "x,y,z,t,m,a,b,c"), {}};
  if (f == "magnet_bar") return {f, params_of_size(o, 6, f, "m,a,x,y,z,t"), {}};
  if (f == "k_region") return {f, params_of_size(o, 5, f, "a,x,y,z,t"), {}};
  if (f == "semihexagon") {
    if (o.a < 0 || o.b < 0) throw UsageError("semihexagon needs --a, --b and --dents");
    return {f, {o.a, o.b}, int_list(o.dents, "--dents")};
  }
  throw UsageError("unknown region family '" + f + "' (hexagon, q_region, magnet_bar, k_region, semihexagon)");
}

RegionParams q_params(const Options& o) {
  const auto v = params_of_size(o, 8, o.name, "x,y,z,t,m,a,b,c");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

void print_poly(std::ostream& out, const Options& o, const std::string& label, const std::string& params,
                const QPoly& poly, std::int64_t prefactor) {
  if (o.json_out) {
    json j;
    j["formula"] = label;
    j["params"] = params;
    j["poly"] = poly.to_string();
    j["at_one"] = poly.at_one().str();
    j["prefactor_exponent"] = prefactor;
    out << j.dump() << '\n';
  } else {
    out << poly.to_string() << '\n' << "at q=1: " << poly.at_one() << '\n';
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

int cmd_formula(const Options& o, std::ostream& out) {
  const std::string& n = o.name;
  auto emit = [&](const std::string& params, const FormulaResult& r) {
    print_poly(out, o, n, params, r.poly, r.prefactor_exponent);
    return kOk;
  };
  if (n == "macmahon" || n == "hex_m1" || n == "hex_m2") {
    const auto v = abc(o, n);
    const FormulaResult r = n == "macmahon" ? macmahon_q(v[0], v[1], v[2])
                            : n == "hex_m1" ? hex_m1(v[0], v[1], v[2])
                                            : hex_m2(v[0], v[1], v[2]);
    return emit(join(v), r);
  }
  if (n == "qmain") {
    const auto p = q_params(o);
    return emit(p.to_string(), theorem_qmain(p));
  }
  if (n == "main") {
    const auto p = q_params(o);
    const BigInt count = theorem_main(p);
    if (o.json_out) {
      out << json{{"formula", n}, {"params", p.to_string()}, {"at_one", count.str()}}.dump() << '\n';
    } else {
      out << count << '\n';
    }
    return kOk;
  }
  if (n == "semihex") {
    if (o.a < 0 || o.b < 0) throw UsageError("semihex needs --a, --b and --dents");
    const auto d = int_list(o.dents, "--dents");
    return emit(std::to_string(o.a) + "," + std::to_string(o.b) + ";" + join(d), semihex_dents_m2(o.a, o.b, d));
  }
  if (n == "k_region_m2") {
    const auto v = params_of_size(o, 5, n, "a,x,y,z,t");
    return emit(join(v), k_region_m2(v[0], v[1], v[2], v[3], v[4]));
  }
  if (n == "magnet_m2" || n == "magnet_m3") {
    const auto v = params_of_size(o, 6, n, "m,a,x,y,z,t");
    return emit(join(v), n == "magnet_m2" ? magnet_m2(v[0], v[1], v[2], v[3], v[4], v[5])
                                          : magnet_m3(v[0], v[1], v[2], v[3], v[4], v[5]));
  }
  // A builder family: the closed form for the chosen weight.
  const BuilderSpec spec = builder_spec(o);
  print_poly(out, o, n + "/" + weight_name(parse_weight(o.weight)), spec.to_string(),
             formula_for(spec, parse_weight(o.weight)), 0);
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const BuilderSpec spec = builder_spec(o);
  const Region region = build_region(spec);
  const BigInt n = count_tilings(region, o.budget());
  if (o.json_out) {
    out << json{{"count", n.str()},
                {"params", spec.to_string()},
                {"region_digest", region_digest(region)},
                {"triangles", region.size()}}
               .dump()
        << '\n';
  } else {
    out << n << '\n';
  }
  return kOk;
}

int cmd_genfun(const Options& o, std::ostream& out) {
  const Region region = build_region(builder_spec(o));
  const GenFunction g = gen_function(region, parse_weight(o.weight), o.budget());
  out << (o.json_out ? genfun_to_json(g) : g.poly.to_string()) << '\n';
  return kOk;
}

int cmd_tilings(const Options& o, std::ostream& out) {
  const Region region = build_region(builder_spec(o));
  const bool weighted = o.weight != "uniform";
  const Weight w = parse_weight(o.weight);
  std::size_t index = 0;
  iter_tilings(
      region,
      [&](const Tiling& t) {
        const std::string text = tiling_to_json(t);
        if (o.json_out) {
          json j{{"index", index}, {"tiling", json::parse(text)}};
          if (weighted) j["exponent"] = tiling_exponent(w, region, t);
          out << j.dump() << '\n';
        } else if (weighted) {
          out << tiling_exponent(w, region, t) << ' ' << text << '\n';
        } else {
          out << text << '\n';
        }
        ++index;
        return o.limit == 0 || index < o.limit;
      },
      o.budget());
  return kOk;
}

void print_report(std::ostream& out, const Report& r, bool as_json) {
  if (as_json) {
    out << report_to_json(r) << '\n';
    return;
  }
  out << status_name(r.status) << '\t' << r.check << '\t' << r.params;
  if (r.status == Status::Fail && r.witness) out << "\tlhs-rhs = " << r.witness->to_string();
  if (!r.detail.empty()) out << "\t" << r.detail;
  out << '\n';
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions so;
  so.max_sum = o.max_sum;
  so.max_entry = o.max_entry;
  so.jobs = std::max(1U, o.jobs);
  so.seed = o.seed;
  so.budget = o.budget();
  const auto reports = run_suite(o.suite, so);
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    print_report(out, r, o.json_out);
    switch (r.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::Skipped: ++skipped; break;
    }
  }
  err << o.suite << ": " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
  if (fail) return kFail;
  if (skipped) return kBudget;
  return kOk;
}

std::array<Triangle, 4> parse_marks(const std::string& text) {
  static const std::regex one(R"(([UD])\((-?\d+),(-?\d+)\))");
  std::vector<Triangle> found;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), one); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const int r = std::stoi(m[2].str()), k = std::stoi(m[3].str());
    found.push_back(m[1].str() == "U" ? up(r, k) : down(r, k));
  }
  if (found.size() != 4) throw UsageError("--marks needs four triangles like \"U(0,2) D(1,2) U(3,0) D(3,-2)\"");
  return {found[0], found[1], found[2], found[3]};
}

int cmd_kuo(const Options& o, std::ostream& out) {
  const BuilderSpec spec = builder_spec(o);
  const Region region = build_region(spec);
  std::array<Triangle, 4> marks{};
  if (!o.marks.empty()) {
    marks = parse_marks(o.marks);
  } else {
    const auto& prov = region.provenance();
    const RegionParams& p = prov->params;
    if (prov->is_q_family() && p.y >= 1 && p.t >= 1 && p.z + p.m >= 1) {
      marks = standard_marks(p);
    } else if (auto spread = spread_marks(region, 0)) {
      marks = *spread;
    } else {
      throw UsageError("no default mark placement for this region; pass --marks");
    }
  }
  const Report r = check_kuo(region, marks, parse_weight(o.weight), o.budget());
  print_report(out, r, o.json_out);
  return r.passed() ? kOk : kFail;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Region region = build_region(builder_spec(o));
  std::optional<Tiling> tiling;
  if (o.tiling_index >= 0) {
    const auto list = list_tilings(region, static_cast<std::size_t>(o.tiling_index) + 1, o.budget());
    if (list.size() <= static_cast<std::size_t>(o.tiling_index)) {
      throw UsageError("region has only " + std::to_string(list.size()) + " tilings");
    }
    tiling = list.back();
  }
  const std::string svg = render_svg(region, tiling);
  if (o.svg_file.empty()) {
    out << svg;
  } else {
    std::ofstream file(o.svg_file, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.svg_file);
    file << svg;
  }
  return kOk;
}

void region_flags(CLI::App* sub, Options& o) {
  sub->add_option("--a", o.a, "side a (hexagon, semihexagon, macmahon)");
  sub->add_option("--b", o.b, "side b");
  sub->add_option("--c", o.c, "side c");
  sub->add_option("--params", o.params, "comma list: q_region x,y,z,t,m,a,b,c; magnet_bar m,a,x,y,z,t; k_region a,x,y,z,t");
  sub->add_option("--dents", o.dents, "semihexagon dent positions, comma list");
  sub->add_option("--weight", o.weight, "uniform|wt0|wt1|wt2|wt3")->capture_default_str();
  sub->add_option("--max-triangles", o.max_triangles, "oracle and enumeration triangle budget")->capture_default_str();
  sub->add_option("--max-states", o.max_states, "frontier state budget")->capture_default_str();
  sub->add_flag("--json", o.json_out, "JSON output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lozenge tilings of hexagons with a shamrock removed: formulas, enumeration and checks", "qlozenge"};
  app.require_subcommand(1);

  auto* formula = app.add_subcommand("formula", "closed-form product (macmahon, qmain, main, hex_m1, hex_m2, semihex, k_region_m2, magnet_m2, magnet_m3, or a region family with --weight)");
  formula->add_option("name", o.name)->required();
  region_flags(formula, o);

  auto* count = app.add_subcommand("count", "number of tilings");
  count->add_option("family", o.name)->required();
  region_flags(count, o);

  auto* genfun = app.add_subcommand("genfun", "weighted tiling generating function");
  genfun->add_option("family", o.name)->required();
  region_flags(genfun, o);

  auto* tilings = app.add_subcommand("tilings", "list tilings as JSON");
  tilings->add_option("family", o.name)->required();
  region_flags(tilings, o);
  tilings->add_option("--limit", o.limit, "stop after this many tilings, 0 for all")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-sum", o.max_sum, "largest parameter sum (suite default when omitted)");
  verify->add_option("--max-entry", o.max_entry, "largest single parameter")->capture_default_str();
  verify->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for the random sub-regions")->capture_default_str();
  verify->add_option("--max-triangles", o.max_triangles, "triangle budget")->capture_default_str();
  verify->add_option("--max-states", o.max_states, "frontier state budget")->capture_default_str();
  verify->add_flag("--json", o.json_out, "one JSON report per line");

  auto* kuo = app.add_subcommand("kuo", "check the condensation identity for four marks");
  kuo->add_option("family", o.name)->required();
  region_flags(kuo, o);
  kuo->add_option("--marks", o.marks, "four triangles u v w s, e.g. \"U(0,2) D(1,2) U(3,0) D(3,-2)\"");

  auto* render = app.add_subcommand("render", "SVG picture of a region or one of its tilings");
  render->add_option("family", o.name)->required();
  region_flags(render, o);
  render->add_option("--tiling", o.tiling_index, "draw the tiling with this index in enumeration order");
  render->add_option("--svg", o.svg_file, "write to FILE instead of standard output");

  std::vector<std::string> owned{"qlozenge"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : owned) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*formula) return cmd_formula(o, out);
    if (*count) return cmd_count(o, out);
    if (*genfun) return cmd_genfun(o, out);
    if (*tilings) return cmd_tilings(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*kuo) return cmd_kuo(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const BadDents& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const BadMarks& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const MissingFrame& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Unbalanced& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace qlozenge::cli
