#include "qlozenge/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qlozenge {

using nlohmann::json;

namespace {

json triangle_json(const Triangle& t) { return json::array({t.row, t.pos, t.is_up() ? "U" : "D"}); }

Triangle triangle_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("triangle must be [row, pos, \"U\"|\"D\"]");
  const std::string o = j.at(2).get<std::string>();
  if (o != "U" && o != "D") throw std::invalid_argument("triangle orientation must be \"U\" or \"D\"");
  return {j.at(0).get<int>(), j.at(1).get<int>(), o == "U" ? Orient::Up : Orient::Down};
}

json params_json(const std::optional<Provenance>& prov) {
  if (!prov) return nullptr;
  json j;
  j["family"] = prov->family;
  if (prov->family == "semihexagon") {
    j["a"] = prov->semi_a;
    j["b"] = prov->semi_b;
    j["dents"] = prov->dents;
    return j;
  }
  const auto& p = prov->params;
  j["x"] = p.x;
  j["y"] = p.y;
  j["z"] = p.z;
  j["t"] = p.t;
  j["m"] = p.m;
  j["a"] = p.a;
  j["b"] = p.b;
  j["c"] = p.c;
  return j;
}

json poly_or_null(const std::optional<QPoly>& p) {
  if (!p) return nullptr;
  return p->to_string();
}

}  // namespace

std::string region_to_json(const Region& region) {
  json tris = json::array();
  for (const auto& t : region.triangles()) tris.push_back(triangle_json(t));
  json j;
  j["triangles"] = std::move(tris);
  j["params"] = params_json(region.provenance());
  return j.dump();
}

Region region_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<Triangle> tris;
  for (const auto& t : j.at("triangles")) tris.push_back(triangle_from(t));
  Region region(std::move(tris));
  if (j.contains("params") && !j.at("params").is_null()) {
    const json& p = j.at("params");
    Provenance prov;
    prov.family = p.at("family").get<std::string>();
    if (prov.family == "semihexagon") {
      prov.semi_a = p.at("a").get<int>();
      prov.semi_b = p.at("b").get<int>();
      prov.dents = p.at("dents").get<std::vector<int>>();
    } else {
      RegionParams& q = prov.params;
      q.x = p.at("x").get<int>();
      q.y = p.at("y").get<int>();
      q.z = p.at("z").get<int>();
      q.t = p.at("t").get<int>();
      q.m = p.at("m").get<int>();
      q.a = p.at("a").get<int>();
      q.b = p.at("b").get<int>();
      q.c = p.at("c").get<int>();
      region.set_frame(Frame{q.x + q.y + q.a + q.b + q.c, 0, q.b == 0 && q.c == 0});
    }
    region.set_provenance(std::move(prov));
  }
  return region;
}

std::string tiling_to_json(const Tiling& tiling) {
  json j = json::array();
  for (const auto& l : tiling.lozenges) {
    j.push_back(json::array({triangle_json(l.up), triangle_json(l.down), std::string(1, kind_letter(l.kind()))}));
  }
  return j.dump();
}

Tiling tiling_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<Lozenge> loz;
  for (const auto& item : j) {
    const Lozenge l = Lozenge::make(triangle_from(item.at(0)), triangle_from(item.at(1)));
    if (item.size() > 2 && item.at(2).get<std::string>() != std::string(1, kind_letter(l.kind()))) {
      throw std::invalid_argument("lozenge orientation letter does not match its triangles");
    }
    loz.push_back(l);
  }
  return make_tiling(std::move(loz));
}

std::string report_to_json(const Report& r) {
  json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["witness"] = poly_or_null(r.witness);
  j["detail"] = r.detail;
  return j.dump();
}

Report report_from_json(const std::string& text) {
  const json j = json::parse(text);
  Report r;
  r.check = j.at("check").get<std::string>();
  r.params = j.at("params").get<std::string>();
  const std::string s = j.at("status").get<std::string>();
  if (s == "pass") {
    r.status = Status::Pass;
  } else if (s == "fail") {
    r.status = Status::Fail;
  } else if (s == "skipped") {
    r.status = Status::Skipped;
  } else {
    throw std::invalid_argument("unknown report status '" + s + "'");
  }
  r.lhs = QPoly::parse(j.at("lhs").get<std::string>());
  r.rhs = QPoly::parse(j.at("rhs").get<std::string>());
  if (!j.at("witness").is_null()) r.witness = QPoly::parse(j.at("witness").get<std::string>());
  r.detail = j.at("detail").get<std::string>();
  return r;
}

std::string genfun_to_json(const GenFunction& g) {
  json j;
  j["weight"] = weight_name(g.assignment);
  j["poly"] = g.poly.to_string();
  j["at_one"] = g.poly.at_one().str();
  j["region_digest"] = g.region_digest;
  return j.dump();
}

}  // namespace qlozenge
