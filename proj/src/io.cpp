#include "cdp/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace cdp {

namespace {
const Int kSafe = (Int(1) << 53);
}

json int_to_json(const Int& x) {
  if (x < kSafe && x > -kSafe) return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& r) { return json(to_string(r)); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coordinate array");
  Vec v;
  for (const json& x : j) v.push_back(int_from_json(x));
  return v;
}

json polytope_to_json(const LatticePolytope& p) {
  json verts = json::array();
  for (const Vec& v : p.vertices()) verts.push_back(vec_to_json(v));
  return json{{"vertices", verts}};
}

LatticePolytope polytope_from_json(const json& j) {
  std::vector<Vec> pts;
  for (const json& v : j.at("vertices")) pts.push_back(vec_from_json(v));
  return LatticePolytope::from_points(std::move(pts));
}

json cdp_to_json(const CDP& c) {
  json fns = json::array();
  for (const PLFunction& f : c.functions()) {
    json pts = json::array();
    for (const Vec& p : f.support_points()) pts.push_back(vec_to_json(p));
    fns.push_back(json{{"support_points", pts}});
  }
  json out{{"base", polytope_to_json(c.base())}, {"functions", fns}};
  if (c.certificate) out["certificate"] = certificate_to_json(*c.certificate);
  return out;
}

CDP cdp_from_json(const json& j) {
  auto base = std::make_shared<const LatticePolytope>(polytope_from_json(j.at("base")));
  std::vector<PLFunction> fns;
  for (const json& f : j.at("functions")) {
    std::vector<Vec> pts;
    for (const json& p : f.at("support_points")) pts.push_back(vec_from_json(p));
    fns.emplace_back(base, std::move(pts));
  }
  CDP c(base, std::move(fns));
  if (j.contains("certificate")) c.certificate = certificate_from_json(j.at("certificate"));
  return c;
}

json certificate_to_json(const FanoCertificate& c) {
  json a = json::array();
  for (const Int& x : c.a) a.push_back(int_to_json(x));
  return json{{"origin", vec_to_json(c.origin)}, {"a", a}};
}

FanoCertificate certificate_from_json(const json& j) {
  FanoCertificate c;
  c.origin = vec_from_json(j.at("origin"));
  for (const json& x : j.at("a")) c.a.push_back(int_from_json(x));
  return c;
}

json move_to_json(const Move& m) {
  if (std::holds_alternative<AddZero>(m)) return json{{"kind", "add_zero"}};
  if (std::holds_alternative<RemoveZero>(m)) return json{{"kind", "remove_zero"}};
  if (const auto* p = std::get_if<Permute>(&m)) {
    json perm = json::array();
    for (size_t i : p->perm) perm.push_back(i);
    return json{{"kind", "permute"}, {"sigma", perm}};
  }
  if (const auto* t = std::get_if<TransformBase>(&m)) {
    json rows = json::array();
    for (const Vec& r : t->map.matrix) rows.push_back(vec_to_json(r));
    return json{{"kind", "transform_base"},
                {"matrix", rows},
                {"translation", vec_to_json(t->map.translation)}};
  }
  if (const auto* t = std::get_if<Translate>(&m)) {
    json a = json::array();
    for (const Int& x : t->alpha) a.push_back(int_to_json(x));
    return json{{"kind", "translate"}, {"alpha", a}};
  }
  const auto& s = std::get<Shear>(m);
  json b = json::array();
  for (const Int& x : s.beta) b.push_back(int_to_json(x));
  return json{{"kind", "shear"}, {"v", vec_to_json(s.v)}, {"beta", b}};
}

Move move_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "add_zero") return AddZero{};
  if (kind == "remove_zero") return RemoveZero{};
  if (kind == "permute") {
    Permute p;
    for (const json& x : j.at("sigma")) p.perm.push_back(x.get<size_t>());
    return p;
  }
  if (kind == "transform_base") {
    std::vector<Vec> rows;
    for (const json& r : j.at("matrix")) rows.push_back(vec_from_json(r));
    return TransformBase{UnimodularAffineMap(rows, vec_from_json(j.at("translation")))};
  }
  if (kind == "translate") {
    Translate t;
    for (const json& x : j.at("alpha")) t.alpha.push_back(int_from_json(x));
    return t;
  }
  if (kind == "shear") {
    Shear s;
    s.v = vec_from_json(j.at("v"));
    for (const json& x : j.at("beta")) s.beta.push_back(int_from_json(x));
    return s;
  }
  throw std::invalid_argument("unknown move kind: " + kind);
}

json classification_to_json(const ClassificationResult& r) {
  json classes = json::array();
  for (const EnumeratedClass& ec : r.classes) {
    classes.push_back(json{{"code", ec.code.bytes},
                           {"cdp", cdp_to_json(ec.cdp)},
                           {"certificate", certificate_to_json(ec.cert)}});
  }
  json breakdown = json::object();
  for (const auto& [cell, count] : r.breakdown)
    breakdown[std::to_string(cell.first) + "," + std::to_string(cell.second)] = count;
  return json{{"classes", classes}, {"breakdown", breakdown}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);  // nlohmann reports line/column in parse_error
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace cdp
