#include "motzeta/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace motzeta {

namespace {

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

Int int_of(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(where + ": expected an integer");
}

long long_of(const Json& v, const std::string& where) {
  Int x = int_of(v, where);
  if (!x.fits_slong_p()) throw ParseError(where + ": integer out of range");
  return x.get_si();
}

IntVec vec_of(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of integers");
  IntVec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_of(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<IntVec> vecs_of(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of integer arrays");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(vec_of(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string string_of(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

Rat rat_of(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(int_of(v, where));
  if (v.is_string()) {
    Rat q;
    try {
      q = Rat(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError(where + ": malformed rational \"" + v.get<std::string>() + "\"");
    }
    if (q.get_den() == 0) throw ParseError(where + ": zero denominator");
    q.canonicalize();
    return q;
  }
  throw ParseError(where + ": expected a rational \"p/q\"");
}

MCoeff coeff_of(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return MCoeff(int_of(v, where));
  return parse_coeff(string_of(v, where));
}

Json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json vec_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_json(x));
  return out;
}

Json vecs_json(const std::vector<IntVec>& vs) {
  Json out = Json::array();
  for (const IntVec& v : vs) out.push_back(vec_json(v));
  return out;
}

Json rat_json(const Rat& q) { return q.get_str(); }

Json class_json(const MClass& c) {
  Json out = Json::object();
  for (const auto& [s, k] : c.terms()) out[s] = k.to_string();
  return out;
}

IntVec parse_point_key(const std::string& key, const std::string& where) {
  std::string body = key;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  try {
    return parse_int_list(body);
  } catch (const ParseError&) {
    throw ParseError(where + ": malformed point key \"" + key + "\"");
  }
}

// One vector per maximal cell in maximal_cells() order, from a list given
// globally, per listed maximal cell, or per listed cell.
std::vector<IntVec> functionals(const std::vector<IntVec>& given, const std::vector<std::size_t>& listed,
                                const ConeComplex& K, const char* name) {
  if (given.size() == 1) return given;
  const std::vector<std::size_t> maximal = K.maximal_cells();
  const std::set<std::size_t> maximal_set(maximal.begin(), maximal.end());
  std::map<std::size_t, IntVec> by_cell;
  if (given.size() == listed.size()) {
    for (std::size_t i = 0; i < listed.size(); ++i) by_cell[listed[i]] = given[i];
  } else {
    std::size_t j = 0;
    for (std::size_t idx : listed)
      if (maximal_set.count(idx) && !by_cell.count(idx)) {
        if (j >= given.size()) break;
        by_cell[idx] = given[j++];
      }
    if (j != given.size() || by_cell.size() != maximal.size())
      throw ParseError(std::string("fan: \"") + name + "\" must hold one vector, one per maximal cell, or one per cell");
  }
  std::vector<IntVec> out;
  for (std::size_t idx : maximal) out.push_back(by_cell.at(idx));
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

InputKind input_kind(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input: expected a JSON object");
  if (doc.contains("support")) return InputKind::Newton;
  if (doc.contains("components")) return InputKind::Sncd;
  if (doc.contains("cells")) return InputKind::Fan;
  throw ParseError("input: not an sncd, fan or Newton document");
}

SncdData sncd_from_json(const Json& doc) {
  SncdData d;
  d.m = long_of(field(doc, "m", "sncd"), "sncd.m");
  const Json& comps = field(doc, "components", "sncd");
  if (!comps.is_array()) throw ParseError("sncd.components: expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "sncd.components[" + std::to_string(i) + "]";
    SncdComponent c;
    c.id = string_of(field(comps[i], "id", where), where + ".id");
    c.N = long_of(field(comps[i], "N", where), where + ".N");
    if (comps[i].contains("mu") && !comps[i]["mu"].is_null()) c.mu = long_of(comps[i]["mu"], where + ".mu");
    if (comps[i].contains("nu") && !comps[i]["nu"].is_null()) c.nu = long_of(comps[i]["nu"], where + ".nu");
    d.components.push_back(c);
  }
  const Json& strata = field(doc, "strata", "sncd");
  if (!strata.is_array()) throw ParseError("sncd.strata: expected an array");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string where = "sncd.strata[" + std::to_string(i) + "]";
    SncdStratum s;
    const Json& J = field(strata[i], "J", where);
    if (!J.is_array()) throw ParseError(where + ".J: expected an array of ids");
    for (const Json& id : J) s.J.push_back(string_of(id, where + ".J"));
    s.symbol = string_of(field(strata[i], "symbol", where), where + ".symbol");
    d.strata.push_back(s);
  }
  return d;
}

FanModel fan_from_json(const Json& doc) {
  const long rank = long_of(field(doc, "rank", "fan"), "fan.rank");
  if (rank < 0) throw ParseError("fan.rank: must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(rank);
  const Json& cells = field(doc, "cells", "fan");
  if (!cells.is_array() || cells.empty()) throw ParseError("fan.cells: expected a nonempty array");
  std::vector<Cone> cones;
  std::map<Cone, MClass> weights;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "fan.cells[" + std::to_string(i) + "]";
    std::vector<IntVec> rays = vecs_of(field(cells[i], "rays", where), where + ".rays");
    for (const IntVec& r : rays)
      if (r.size() != n) throw ParseError(where + ".rays: ray " + to_string(r) + " does not have length rank");
    Cone c = rays.empty() ? Cone(n) : cone_from_rays(n, rays);
    if (weights.count(c)) throw ParseError(where + ": cell listed twice");
    MClass w;
    if (cells[i].contains("weight")) {
      const Json& wj = cells[i]["weight"];
      if (!wj.is_object()) throw ParseError(where + ".weight: expected an object");
      for (const auto& [sym, coeff] : wj.items()) w += MClass::symbol(sym, coeff_of(coeff, where + ".weight." + sym));
    }
    weights[c] = w;
    cones.push_back(c);
  }
  ConeComplex K = ConeComplex::from_cones(n, cones);
  std::vector<std::size_t> listed;
  for (const Cone& c : cones) listed.push_back(K.find(c));
  std::vector<IntVec> e = functionals(vecs_of(field(doc, "e", "fan"), "fan.e"), listed, K, "e");
  std::vector<IntVec> a = functionals(vecs_of(field(doc, "a", "fan"), "fan.a"), listed, K, "a");
  for (const IntVec& v : e)
    if (v.size() != n) throw ParseError("fan.e: vector " + to_string(v) + " does not have length rank");
  for (const IntVec& v : a)
    if (v.size() != n) throw ParseError("fan.a: vector " + to_string(v) + " does not have length rank");
  return make_fan_model(K, weights, e, a);
}

NewtonInput newton_from_json(const Json& doc) {
  NewtonInput inp;
  const long n = long_of(field(doc, "n", "newton"), "newton.n");
  if (n <= 0) throw ParseError("newton.n: must be positive");
  inp.n = static_cast<std::size_t>(n);
  inp.support = vecs_of(field(doc, "support", "newton"), "newton.support");
  if (doc.contains("coeffs") && !doc["coeffs"].is_null()) {
    const Json& cj = doc["coeffs"];
    if (!cj.is_object()) throw ParseError("newton.coeffs: expected an object");
    for (const auto& [key, value] : cj.items()) {
      IntVec w = parse_point_key(key, "newton.coeffs");
      if (inp.coeffs.count(w)) throw ParseError("newton.coeffs: point " + to_string(w) + " given twice");
      inp.coeffs[w] = rat_of(value, "newton.coeffs." + key);
    }
  }
  validate_input(inp);
  return inp;
}

Json fan_to_json(const FanModel& f) {
  const ConeComplex& K = f.complex;
  const std::vector<std::size_t> maximal = K.maximal_cells();
  const std::set<std::size_t> maximal_set(maximal.begin(), maximal.end());
  Json cells = Json::array();
  Json e = Json::array(), a = Json::array();
  for (std::size_t i = 0; i < K.cells().size(); ++i) {
    const bool is_max = maximal_set.count(i) > 0;
    if (!is_max && f.weight[i].is_zero()) continue;
    Json cell = Json::object();
    cell["rays"] = vecs_json(K.cells()[i].rays());
    cell["weight"] = class_json(f.weight[i]);
    cells.push_back(cell);
    if (is_max) {
      e.push_back(vec_json(f.e_on(i)));
      a.push_back(vec_json(f.a_on(i)));
    }
  }
  Json out = Json::object();
  out["rank"] = K.ambient_rank();
  out["cells"] = cells;
  out["e"] = e;
  out["a"] = a;
  return out;
}

Json series_to_json(const ZSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json denoms = Json::array();
    for (const Denom& d : k.denoms) denoms.push_back(Json{{"a", d.a}, {"b", d.b}});
    terms.push_back(Json{{"coefficient", c.to_string()}, {"beta", k.beta}, {"denominators", denoms}});
  }
  Json out = Json::object();
  out["series"] = s.to_string();
  out["terms"] = terms;
  out["candidate_poles"] = poles_to_json(candidate_poles(s));
  return out;
}

Json poles_to_json(const PoleSet& poles) {
  Json out = Json::array();
  for (const Rat& q : poles) out.push_back(rat_json(q));
  return out;
}

Json faces_to_json(const std::vector<FaceRecord>& faces) {
  Json out = Json::array();
  for (const FaceRecord& f : faces) {
    Json rec = Json::object();
    rec["face_id"] = f.face_id;
    rec["argmin_support"] = vecs_json(f.argmin_support);
    rec["normal_cone_rays"] = vecs_json(f.normal_cone_closure.rays());
    rec["dim_face"] = f.dim_face;
    rec["is_compact"] = f.is_compact;
    rec["m_witness"] = vec_json(f.m_witness);
    out.push_back(rec);
  }
  return out;
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("integer list \"" + text + "\": empty entry");
    item = item.substr(b, e - b + 1);
    if (item.front() == '+') item = item.substr(1);
    try {
      out.push_back(Int(item));
    } catch (const std::invalid_argument&) {
      throw ParseError("integer list \"" + text + "\": malformed entry \"" + item + "\"");
    }
  }
  if (out.empty()) throw ParseError("integer list is empty");
  return out;
}

}  // namespace motzeta
