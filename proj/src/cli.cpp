#include "motzeta/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "motzeta/io.hpp"

namespace motzeta {

namespace {

struct Options {
  std::string verb;
  std::string input;
  bool json = false;
  bool allow_l1_poles = false;
  std::optional<long> degree;
  std::optional<std::string> ray;
  std::optional<long> prime;
  std::optional<long> m;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Loaded {
  InputKind kind;
  Json doc;
};

Loaded load(const Options& opt, std::initializer_list<InputKind> accepted) {
  Loaded l{InputKind::Sncd, read_json_file(opt.input)};
  l.kind = input_kind(l.doc);
  if (std::find(accepted.begin(), accepted.end(), l.kind) == accepted.end())
    throw ParseError(opt.input + ": wrong kind of input for " + opt.verb);
  return l;
}

SncdData load_sncd(const Options& opt, const Loaded& l) {
  SncdData d = sncd_from_json(l.doc);
  if (opt.m) d.m = *opt.m;
  return d;
}

PolePolicy policy(const Options& opt) { return opt.allow_l1_poles ? PolePolicy::Allow : PolePolicy::Reject; }

FanModel load_model(const Loaded& l) {
  if (l.kind == InputKind::Sncd) return sncd_to_fanmodel(sncd_from_json(l.doc));
  return fan_from_json(l.doc);
}

void emit_series(const Options& opt, const ZSeries& s, std::ostream& out, const Json& extra = Json::object()) {
  if (opt.json) {
    Json j = series_to_json(s);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump(2) << '\n';
  } else {
    out << s.to_string() << '\n';
  }
}

void emit_poles(const Options& opt, const PoleSet& poles, std::ostream& out) {
  if (opt.json) out << Json{{"candidate_poles", poles_to_json(poles)}}.dump(2) << '\n';
  else out << to_string(poles) << '\n';
}

void emit_class(const Options& opt, const MClass& c, std::ostream& out) {
  if (opt.json) {
    Json terms = Json::object();
    for (const auto& [s, k] : c.terms()) terms[s] = k.to_string();
    out << Json{{"class", c.to_string()}, {"terms", terms}}.dump(2) << '\n';
  } else {
    out << c.to_string() << '\n';
  }
}

ZSeries series_of(const Options& opt, const Loaded& l) {
  switch (l.kind) {
    case InputKind::Newton:
      return newton_zeta(newton_from_json(l.doc));
    case InputKind::Fan:
      return fan_poincare(fan_from_json(l.doc), opt.m.value_or(0), policy(opt));
    case InputKind::Sncd: {
      SncdData d = load_sncd(opt, l);
      const bool all_nu = std::all_of(d.components.begin(), d.components.end(),
                                      [](const SncdComponent& c) { return c.nu.has_value(); });
      return all_nu ? dl_zeta(d) : sncd_poincare(d);
    }
  }
  return ZSeries();
}

int newton_series(const Options& opt, std::ostream& out, bool local) {
  NewtonInput inp = newton_from_json(load(opt, {InputKind::Newton}).doc);
  ZSeries z = local ? newton_zeta_local(inp) : newton_zeta(inp);
  Json extra = Json::object();
  if (opt.json) {
    std::vector<FaceRecord> faces = newton_polyhedron(inp);
    if (local) std::erase_if(faces, [](const FaceRecord& f) { return !f.is_compact; });
    extra["faces"] = faces_to_json(faces);
  }
  emit_series(opt, z, out, extra);
  return 0;
}

int cmd_newton_poles(const Options& opt, std::ostream& out) {
  emit_poles(opt, newton_poles(newton_from_json(load(opt, {InputKind::Newton}).doc)), out);
  return 0;
}

int cmd_sncd_zeta(const Options& opt, std::ostream& out) {
  emit_series(opt, sncd_poincare(load_sncd(opt, load(opt, {InputKind::Sncd}))), out);
  return 0;
}

int cmd_dl_zeta(const Options& opt, std::ostream& out) {
  emit_series(opt, dl_zeta(load_sncd(opt, load(opt, {InputKind::Sncd}))), out);
  return 0;
}

int cmd_fan_series(const Options& opt, std::ostream& out) {
  FanModel f = load_model(load(opt, {InputKind::Fan, InputKind::Sncd}));
  emit_series(opt, fan_poincare(f, opt.m.value_or(0), policy(opt)), out);
  return 0;
}

int cmd_fan_poles(const Options& opt, std::ostream& out) {
  FanModel f = load_model(load(opt, {InputKind::Fan, InputKind::Sncd}));
  require_valid(f);
  emit_poles(opt, fan_poles(f), out);
  return 0;
}

int cmd_nearby(const Options& opt, std::ostream& out) {
  Loaded l = load(opt, {InputKind::Sncd, InputKind::Newton});
  ZSeries z = l.kind == InputKind::Newton ? newton_zeta(newton_from_json(l.doc)) : dl_zeta(load_sncd(opt, l));
  emit_class(opt, nearby_fibre(z), out);
  return 0;
}

int cmd_expand(const Options& opt, std::ostream& out) {
  if (!opt.degree) throw UsageError("expand requires --degree");
  if (*opt.degree < 1) throw UsageError("--degree must be at least 1");
  std::vector<MClass> coeffs = expand(series_of(opt, load(opt, {InputKind::Newton, InputKind::Fan, InputKind::Sncd})),
                                      *opt.degree);
  if (opt.json) {
    Json arr = Json::array();
    for (const MClass& c : coeffs) arr.push_back(c.to_string());
    out << Json{{"degree", *opt.degree}, {"coefficients", arr}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << "T^" << k + 1 << ": " << coeffs[k].to_string() << '\n';
  }
  return 0;
}

int cmd_subdivide(const Options& opt, std::ostream& out) {
  if (!opt.ray) throw UsageError("subdivide requires --ray");
  FanModel f = load_model(load(opt, {InputKind::Fan, InputKind::Sncd}));
  IntVec rho = parse_int_list(*opt.ray);
  if (rho.size() != f.ambient_rank()) throw DimensionError("--ray has the wrong length for this model");
  out << fan_to_json(subdivide_model(f, rho)).dump(2) << '\n';
  return 0;
}

int cmd_resolve(const Options& opt, std::ostream& out) {
  FanModel f = load_model(load(opt, {InputKind::Fan, InputKind::Sncd}));
  out << fan_to_json(resolve_model(f)).dump(2) << '\n';
  return 0;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  std::vector<std::string> diags = validate_model(load_model(load(opt, {InputKind::Fan, InputKind::Sncd})));
  if (opt.json) {
    out << Json{{"valid", diags.empty()}, {"diagnostics", diags}}.dump(2) << '\n';
  } else if (diags.empty()) {
    out << "valid\n";
  } else {
    for (const std::string& d : diags) out << d << '\n';
  }
  return diags.empty() ? 0 : 2;
}

int cmd_probe(const Options& opt, std::ostream& out) {
  if (!opt.prime) throw UsageError("probe-nondegenerate requires --prime");
  NewtonInput inp = newton_from_json(load(opt, {InputKind::Newton}).doc);
  ProbeResult r = nondegeneracy_probe(inp, *opt.prime);
  if (opt.json) {
    Json j = Json::object();
    switch (r.status) {
      case ProbeResult::Status::Pass:
        j["status"] = "pass";
        break;
      case ProbeResult::Status::Fail:
        j["status"] = "fail";
        j["face"] = faces_to_json({*r.face})[0];
        j["witness"] = r.witness;
        break;
      case ProbeResult::Status::Inconclusive:
        j["status"] = "inconclusive";
        j["reason"] = r.reason;
        break;
    }
    out << j.dump(2) << '\n';
  } else {
    out << r.to_string() << '\n';
  }
  return 0;
}

const std::map<std::string, std::function<int(const Options&, std::ostream&)>>& verbs() {
  static const std::map<std::string, std::function<int(const Options&, std::ostream&)>> table = {
      {"newton-zeta", [](const Options& o, std::ostream& out) { return newton_series(o, out, false); }},
      {"newton-zeta-local", [](const Options& o, std::ostream& out) { return newton_series(o, out, true); }},
      {"newton-poles", cmd_newton_poles},
      {"sncd-zeta", cmd_sncd_zeta},
      {"dl-zeta", cmd_dl_zeta},
      {"fan-series", cmd_fan_series},
      {"fan-poles", cmd_fan_poles},
      {"nearby", cmd_nearby},
      {"expand", cmd_expand},
      {"subdivide", cmd_subdivide},
      {"resolve", cmd_resolve},
      {"validate", cmd_validate},
      {"probe-nondegenerate", cmd_probe},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic zeta functions and Poincare series from sncd, fan and Newton data", "motzeta"};
  Options opt;
  std::vector<std::string> names;
  for (const auto& [name, fn] : verbs()) names.push_back(name);
  app.add_option("verb", opt.verb, "Pipeline to run")->required()->check(CLI::IsMember(names));
  app.add_option("input", opt.input, "Input JSON file")->required();
  app.add_flag("--json", opt.json, "Emit JSON instead of canonical text");
  app.add_flag("--allow-l1-poles", opt.allow_l1_poles, "Accept weights with poles at L = 1");
  app.add_option("--degree", opt.degree, "Highest power of T for expand");
  app.add_option("--ray", opt.ray, "Ray \"v1,v2,...\" for subdivide");
  app.add_option("--prime", opt.prime, "Prime for probe-nondegenerate");
  app.add_option("--m", opt.m, "Relative dimension m");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    return verbs().at(opt.verb)(opt, out);
  } catch (const ValidationError& e) {
    for (const std::string& d : e.diagnostics()) err << d << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << opt.input << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace motzeta
