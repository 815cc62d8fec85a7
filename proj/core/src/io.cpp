#include "mixcut/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mixcut/errors.hpp"

namespace mixcut {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

// Numbers may come as "a/b" strings or plain JSON integers.
Rational rational_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError("expected a rational as string or integer");
}

std::vector<Rational> rationals_of(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_of(x));
  return out;
}

std::vector<std::vector<Rational>> matrix_of(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rows");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : j) out.push_back(rationals_of(row));
  return out;
}

std::vector<int> ints_of(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ValidationError("expected an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

int int_of(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ValidationError(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j[key];
}

json strings(const std::vector<Rational>& v) { return to_strings(v); }

// Type mismatches inside nlohmann surface as ValidationError too.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed input: ") + e.what());
  }
}

MixingInstance instance_of(const json& j) {
  const int m = int_of(j, "m");
  std::optional<std::vector<Rational>> pi;
  if (j.contains("pi") && !j["pi"].is_null()) pi = rationals_of(j["pi"]);
  return build_instance(m, rationals_of(field(j, "h")), std::move(pi),
                        rational_of(field(j, "epsilon")));
}

json cut_json(const LinearCut& c) {
  return {{"z", to_string(c.z_coef)}, {"x", strings(c.x)}, {"rhs", to_string(c.rhs)}};
}

std::vector<TermIndex> terms_of(const json& j) {
  std::vector<TermIndex> out;
  for (const auto& t : j) {
    const auto v = ints_of(t);
    if (v.size() != 2) throw ValidationError("a term index is a pair [i, j]");
    out.push_back({v[0], v[1]});
  }
  return out;
}

// "none", "all", or a list of [i, j] pairs.
void policy_of(const json& j, const char* key, Policy& policy,
               std::vector<TermIndex>& terms) {
  if (!j.contains(key)) return;
  const auto& v = j[key];
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "none") policy = Policy::None;
    else if (s == "all") policy = Policy::All;
    else throw ValidationError(std::string("unknown policy for '") + key + "'");
    return;
  }
  if (!v.is_array()) throw ValidationError(std::string("bad policy for '") + key + "'");
  policy = Policy::Listed;
  terms = terms_of(v);
}

std::vector<std::vector<Weighted>> weighted_sets(const json& j) {
  std::vector<std::vector<Weighted>> out;
  if (!j.is_array()) throw ValidationError("weight sets must be arrays");
  for (const auto& set : j) {
    std::vector<Weighted> ws;
    for (const auto& w : set) {
      ws.push_back({int_of(w, "index"), rational_of(field(w, "weight"))});
    }
    out.push_back(std::move(ws));
  }
  return out;
}

}  // namespace

MixingInstance instance_from_json(const std::string& text) {
  return guarded([&] { return instance_of(parse(text)); });
}

std::string instance_to_json(const MixingInstance& inst) {
  json j = {{"m", inst.m()},
            {"h", strings(inst.h())},
            {"pi", strings(inst.pi())},
            {"epsilon", to_string(inst.epsilon())}};
  return j.dump(2) + "\n";
}

LinearCut cut_from_json(const std::string& text) {
  return guarded([&] {
    const json j = parse(text);
    LinearCut c;
    c.z_coef = rational_of(field(j, "z"));
    c.x = rationals_of(field(j, "x"));
    c.rhs = rational_of(field(j, "rhs"));
    return c;
  });
}

std::string cut_to_json(const LinearCut& cut) { return cut_json(cut).dump(2) + "\n"; }

std::string facet_set_to_json(const FacetSet& fs) {
  json verts = json::array();
  for (const auto& v : fs.vertices) verts.push_back({{"z", to_string(v.z)}, {"x", v.x}});
  json facets = json::array();
  for (const auto& f : fs.facets) facets.push_back(cut_json(f));
  json j = {{"vertices", verts},
            {"facets", facets},
            {"vertical_count", fs.vertical.size()}};
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const Certificate& cert) {
  json params = {{"r", cert.r},
                 {"t_set", cert.t_set},
                 {"delta", strings(cert.delta)},
                 {"q_list", cert.q_list},
                 {"phi", strings(cert.phi)},
                 {"s_list", cert.s_list}};
  json j = {{"family", family_name(cert.family)},
            {"params", params},
            {"beta", strings(cert.beta)},
            {"A_sets", cert.A_sets}};
  return j.dump(2) + "\n";
}

static GenerateRequest generate_request_from_json_unguarded(const std::string& text, Family family) {
  const json j = parse(text);
  GenerateRequest req{instance_of(field(j, "instance")), Certificate{}};
  Certificate& c = req.params;
  c.family = family;
  // Parameters may sit at the top level or under "params".
  const json& p = j.contains("params") ? j["params"] : j;
  if (p.contains("r")) c.r = int_of(p, "r");
  if (p.contains("t_set")) c.t_set = ints_of(p["t_set"]);
  if (p.contains("delta")) c.delta = rationals_of(p["delta"]);
  if (p.contains("q_list")) c.q_list = ints_of(p["q_list"]);
  if (p.contains("phi")) c.phi = rationals_of(p["phi"]);
  if (p.contains("s_list")) c.s_list = ints_of(p["s_list"]);
  const json& top = j;
  if (top.contains("A_sets")) {
    for (const auto& a : top["A_sets"]) c.A_sets.push_back(ints_of(a));
  } else if (p.contains("A_sets")) {
    for (const auto& a : p["A_sets"]) c.A_sets.push_back(ints_of(a));
  }
  if (top.contains("beta")) c.beta = rationals_of(top["beta"]);
  else if (p.contains("beta")) c.beta = rationals_of(p["beta"]);
  return req;
}

static BilinearInput bilinear_set_from_json_unguarded(const std::string& text) {
  const json j = parse(text);
  BilinearInput in;
  if (j.contains("instance")) {
    in.instance = instance_of(j["instance"]);
    in.set = build_sc(*in.instance);
    return in;
  }
  BilinearSet& S = in.set;
  S.n = int_of(j, "n");
  S.m = int_of(j, "m");
  for (const auto& c : field(j, "constraints")) {
    BilinearConstraint C;
    C.A = matrix_of(field(c, "A"));
    C.b = rationals_of(field(c, "b"));
    C.c = rationals_of(field(c, "c"));
    C.d = rational_of(field(c, "d"));
    C.label = c.value("label", std::string());
    S.constraints.push_back(std::move(C));
  }
  if (j.contains("E")) S.E = matrix_of(j["E"]);
  if (j.contains("f")) S.f = rationals_of(j["f"]);
  if (j.contains("upper_bound_row")) S.upper_bound_row = ints_of(j["upper_bound_row"]);
  if (j.contains("complementarity")) S.complementarity = terms_of(j["complementarity"]);
  if (j.contains("complement_complementarity")) {
    S.complement_complementarity = terms_of(j["complement_complementarity"]);
  }
  return in;
}

static BlpAssignment assignment_from_json_unguarded(const std::string& text, const BilinearSet& S) {
  const json j = parse(text);
  BlpAssignment a;
  a.base_k = int_of(j, "base_k");
  a.base_j = int_of(j, "base_j");
  a.K_sets = j.contains("K_sets") ? weighted_sets(j["K_sets"])
                                  : std::vector<std::vector<Weighted>>(S.m + 1);
  a.T_sets = j.contains("T_sets") ? weighted_sets(j["T_sets"])
                                  : std::vector<std::vector<Weighted>>(S.m + 1);
  policy_of(j, "r0_up", a.r0_up, a.r0_up_terms);
  policy_of(j, "r0_down", a.r0_down, a.r0_down_terms);
  policy_of(j, "cc_option_i", a.cc_option_i, a.cc_option_i_terms);
  policy_of(j, "cc_option_ii", a.cc_option_ii, a.cc_option_ii_terms);
  if (j.contains("eliminate_complementarity")) {
    a.eliminate_complementarity = j["eliminate_complementarity"].get<bool>();
  }
  return a;
}

GenerateRequest generate_request_from_json(const std::string& text, Family family) {
  return guarded([&] { return generate_request_from_json_unguarded(text, family); });
}

BilinearInput bilinear_set_from_json(const std::string& text) {
  return guarded([&] { return bilinear_set_from_json_unguarded(text); });
}

BlpAssignment assignment_from_json(const std::string& text, const BilinearSet& S) {
  return guarded([&] { return assignment_from_json_unguarded(text, S); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

}  // namespace mixcut
