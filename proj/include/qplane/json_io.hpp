#pragma once

#include <json.hpp>

#include "qplane/search.hpp"

namespace qplane {

using nlohmann::json;

// Scalars and units travel as their canonical strings; everything else is
// plain structured JSON. Keys are emitted in sorted order, so identical
// values serialize to identical bytes.

inline json to_json(const PlaneElement& p) {
  json arr = json::array();
  for (auto& [key, c] : p.terms())
    arr.push_back({{"i", key.first}, {"j", key.second}, {"coef", c.str()}});
  return arr;
}

inline PlaneElement plane_from_json(const json& j) {
  PlaneElement p;
  for (auto& t : j)
    p.add_term(t.at("i").get<long long>(), t.at("j").get<long long>(),
               Scalar::parse(t.at("coef").get<std::string>()));
  return p;
}

inline json to_json(const LineElement& p) {
  json arr = json::array();
  for (auto& [e, c] : p.terms()) arr.push_back({{"p", e}, {"coef", c.str()}});
  return arr;
}

inline LineElement line_from_json(const json& j) {
  LineElement p;
  for (auto& t : j)
    p.add_term(t.at("p").get<long long>(), Scalar::parse(t.at("coef").get<std::string>()));
  return p;
}

inline json to_json(const PBWElement& u) {
  json arr = json::array();
  for (auto& [key, c] : u.terms())
    arr.push_back({{"i", key.f}, {"j", key.k}, {"l", key.e}, {"coef", c.str()}});
  return arr;
}

inline PBWElement pbw_from_json(const json& j) {
  PBWElement u;
  for (auto& t : j)
    u.add_term({t.at("i").get<long long>(), t.at("j").get<long long>(),
                t.at("l").get<long long>()},
               Scalar::parse(t.at("coef").get<std::string>()));
  return u;
}

inline json to_json(const Auto& a) {
  return {{"sigma", {{a.sigma.k, a.sigma.l}, {a.sigma.m, a.sigma.n}}},
          {"alpha", a.alpha.str()},
          {"beta", a.beta.str()}};
}

inline Auto auto_from_json(const json& j) {
  Auto a;
  const auto& s = j.at("sigma");
  a.sigma = {s.at(0).at(0).get<long long>(), s.at(0).at(1).get<long long>(),
             s.at(1).at(0).get<long long>(), s.at(1).at(1).get<long long>()};
  require_sl2(a.sigma);
  a.alpha = Unit::parse(j.at("alpha").get<std::string>());
  a.beta = Unit::parse(j.at("beta").get<std::string>());
  return a;
}

inline json to_json(const Action& act) {
  json params = json::object();
  for (auto& [k, v] : act.params) params[k] = v;
  return {{"k", to_json(act.k)},     {"e_x", to_json(act.e_x)}, {"e_y", to_json(act.e_y)},
          {"f_x", to_json(act.f_x)}, {"f_y", to_json(act.f_y)}, {"params", params}};
}

inline Action action_from_json(const json& j) {
  Action act;
  act.k = auto_from_json(j.at("k"));
  act.e_x = plane_from_json(j.at("e_x"));
  act.e_y = plane_from_json(j.at("e_y"));
  act.f_x = plane_from_json(j.at("f_x"));
  act.f_y = plane_from_json(j.at("f_y"));
  if (j.contains("params"))
    for (auto& [k, v] : j.at("params").items()) act.params[k] = v.get<std::string>();
  return act;
}

inline json to_json(const LineAuto& a) {
  return {{"gamma", a.gamma.str()}, {"invert", a.invert}};
}

inline LineAuto line_auto_from_json(const json& j) {
  return {Unit::parse(j.at("gamma").get<std::string>()), j.at("invert").get<bool>()};
}

inline json to_json(const LineAction& act) {
  json params = json::object();
  for (auto& [k, v] : act.params) params[k] = v;
  return {{"k", to_json(act.k)},
          {"e_z", to_json(act.e_z)},
          {"f_z", to_json(act.f_z)},
          {"params", params}};
}

inline LineAction line_action_from_json(const json& j) {
  LineAction act;
  act.k = line_auto_from_json(j.at("k"));
  act.e_z = line_from_json(j.at("e_z"));
  act.f_z = line_from_json(j.at("f_z"));
  if (j.contains("params"))
    for (auto& [k, v] : j.at("params").items()) act.params[k] = v.get<std::string>();
  return act;
}

inline json to_json(const Report& r) {
  json checks = json::array();
  for (auto& c : r.checks)
    checks.push_back({{"axiom", c.axiom},
                      {"witness", {c.i, c.j}},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"pass", c.pass}});
  return {{"pass", r.pass}, {"checks", checks}};
}

}  // namespace qplane
