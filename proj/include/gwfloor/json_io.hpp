#pragma once

#include <string>

#include "json.hpp"

#include "gwfloor/floor_diagrams.hpp"
#include "gwfloor/wallcross.hpp"
#include "gwfloor/witt_springer.hpp"

namespace gwfloor {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "gwfloor/1";

inline json with_schema(json body) {
  json out = {{"schema_version", kSchemaVersion}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

inline json to_json(const UnivElement& u) {
  return {{"one", u.one.value()}, {"h", u.h.value()}, {"two", u.two.value()}};
}

inline UnivElement univ_from_json(const json& j) {
  return {j.at("one").get<std::int64_t>(), j.at("h").get<std::int64_t>(), j.at("two").get<std::int64_t>()};
}

inline json to_json(const TildeElement& t) {
  json arr = json::array();
  for (const auto& [m, c] : t.terms()) arr.push_back({{"vars", mask_labels(m)}, {"coeff", to_json(c)}});
  return arr;
}

inline TildeElement tilde_from_json(const json& arr, int s) {
  TildeElement t(s);
  for (const auto& term : arr) {
    VarMask m = 0;
    for (int l : term.at("vars").get<std::vector<int>>()) {
      if (l < 1 || l > s) throw std::invalid_argument("variable label out of range");
      m |= var_bit(l);
    }
    t.add_term(m, univ_from_json(term.at("coeff")));
  }
  return t;
}

inline json to_json(const ResidualElement& r) { return {{"one", r.a ? 1 : 0}, {"eps", r.b ? 1 : 0}}; }

inline json to_json(const ResidualTilde& t) {
  json arr = json::array();
  for (const auto& [m, c] : t.terms()) arr.push_back({{"vars", mask_labels(m)}, {"coeff", to_json(c)}});
  return arr;
}

inline std::string object_id(const ObjectRef& o) {
  switch (o.kind) {
    case ObjKind::Floor: return "F" + std::to_string(o.index);
    case ObjKind::Elevator: return "E" + std::to_string(o.index);
    case ObjKind::End: return "D" + std::to_string(o.index);
  }
  return "?";
}

inline json to_json(const FloorDiagram& D) {
  json el = json::array();
  for (const auto& e : D.elevators) el.push_back({e.lo, e.hi, e.w});
  return {{"d", D.d}, {"elevators", el}, {"ends", D.ends}};
}

inline json to_json(const MarkedDiagram& M) {
  json j = to_json(M.diagram);
  json mk = json::array();
  for (const auto& o : M.marking) mk.push_back(object_id(o));
  j["marking"] = mk;
  return j;
}

inline json to_json(const TwinTreeDescriptor& d) {
  json edges = json::array();
  for (const auto& e : d.edges) edges.push_back({{"weight", e.weight}, {"label", e.label}});
  return {{"t", d.t}, {"m_circ", d.m_circ}, {"edges", edges}, {"labels", d.labels}};
}

inline json to_json(const MergedDiagram& md) {
  json j = to_json(md.marked);
  json merges = json::array();
  for (const auto& t : md.tags) {
    json m = {{"pair", t.label}, {"tag", tag_name(t.kind)}, {"objects", {object_id(t.lower), object_id(t.upper)}}};
    if (t.kind == TagKind::TypeA) m["m"] = t.m;
    if (t.kind == TagKind::Twin) m["twin"] = to_json(md.twins[static_cast<std::size_t>(t.twin)]);
    merges.push_back(m);
  }
  j["merges"] = merges;
  return j;
}

inline json to_json(const MergeConfiguration& c) { return c.positions; }

inline json to_json(const FieldValue& v, const FieldModel& model) {
  if (std::holds_alternative<RealField>(model)) return {{"rank", v.rank.value()}, {"signature", v.signature.value()}};
  if (std::holds_alternative<ClosedField>(model)) return {{"rank", v.rank.value()}};
  return {{"rank", v.rank.value()}, {"disc", v.disc}};
}

inline json to_json(const WallCrossReport& r) {
  json fz = json::array();
  for (const auto& f : r.field_zero) fz.push_back({{"model", f.model}, {"assign", f.assign}, {"ok", f.ok}});
  return {{"d", r.d},
          {"s", r.s},
          {"from", to_json(r.from)},
          {"to", to_json(r.to)},
          {"n1", r.coords.n1},
          {"n2", r.coords.n2},
          {"m", r.coords.m},
          {"delta", to_json(r.delta)},
          {"checks",
           {{"broccoli", r.broccoli},
            {"parity", r.parity},
            {"field_zero", fz},
            {"witnesses_zero", r.witnesses_zero},
            {"rank_zero", r.rank_zero},
            {"reconstruction", r.reconstruction},
            {"signature_identity", r.signature_identity}}},
          {"pass", r.passed()}};
}

inline json to_json(const ResidualReport& r) {
  json tr = json::array();
  for (const auto& t : r.transfer)
    tr.push_back({{"dissolved", t.dissolved}, {"from", to_json(t.from)}, {"to", to_json(t.to)},
                  {"n2_target_mod2", t.n2_target}, {"ok", t.ok}});
  return {{"d", r.d},          {"s", r.s},
          {"from", to_json(r.from)}, {"to", to_json(r.to)},
          {"image", to_json(r.image)}, {"top", to_json(r.top)},
          {"paths_agree", r.paths_agree}, {"base_case", r.base_case},
          {"transfer", tr},       {"closure", r.closure},
          {"pass", r.passed()}};
}

inline json to_json(const DiagonalForm& f, int s) {
  json arr = json::array();
  for (const auto& e : f.entries) {
    json bits = json::array();
    for (int l = 1; l <= s; ++l) bits.push_back((e.vars & var_bit(l)) ? 1 : 0);
    arr.push_back({e.unit, bits});
  }
  return arr;
}

}  // namespace gwfloor
