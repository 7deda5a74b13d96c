#pragma once

#include <string>
#include <vector>

#include "ramkit/adversarial/avoidance.hpp"
#include "ramkit/adversarial/bad_set.hpp"
#include "ramkit/adversarial/measure_build.hpp"
#include "ramkit/adversarial/priority.hpp"
#include "ramkit/core/tree_io.hpp"

namespace ramkit {

// Schedules: {"e": 0, "events": [[s, x, y], ...]}.
inline Json schedule_to_json(const AdversarySchedule& a) {
  Json ev = Json::array();
  for (const ScheduleEvent& e : a.events) ev.push_back(Json::array({e.s, e.x, e.y}));
  return Json{{"e", a.e}, {"events", ev}};
}

inline AdversarySchedule schedule_from_json(const Json& j) {
  try {
    AdversarySchedule a;
    a.e = j.at("e").get<std::size_t>();
    for (const auto& ev : j.at("events")) {
      if (!ev.is_array() || ev.size() != 3) throw InputError("schedule event must be [s, x, y]");
      a.events.push_back({ev.at(0).get<std::size_t>(), ev.at(1).get<Vertex>(), ev.at(2).get<Vertex>()});
    }
    validate_schedule(a);
    return a;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed schedule: ") + e.what());
  }
}

// Oracle tables: {"e": 0, "s_max": 4, "table": [["01", [3, 5]], ...]}.
inline Json oracle_to_json(const OracleAdversary& a) {
  Json t = Json::array();
  for (const auto& [p, vs] : a.table) t.push_back(Json::array({word_to_string(p, 2), std::vector<Vertex>(vs.begin(), vs.end())}));
  return Json{{"e", a.e}, {"s_max", a.s_max}, {"table", t}};
}

inline OracleAdversary oracle_from_json(const Json& j) {
  try {
    OracleAdversary a;
    a.e = j.at("e").get<std::size_t>();
    a.s_max = j.at("s_max").get<std::size_t>();
    for (const auto& row : j.at("table")) {
      if (!row.is_array() || row.size() != 2) throw InputError("oracle row must be [prefix, [vertices]]");
      Word p = word_from_string(row.at(0).get<std::string>(), 2);
      if (a.table.count(p)) throw InputError("oracle table lists a prefix twice");
      auto vs = row.at(1).get<std::vector<Vertex>>();
      a.table[p] = {vs.begin(), vs.end()};
    }
    validate_oracle(a);
    return a;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed oracle table: ") + e.what());
  }
}

// A family document: {"kind": ..., "stages": N, "adversaries": [...]}.
inline Json schedule_family_to_json(const std::vector<AdversarySchedule>& as, std::size_t stages) {
  Json arr = Json::array();
  for (const auto& a : as) arr.push_back(schedule_to_json(a));
  return Json{{"kind", "schedules"}, {"stages", stages}, {"adversaries", arr}};
}

inline Json oracle_family_to_json(const std::vector<OracleAdversary>& as, std::size_t stages) {
  Json arr = Json::array();
  for (const auto& a : as) arr.push_back(oracle_to_json(a));
  return Json{{"kind", "oracles"}, {"stages", stages}, {"adversaries", arr}};
}

inline std::vector<AdversarySchedule> schedules_from_json(const Json& j) {
  std::vector<AdversarySchedule> out;
  try {
    for (const auto& a : j.at("adversaries")) out.push_back(schedule_from_json(a));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed schedule family: ") + e.what());
  }
  validate_schedules(out);
  return out;
}

inline std::vector<OracleAdversary> oracles_from_json(const Json& j) {
  std::vector<OracleAdversary> out;
  try {
    for (const auto& a : j.at("adversaries")) out.push_back(oracle_from_json(a));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed oracle family: ") + e.what());
  }
  validate_oracles(out);
  return out;
}

// Predictions: {"kind": "predictions", "predictions": [[i, code], ...]}.
inline Json predictions_to_json(const std::vector<Prediction>& ps) {
  Json arr = Json::array();
  for (const Prediction& p : ps) arr.push_back(Json::array({p.i, p.code}));
  return Json{{"kind", "predictions"}, {"predictions", arr}};
}

inline std::vector<Prediction> predictions_from_json(const Json& j) {
  std::vector<Prediction> out;
  try {
    for (const auto& p : j.at("predictions")) out.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::uint64_t>()});
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed prediction list: ") + e.what());
  }
  validate_predictions(out);
  return out;
}

inline Json edges_to_json(const Graph& g) {
  Json arr = Json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back(Json::array({u, v}));
  return arr;
}

inline Json priority_report(const PriorityResult& r, const std::vector<AdversarySchedule>& as) {
  Json log = Json::array();
  for (const PriorityStage& st : r.log) {
    Json row{{"s", st.s}, {"requiring", st.requiring}, {"bipartite", st.bipartite}};
    row["acted"] = st.acted ? Json(*st.acted) : Json(nullptr);
    log.push_back(row);
  }
  Json actions = Json::array();
  for (const PriorityAction& a : r.actions)
    actions.push_back(Json{{"s", a.s}, {"e", a.e}, {"x", a.x}, {"y", a.y}, {"u", a.u}, {"v", a.v}});
  Json defeated = Json::object();
  for (const AdversarySchedule& a : as) {
    auto cert = defeat_certificate(r.graph, a);
    defeated[std::to_string(a.e)] = cert ? Json{{"x", cert->x}, {"y", cert->y}, {"path", cert->path}} : Json(nullptr);
  }
  return Json{{"stages", r.stages},         {"edges", edges_to_json(r.graph)},   {"log", log},
              {"actions", actions},         {"eligible", eligible_indices(r)},   {"defeated", defeated},
              {"bipartite_every_stage", r.bipartite_every_stage()}};
}

inline Json measure_report(const MeasureBuildResult& r) {
  Json log = Json::array();
  for (const MeasureComparison& c : r.log)
    log.push_back(Json{{"stage", c.stage}, {"e", c.e}, {"kind", c.kind}, {"length", c.length},
                       {"measure", c.measure.to_string()}, {"threshold", std::to_string(c.p) + "/" + std::to_string(c.q)},
                       {"result", c.result}});
  Json reqs = Json::array();
  for (const RequirementReport& q : r.requirements) {
    Json row{{"e", q.e}, {"locked", q.locked}, {"type1_stages", q.type1_stages}, {"type1_locks", q.type1_locks}};
    if (q.type2) {
      const TypeTwoAction& t = *q.type2;
      row["type2"] = Json{{"stage", t.stage}, {"xs", t.xs}, {"ys", t.ys}, {"fresh", {t.a, t.b, t.c, t.d}},
                          {"joint", t.joint.to_string()}, {"union", t.either.to_string()},
                          {"g1", t.g1.to_string()}, {"g2", t.g2.to_string()}, {"choice", t.choice},
                          {"defeated", t.defeated.to_string()}, {"defeated_final", t.defeated_final.to_string()}};
    } else {
      row["type2"] = nullptr;
    }
    reqs.push_back(row);
  }
  return Json{{"stages", r.stages}, {"edges", edges_to_json(r.graph)}, {"bipartite", r.bipartite},
              {"log", log}, {"requirements", reqs}};
}

inline Json greedy_report(const GreedyResult& g) {
  Json steps = Json::array();
  for (const GreedyStep& s : g.steps)
    steps.push_back(Json{{"s", s.s}, {"h", s.h}, {"bad_count", s.bad_count}, {"measure", s.measure.to_string()},
                         {"bound", "2^-" + std::to_string(s.bound_exponent)}, {"holds", s.holds}});
  return Json{{"c", g.c}, {"initial", g.initial.to_string()}, {"initial_holds", g.initial_holds},
              {"complete", g.complete}, {"h", colorset_to_json(g.h)}, {"steps", steps}};
}

}  // namespace ramkit
