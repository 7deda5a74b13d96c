#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/graph/graph.hpp"
#include "ramkit/graph/odd_path.hpp"

namespace ramkit {

// y enters W_e^{[x]} at stage s.
struct ScheduleEvent {
  std::size_t s = 0;
  Vertex x = 0;
  Vertex y = 0;
  friend bool operator==(const ScheduleEvent&, const ScheduleEvent&) = default;
};

struct AdversarySchedule {
  std::size_t e = 0;
  std::vector<ScheduleEvent> events;
};

inline void validate_schedule(const AdversarySchedule& a) {
  for (std::size_t i = 1; i < a.events.size(); ++i)
    if (a.events[i].s < a.events[i - 1].s)
      throw InputError("schedule " + std::to_string(a.e) + ": stages are not nondecreasing");
}

inline void validate_schedules(const std::vector<AdversarySchedule>& as) {
  std::set<std::size_t> seen;
  for (const AdversarySchedule& a : as) {
    validate_schedule(a);
    if (!seen.insert(a.e).second) throw InputError("schedule index " + std::to_string(a.e) + " repeated");
  }
}

// Cantor pairing <x, y> = (x + y)(x + y + 1)/2 + y.
inline std::size_t cantor_pair(std::size_t x, std::size_t y) { return (x + y) * (x + y + 1) / 2 + y; }

struct PriorityAction {
  std::size_t s = 0;
  std::size_t e = 0;
  Vertex x = 0, y = 0, u = 0, v = 0;
};

struct PriorityStage {
  std::size_t s = 0;
  std::vector<std::size_t> requiring;  // indices requiring attention, ascending
  std::optional<std::size_t> acted;    // index that received attention
  bool bipartite = true;               // after the stage's edges are added
};

struct PriorityResult {
  Graph graph;
  std::size_t stages = 0;
  std::vector<PriorityStage> log;
  std::vector<PriorityAction> actions;
  bool bipartite_every_stage() const {
    return std::all_of(log.begin(), log.end(), [](const PriorityStage& st) { return st.bipartite; });
  }
};

namespace detail {

// Component ids of the current graph with vertices beyond the graph's range
// treated as singletons.
struct Components {
  ParityLabels labels;
  std::size_t n = 0;
  std::size_t id(Vertex v) const { return v < n ? labels.component[v] : n + v; }
};

inline Components components_of(const Graph& g) { return {parity_labels(g), g.vertex_count()}; }

}  // namespace detail

// The least pair (Cantor order) from the events enumerated by stage s with
// e < x < y < s, x and y not connected, and neither connected to a vertex
// <= e.
inline std::optional<ScheduleEvent> requires_attention(const Graph& g, const AdversarySchedule& a, std::size_t s) {
  if (a.e >= s) return std::nullopt;
  auto comp = detail::components_of(g);
  std::set<std::size_t> low;
  for (Vertex w = 0; w <= a.e; ++w) low.insert(comp.id(w));
  std::optional<ScheduleEvent> best;
  for (const ScheduleEvent& ev : a.events) {
    if (ev.s > s) break;
    if (!(a.e < ev.x && ev.x < ev.y && ev.y < s)) continue;
    if (comp.id(ev.x) == comp.id(ev.y)) continue;
    if (low.count(comp.id(ev.x)) || low.count(comp.id(ev.y))) continue;
    if (!best || cantor_pair(ev.x, ev.y) < cantor_pair(best->x, best->y)) best = ev;
  }
  return best;
}

// Stage s = 0 .. stages-1: the least index requiring attention that has not
// received attention before joins its pair (x, y) by the path x-u-v-y
// through the two least isolated vertices u < v above s.
inline PriorityResult priority_build(std::vector<AdversarySchedule> adversaries, std::size_t stages) {
  validate_schedules(adversaries);
  std::sort(adversaries.begin(), adversaries.end(),
            [](const AdversarySchedule& a, const AdversarySchedule& b) { return a.e < b.e; });
  PriorityResult out;
  out.stages = stages;
  std::set<std::size_t> served;
  for (std::size_t s = 0; s < stages; ++s) {
    PriorityStage st;
    st.s = s;
    std::optional<ScheduleEvent> chosen;
    for (const AdversarySchedule& a : adversaries) {
      auto pair = requires_attention(out.graph, a, s);
      if (!pair) continue;
      st.requiring.push_back(a.e);
      if (!st.acted && !served.count(a.e)) {
        st.acted = a.e;
        chosen = pair;
      }
    }
    if (st.acted) {
      Vertex u = s + 1;
      while (!out.graph.isolated(u)) ++u;
      Vertex v = u + 1;
      while (!out.graph.isolated(v)) ++v;
      out.graph.add_edge(chosen->x, u);
      out.graph.add_edge(u, v);
      out.graph.add_edge(v, chosen->y);
      served.insert(*st.acted);
      out.actions.push_back({s, *st.acted, chosen->x, chosen->y, u, v});
    }
    st.bipartite = !odd_cycle_exists(out.graph);
    out.log.push_back(std::move(st));
  }
  return out;
}

struct DefeatCertificate {
  Vertex x = 0, y = 0;
  std::vector<Vertex> path;  // odd-length path x ... y
};

// Some enumerated pair (x, y) with y in W_e^{[x]} is joined by an odd path,
// so no 2-coloring makes {x, y} homogeneous.
inline std::optional<DefeatCertificate> defeat_certificate(const Graph& g, const AdversarySchedule& a) {
  for (const ScheduleEvent& ev : a.events)
    if (ev.x != ev.y)
      if (auto p = odd_path(g, ev.x, ev.y)) return DefeatCertificate{ev.x, ev.y, *p};
  return std::nullopt;
}

inline bool verify_defeated(const Graph& g, const AdversarySchedule& a) { return defeat_certificate(g, a).has_value(); }

// Indices that required attention at some stage where no smaller index
// that had not yet been served also required it.
inline std::vector<std::size_t> eligible_indices(const PriorityResult& r) {
  std::set<std::size_t> served, out;
  for (const PriorityStage& st : r.log) {
    for (std::size_t e : st.requiring) {
      if (served.count(e)) continue;
      out.insert(e);
      served.insert(e);
      break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace ramkit
