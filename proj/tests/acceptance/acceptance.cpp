// Acceptance runner: one PASS/FAIL line per criterion. `--only N` runs a
// single criterion; the exit status is nonzero when a selected criterion
// fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "ramkit/ramkit.hpp"
#include "roundtrip.hpp"

using namespace ramkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

// 1. Widget lemma suite, and each one-edge mutation is caught.
Outcome criterion_widgets() {
  auto start = Clock::now();
  auto checks = check_widget_lemmas(7);
  std::size_t failed = 0;
  std::uint64_t cases = 0;
  std::string first;
  for (const auto& c : checks) {
    cases += c.cases;
    if (!c.pass) {
      if (failed++ == 0) first = c.lemma + " " + c.scope + ": " + c.detail;
    }
  }
  auto mutations = run_widget_mutations();
  std::size_t caught = 0;
  for (const auto& m : mutations) caught += m.caught();
  double t = seconds_since(start);
  Outcome o;
  o.pass = failed == 0 && caught == mutations.size() && t < 60.0;
  std::ostringstream os;
  os << checks.size() << " lemma checks over " << cases << " colorings, " << failed << " failed; " << caught << "/"
     << mutations.size() << " mutations caught; " << fmt_seconds(t);
  if (failed) os << "; first failure: " << first;
  o.detail = os.str();
  return o;
}

// 2. R pinned to (0, 1, 2) has exactly two colorings.
Outcome criterion_r_count() {
  std::size_t n = r_pinned_coloring_count();
  // Independent count: the oracle DFS over the R gadget's graph with the
  // truth vertices forced by edges to a private triangle.
  Gadget g = build_R(0, 1, 2);
  std::size_t oracle_count = 0;
  const std::size_t nv = g.graph.vertex_count();
  std::vector<int> col(nv, -1);
  col[0] = 0;
  col[1] = 1;
  col[2] = 2;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == nv) {
      ++oracle_count;
      return;
    }
    if (v < 3) {
      rec(v + 1);
      return;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (Vertex w : g.graph.neighbors(v))
        if (w < v && col[w] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      rec(v + 1);
      col[v] = -1;
    }
  };
  rec(0);
  Outcome o;
  o.pass = n == 2 && oracle_count == 2;
  o.detail = "library count " + std::to_string(n) + ", brute-force count " + std::to_string(oracle_count);
  return o;
}

// 3. Reduction round-trips.
Outcome criterion_roundtrips() {
  auto start = Clock::now();
  std::map<std::string, roundtrip::Stats> per;
  auto add = [&](const std::string& name, const roundtrip::Stats& s) { per[name].merge(s); };

  auto tree_reductions = [&](const FinTree& t, std::uint64_t seed) {
    std::vector<std::size_t> all_x;
    for (std::size_t i = 0; i <= t.horizon(); ++i) all_x.push_back(i);
    add("localize", roundtrip::localize(t, all_x));
    std::vector<std::size_t> odd_x;
    for (std::size_t i = 1; i <= t.horizon(); i += 2) odd_x.push_back(i);
    add("localize", roundtrip::localize(t, odd_x));
    add("kary2bin", roundtrip::kary2bin(t));
    add("pack/half", roundtrip::pack(t, g_half, "half", 2, seed));
    add("pack/identity", roundtrip::pack(t, g_identity, "identity", 2, seed));
    add("fixcolor", roundtrip::fixcolor(t));
    add("chaincode", roundtrip::chaincode(t));
    add("tree2cnf", roundtrip::tree2cnf(t));
  };

  // Exhaustive: every binary tree of horizon <= 3 and every pruned binary
  // tree of horizon 4.
  std::size_t exhaustive_all = 0, exhaustive_pruned = 0;
  for (std::size_t d = 0; d <= 3; ++d)
    for (const FinTree& t : oracle::all_binary_trees(d)) {
      tree_reductions(t, exhaustive_all++);
      // All localizing sets X for the smaller trees.
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (d + 1)); ++mask) {
        std::vector<std::size_t> x;
        for (std::size_t i = 0; i <= d; ++i)
          if (mask >> i & 1) x.push_back(i);
        add("localize", roundtrip::localize(t, x));
      }
    }
  for (const FinTree& t : oracle::all_pruned_binary_trees(4)) tree_reductions(t, exhaustive_pruned++);

  // Exhaustive clause lists: every list of at most two sign patterns of
  // length <= 3, which are exactly the 2-branching lists of that shape.
  std::vector<Clause> patterns;
  for (std::size_t len = 1; len <= 3; ++len)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
      Clause c;
      for (std::size_t i = 0; i < len; ++i) c.push_back({i, (m >> i & 1) != 0});
      patterns.push_back(c);
    }
  std::size_t exhaustive_clauses = 0;
  // cnf2tree needs a satisfiable list; unsatisfiable lists still go
  // through sat2graph, where they have no models to decode.
  auto satisfiable = [](const ClauseSet& cs) { return oracle::clauses_homogeneous(cs.clauses, {}, false); };
  auto clause_reductions = [&](const ClauseSet& cs) {
    ++exhaustive_clauses;
    if (satisfiable(cs)) add("cnf2tree", roundtrip::cnf2tree(cs, 3));
    add("sat2graph", roundtrip::sat2graph(cs));
  };
  clause_reductions(ClauseSet{3, {}});
  for (const Clause& a : patterns) {
    clause_reductions(ClauseSet{3, {a}});
    for (const Clause& b : patterns) clause_reductions(ClauseSet{3, {a, b}});
  }

  // Exhaustive graphs on at most 4 vertices, k = 2 and 3.
  std::size_t exhaustive_graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (m >> i & 1) g.add_edge(slots[i].first, slots[i].second);
      ++exhaustive_graphs;
      add("graph2tree", roundtrip::graph2tree(g, 2));
      add("graph2tree", roundtrip::graph2tree(g, 3));
    }
  }

  // Seeded: 100 instances per reduction with depth up to 8.
  const std::size_t seeded = 100;
  for (std::size_t i = 0; i < seeded; ++i) {
    Rng rng(1000 + i);
    const std::size_t d = i < 10 ? 8 : 1 + rng.below(8);
    FinTree t = random_tree(rng, 2, d);
    tree_reductions(t, i);
    ClauseSet cs = random_clauses(rng, 1 + rng.below(6), d);
    while (!satisfiable(cs)) cs = random_clauses(rng, 1 + rng.below(6), d);
    add("cnf2tree", roundtrip::cnf2tree(cs, d));
    add("sat2graph", roundtrip::sat2graph(cs));
    const std::size_t n = 1 + rng.below(8);
    Graph g = random_graph(rng, n);
    add("graph2tree", roundtrip::graph2tree(g, 2));
    if (n <= 6) add("graph2tree", roundtrip::graph2tree(g, 3));
  }

  std::size_t failures = 0, checks = 0;
  std::string first;
  std::ostringstream os;
  for (const auto& [name, st] : per) {
    failures += st.failures;
    checks += st.checks;
    if (st.failures && first.empty()) first = name + ": " + st.first_failure;
    os << name << " " << st.instances << "/" << st.checks << (st.failures ? " FAILED " + std::to_string(st.failures) : "")
       << "; ";
  }
  double t = seconds_since(start);
  Outcome o;
  // Exhaustive coverage stops at horizon 3 for arbitrary trees and 4 for
  // pruned ones: horizon 5 has about 2.1e11 trees (4.3e9 pruned), beyond any
  // time budget. The criterion asks for horizon 5, so it is reported as not
  // met even when every check that ran passed.
  const bool exhaustive_depth5 = false;
  o.pass = failures == 0 && exhaustive_depth5 && t < 300.0;
  std::ostringstream d;
  d << "exhaustive: " << exhaustive_all << " trees (horizon <= 3), " << exhaustive_pruned
    << " pruned trees (horizon 4), " << exhaustive_clauses << " clause lists, " << exhaustive_graphs
    << " graphs; seeded: " << seeded << " per reduction at depth <= 8; " << checks << " checks, " << failures
    << " failures; " << fmt_seconds(t) << "; per reduction (instances/checks): " << os.str()
    << "not met: exhaustive horizon 5 needs about 2.1e11 trees (4.3e9 pruned) and was not run";
  if (!first.empty()) d << "; first failure: " << first;
  o.detail = d.str();
  return o;
}

// 4. u-sequence for g(n) = n/2 and the 62-symbol expansion of 10101.
Outcome criterion_useq() {
  USequence seq = make_u_sequence(g_half, 5);
  std::vector<std::size_t> want{0, 2, 6, 14, 30};
  std::vector<std::size_t> got(seq.u.begin(), seq.u.begin() + std::min<std::size_t>(5, seq.u.size()));
  const std::string expected = "11" "0000" "11111111" "0000000000000000" "11111111111111111111111111111111";
  std::string expansion = word_to_string(pack_expand(bits("10101"), seq), 2);
  Outcome o;
  o.pass = got == want && expansion == expected && expansion.size() == 62;
  o.detail = "u = " + roundtrip::show(got) + ", expansion has " + std::to_string(expansion.size()) + " symbols" +
             (expansion == expected ? ", matches" : ", differs: " + expansion);
  return o;
}

// 5. Bad-set bound on seeded positive-measure trees, and the greedy
// invariant for three steps at horizon 12.
Outcome criterion_bad_set() {
  std::size_t trees = 0, bound_ok = 0, density_ok = 0, greedy_ok = 0, bad_oracle_ok = 0;
  std::size_t max_bad = 0;
  for (unsigned c : {3u, 4u, 5u}) {
    for (std::size_t i = 0; i < 200; ++i) {
      Rng rng(5000 + 1000 * c + i);
      FinTree t = random_positive_tree(rng, 12, c);
      ++trees;
      if (oracle::measure_at_least_pow2(t, {}, c)) ++density_ok;
      auto bad = bad_set(t, c);
      max_bad = std::max(max_bad, bad.size());
      if (bad.size() < 2 * c) ++bound_ok;
      // Oracle Bad set: n is Bad iff pinning n to 0 leaves some level below 2^{-2c}.
      std::vector<std::size_t> want;
      for (std::size_t n = 0; n < t.horizon(); ++n)
        if (!oracle::measure_at_least_pow2(t, {n}, 2 * c)) want.push_back(n);
      if (want == bad) ++bad_oracle_ok;
      bool ok = false;
      try {
        GreedyResult g = greedy_homogeneous(t, c, 3);
        ok = g.complete && g.steps.size() == 3;
        std::set<std::size_t> hs;
        for (const auto& st : g.steps) {
          hs.insert(st.h);
          ok = ok && st.holds && oracle::measure_at_least_pow2(t, hs, st.bound_exponent) &&
               st.bound_exponent == (c << (st.s + 1));
        }
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok) ++greedy_ok;
    }
  }
  Outcome o;
  o.pass = density_ok == trees && bound_ok == trees && bad_oracle_ok == trees && greedy_ok == trees;
  std::ostringstream os;
  os << trees << " trees (c = 3, 4, 5; 200 each, horizon 12): density >= 2^-c " << density_ok << ", |Bad| < 2c "
     << bound_ok << " (max " << max_bad << "), Bad matches brute force " << bad_oracle_ok
     << ", greedy invariant for 3 steps " << greedy_ok;
  o.detail = os.str();
  return o;
}

// 6. Avoidance trees keep density >= 1/2 and every homogeneous set found by
// brute force defeats every prediction.
Outcome criterion_avoidance() {
  const std::size_t horizon = 9;
  std::size_t lists = 0, dense = 0, defeated_all = 0, sets = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(6000 + i);
    auto ps = random_predictions(rng, 1 + rng.below(horizon - 2), horizon);
    FinTree t = avoidance_tree(ps, horizon);
    ++lists;
    if (oracle::measure_at_least_pow2(t, {}, 1)) ++dense;
    bool all = true;
    for (const auto& h : oracle::homogeneous_sets(t, horizon, horizon)) {
      ++sets;
      for (const Prediction& p : ps) {
        // Brute-force comparison: the first i+3 elements of H against P_i.
        auto pset = p.set();
        bool equal = h.positions.size() >= pset.size() &&
                     std::equal(pset.begin(), pset.end(), h.positions.begin());
        if (equal || !defeats(ColorSet(h.positions, h.color), p)) all = false;
      }
    }
    if (all) ++defeated_all;
  }
  Outcome o;
  o.pass = dense == lists && defeated_all == lists;
  o.detail = std::to_string(lists) + " prediction lists at horizon " + std::to_string(horizon) + ": density >= 1/2 in " +
             std::to_string(dense) + ", all " + std::to_string(sets) + " homogeneous sets defeat every prediction in " +
             std::to_string(defeated_all);
  return o;
}

// 7. Priority construction: bipartite after every stage, and each adversary
// that received attention carries a verified odd-path certificate.
Outcome criterion_priority() {
  std::size_t families = 0, bipartite_ok = 0, eligible = 0, defeated = 0, consistent = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(7000 + i);
    const std::size_t stages = rng.between(10, 40);
    auto as = random_schedules(rng, rng.between(1, 4), stages, rng.between(2, 5));
    PriorityResult r = priority_build(as, stages);
    ++families;
    // Replay the actions stage by stage and 2-color independently.
    Graph g(r.graph.vertex_count());
    bool bip = r.bipartite_every_stage() && r.log.size() == stages;
    std::size_t a = 0;
    for (const PriorityStage& st : r.log) {
      for (; a < r.actions.size() && r.actions[a].s == st.s; ++a) {
        const PriorityAction& act = r.actions[a];
        g.add_edge(act.x, act.u);
        g.add_edge(act.u, act.v);
        g.add_edge(act.v, act.y);
      }
      bip = bip && oracle::two_coloring(g).has_value();
    }
    if (bip && g == r.graph) ++bipartite_ok;
    auto el = eligible_indices(r);
    std::set<std::size_t> acted;
    for (const auto& act : r.actions) acted.insert(act.e);
    if (std::set<std::size_t>(el.begin(), el.end()) == acted) ++consistent;
    for (std::size_t e : el) {
      ++eligible;
      for (const auto& s : as) {
        if (s.e != e) continue;
        auto cert = defeat_certificate(r.graph, s);
        bool listed = false;
        if (cert)
          for (const auto& ev : s.events) listed = listed || (ev.x == cert->x && ev.y == cert->y);
        if (cert && listed && oracle::is_odd_path(r.graph, cert->path, cert->x, cert->y)) ++defeated;
      }
    }
  }
  Outcome o;
  o.pass = bipartite_ok == families && defeated == eligible && consistent == families && eligible > 0;
  o.detail = std::to_string(families) + " families: bipartite after every stage in " + std::to_string(bipartite_ok) +
             ", eligible adversaries " + std::to_string(eligible) + ", defeated with checked odd path " +
             std::to_string(defeated) + ", eligible set equals acting set in " + std::to_string(consistent);
  return o;
}

// Brute-force measure of prefixes x of length len (enumeration stage s)
// whose enumerated set has two vertices of opposite sides in one component.
Dyadic oracle_defeated_measure(const Graph& g, const OracleAdversary& a, std::size_t s) {
  auto side = oracle::two_coloring(g);
  auto comp = oracle::components(g);
  const std::size_t len = std::min(s, a.s_max);
  std::uint64_t count = 0;
  for (const Word& x : oracle::all_words(2, len)) {
    std::set<Vertex> w;
    for (const auto& [p, vs] : a.table)
      if (p.size() <= std::min(s, x.size()) && std::equal(p.begin(), p.end(), x.begin())) w.insert(vs.begin(), vs.end());
    bool bad = false;
    for (Vertex u : w)
      for (Vertex v : w)
        if (u < g.vertex_count() && v < g.vertex_count() && comp[u] == comp[v] && (*side)[u] != (*side)[v]) bad = true;
    count += bad;
  }
  return Dyadic(count, static_cast<unsigned>(len));
}

// 8. Measure construction: every type-II action defeats more than 2/5, and
// the comparison log replays exactly.
Outcome criterion_measure() {
  std::size_t families = 0, type2 = 0, type2_ok = 0, comparisons = 0, comparisons_ok = 0, replay_ok = 0, bip_ok = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(8000 + i);
    const std::size_t s_max = rng.between(6, 12);
    auto as = random_oracles(rng, rng.between(1, 3), s_max, 3, 3 + 2 * s_max);
    const std::size_t stages = s_max + 8;
    MeasureBuildResult r = measure_build(as, stages);
    MeasureBuildResult again = measure_build(as, stages);
    ++families;
    if (measure_report(r) == measure_report(again)) ++replay_ok;
    if (oracle::two_coloring(r.graph).has_value() &&
        std::all_of(r.bipartite.begin(), r.bipartite.end(), [](bool b) { return b; }))
      ++bip_ok;
    for (const MeasureComparison& c : r.log) {
      ++comparisons;
      std::pair<std::uint64_t, std::uint64_t> want{0, 0};
      if (c.kind == "type1" || c.kind == "type2") want = {9, 10};
      if (c.kind == "joint" || c.kind == "union") want = {4, 5};
      if (c.kind == "g1" || c.kind == "g2") want = {2, 5};
      // measure > p/q  iff  num * q > p * 2^len, in 128-bit arithmetic.
      unsigned __int128 lhs = static_cast<unsigned __int128>(c.measure.numerator()) * c.q;
      unsigned __int128 rhs = static_cast<unsigned __int128>(c.p) << c.measure.log2_denominator();
      if (std::make_pair(c.p, c.q) == want && c.result == (lhs > rhs)) ++comparisons_ok;
    }
    for (const RequirementReport& req : r.requirements) {
      if (!req.type2) continue;
      ++type2;
      const OracleAdversary* a = nullptr;
      for (const auto& x : as)
        if (x.e == req.e) a = &x;
      // The library reports the measure over the oracle as seen at the
      // action's stage; the brute force recomputes that and also the view
      // after the last stage.
      Dyadic at_action = oracle_defeated_measure(r.graph, *a, req.type2->stage - 1);
      Dyadic at_end = oracle_defeated_measure(r.graph, *a, stages);
      if (req.type2->defeated.greater_than(2, 5) && at_action == req.type2->defeated_final &&
          at_action.greater_than(2, 5) && at_end.greater_than(2, 5))
        ++type2_ok;
    }
  }
  Outcome o;
  o.pass = type2 > 0 && type2_ok == type2 && comparisons_ok == comparisons && replay_ok == families && bip_ok == families;
  std::ostringstream os;
  os << families << " oracle families: " << type2 << " type-II actions, " << type2_ok
     << " defeat > 2/5 (brute force on the final graph); " << comparisons_ok << "/" << comparisons
     << " logged comparisons use 9/10, 4/5, 2/5 and agree with exact arithmetic; replay identical in " << replay_ok
     << "; bipartite in " << bip_ok;
  o.detail = os.str();
  return o;
}

// 9. is_k_homogeneous(., ., 2) against the induced-subgraph definition on
// every graph with at most 6 vertices and every H.
Outcome criterion_k2() {
  std::uint64_t graphs = 0, pairs = 0, agree = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < static_cast<int>(n); ++u)
      for (int v = u + 1; v < static_cast<int>(n); ++v) slots.push_back({u, v});
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
      std::vector<std::pair<int, int>> edges;
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (m >> i & 1) {
          edges.push_back(slots[i]);
          g.add_edge(slots[i].first, slots[i].second);
        }
      ++graphs;
      oracle::SmallGraph2Hom ref(n, edges);
      for (std::uint32_t h = 0; h < (1u << n); ++h) {
        std::vector<Vertex> hv;
        for (std::size_t v = 0; v < n; ++v)
          if (h >> v & 1) hv.push_back(v);
        ++pairs;
        if (is_k_homogeneous(g, hv, 2).holds() == ref.homogeneous(h)) ++agree;
      }
    }
  }
  Outcome o;
  o.pass = agree == pairs;
  o.detail = std::to_string(graphs) + " labelled graphs, " + std::to_string(pairs) + " (graph, H) pairs, " +
             std::to_string(agree) + " agree";
  return o;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 10. The CLI produces identical bytes and exit codes when run twice.
Outcome criterion_cli() {
  namespace fs = std::filesystem;
  const std::string cli = RAMKIT_CLI_PATH;
  fs::path dir = fs::temp_directory_path() / ("ramkit_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  auto at = [&](const std::string& f) { return (dir / f).string(); };
  // Inputs for the reduce and solve commands.
  run(cli + " gen tree --depth 4 --seed 7 --out " + at("tree.json"));
  run(cli + " gen positive-measure-tree --depth 8 --c 3 --seed 2 --out " + at("pos.json"));
  run(cli + " gen clauses --count 4 --depth 3 --seed 3 --format dimacs --out " + at("clauses.cnf"));
  run(cli + " gen graph --vertices 6 --seed 4 --out " + at("graph.json"));
  run(cli + " gen adversary --events 5 --seed 5 --out " + at("schedules.json"));
  run(cli + " gen adversary --oracle --seed 6 --out " + at("oracles.json"));
  run(cli + " reduce sat2graph " + at("clauses.cnf") + " --format dot --out " + at("gadget.dot"));
  std::vector<std::string> cmds = {
      "gen tree --depth 4 --seed 7",
      "gen tree --depth 6 --alphabet 3 --seed 11",
      "gen positive-measure-tree --c 3 --seed 1",
      "gen clauses --count 5 --depth 4 --seed 2 --format dimacs",
      "gen graph --vertices 7 --seed 3 --format dot",
      "gen tournament --vertices 6 --seed 4",
      "gen adversary --events 5 --seed 5",
      "gen adversary --oracle --seed 6",
      "reduce localize " + at("tree.json") + " --x 0,2,4",
      "reduce kary2bin " + at("tree.json"),
      "reduce pack " + at("tree.json"),
      "reduce pack " + at("tree.json") + " --g identity",
      "reduce fixcolor " + at("tree.json"),
      "reduce chaincode " + at("tree.json"),
      "reduce tourney " + at("tree.json"),
      "reduce tree2cnf " + at("tree.json"),
      "reduce cnf2tree " + at("clauses.cnf") + " --horizon 4",
      "reduce graph2tree " + at("graph.json") + " --k 3",
      "reduce sat2graph " + at("clauses.cnf"),
      "verify widgets",
      "verify reductions --seed 3",
      "verify adversarial --seed 4",
      "verify claims --c 3",
      "solve homogeneous " + at("tree.json"),
      "solve colorings " + at("gadget.dot"),
      "solve greedy " + at("pos.json") + " --c 3",
      "solve priority " + at("schedules.json"),
      "solve measure " + at("oracles.json"),
  };
  std::size_t identical = 0, clean = 0;
  std::string first_bad;
  for (const std::string& c : cmds) {
    RunResult a = run(cli + " " + c);
    RunResult b = run(cli + " " + c);
    bool same = a.status == b.status && a.out == b.out && !a.out.empty();
    identical += same;
    clean += a.status == 0;
    if ((!same || a.status != 0) && first_bad.empty()) first_bad = c + " (exit " + std::to_string(a.status) + ")";
  }
  // --out writes the same bytes as stdout.
  run(cli + " gen tree --depth 4 --seed 7 --out " + at("again.json"));
  bool out_matches = slurp(at("again.json")) == run(cli + " gen tree --depth 4 --seed 7").out;
  // Corrupted input is rejected with a nonzero status.
  {
    std::ofstream bad(at("corrupt.json"));
    bad << "{\"alphabet\": 2, \"horizon\": 2, \"nodes\": [\"\", \"0\", \"11\"]}";
  }
  int corrupt = run(cli + " solve homogeneous " + at("corrupt.json")).status;
  fs::remove_all(dir);
  Outcome o;
  o.pass = identical == cmds.size() && clean == cmds.size() && out_matches && corrupt != 0;
  o.detail = std::to_string(identical) + "/" + std::to_string(cmds.size()) + " commands byte-identical on re-run, " +
             std::to_string(clean) + " exit 0; --out matches stdout: " + (out_matches ? "yes" : "no") +
             "; corrupted tree exit status " + std::to_string(corrupt);
  if (!first_bad.empty()) o.detail += "; first problem: " + first_bad;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramkit acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      criterion_widgets, criterion_r_count,   criterion_roundtrips, criterion_useq, criterion_bad_set,
      criterion_avoidance, criterion_priority, criterion_measure,   criterion_k2,   criterion_cli};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
