// ramkit command-line tool: gen, reduce, verify, solve.
//
// Exit codes: 0 success, 1 a property check failed or decoding failed,
// 2 malformed input or arguments, 3 a search budget was exhausted.
// JSON output has sorted keys and exact fractions only; the same arguments
// always produce the same bytes.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramkit/ramkit.hpp"

using namespace ramkit;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

// Raised when a verification suite finds a violated property.
class PropertyFailure : public std::runtime_error {
 public:
  explicit PropertyFailure(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t depth = 0;  // 0 means the per-command default
  std::uint64_t budget = 0;
  std::size_t horizon = 0;
  std::string format = "json";
  std::string out;
  unsigned c = 3;
  std::size_t count = 0;
  std::size_t vertices = 0;
  std::size_t events = 3;
  std::size_t adversaries = 0;
  std::size_t stages = 0;
  std::size_t steps = 3;
  std::size_t limit = 16;
  std::uint32_t alphabet = 2;
  int k = 3;
  bool oracle = false;
  bool bipartite = false;
  std::string x;
  std::string g = "half";
  std::string h;
  std::string input;
};

std::size_t pick(std::size_t value, std::size_t fallback) { return value ? value : fallback; }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot open output file " + o.out);
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

char first_symbol(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line.compare(p, 2, "//") == 0) continue;
    return line[p];
  }
  return '\0';
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json(const std::string& path) { return parse_json(read_file(path)); }

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw InputError("bad list element '" + item + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad list element '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------- documents

Json clauses_to_json(const ClauseSet& c) {
  Json cls = Json::array();
  for (const Clause& cl : c.clauses) {
    Json lits = Json::array();
    for (const Literal& l : cl) lits.push_back(l.positive ? static_cast<long long>(l.atom + 1) : -static_cast<long long>(l.atom + 1));
    cls.push_back(lits);
  }
  return Json{{"kind", "clauses"}, {"atoms", c.atoms}, {"clauses", cls}};
}

ClauseSet clauses_from_json(const Json& j) {
  try {
    ClauseSet c;
    c.atoms = j.at("atoms").get<std::size_t>();
    for (const auto& cl : j.at("clauses")) {
      Clause out;
      for (const auto& l : cl) {
        long long v = l.get<long long>();
        std::size_t var = static_cast<std::size_t>(v < 0 ? -v : v);
        if (v == 0 || var > c.atoms) throw InputError("clause literal out of range");
        out.push_back(Literal{var - 1, v > 0});
      }
      c.clauses.push_back(out);
    }
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed clause document: ") + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  return Json{{"kind", "graph"}, {"vertices", g.vertex_count()}, {"edges", edges_to_json(g)}};
}

Graph graph_from_json(const Json& j) {
  try {
    Graph g(j.at("vertices").get<std::size_t>());
    for (const auto& e : j.at("edges")) {
      Vertex u = e.at(0).get<Vertex>(), v = e.at(1).get<Vertex>();
      if (u >= g.vertex_count() || v >= g.vertex_count()) throw InputError("edge mentions a vertex outside the graph");
      g.add_edge(u, v);
    }
    return g;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
}

Json tournament_to_json(const Tournament& t) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::string row;
    for (std::size_t y = 0; y < t.size(); ++y) row += t.beats(x, y) ? '1' : '0';
    rows.push_back(row);
  }
  return Json{{"kind", "tournament"}, {"size", t.size()}, {"beats", rows}};
}

Tournament tournament_from_json(const Json& j) {
  try {
    std::size_t n = j.at("size").get<std::size_t>();
    const auto& rows = j.at("beats");
    if (rows.size() != n) throw InputError("tournament matrix has the wrong number of rows");
    Tournament t(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::string row = rows.at(x).get<std::string>();
      if (row.size() != n) throw InputError("tournament row has the wrong length");
      for (std::size_t y = 0; y < n; ++y)
        if (row[y] == '1') t.set_beats(x, y);
        else if (row[y] != '0') throw InputError("tournament rows use 0 and 1 only");
    }
    if (!t.valid()) throw InputError("not a tournament: every pair needs exactly one direction");
    return t;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed tournament document: ") + e.what());
  }
}

FinTree load_tree(const std::string& path) { return tree_from_json(read_json(path)); }

ClauseSet load_clauses(const std::string& path) {
  std::string text = read_file(path);
  return first_symbol(text) == '{' ? clauses_from_json(parse_json(text)) : clauses_from_dimacs(text);
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  char c = first_symbol(text);
  if (c == '{') return graph_from_json(parse_json(text));
  if (c == 'g' || c == 's') return graph_from_dot(text);
  return graph_from_adjacency(text);
}

std::string graph_output(const Options& o, const Graph& g) {
  if (o.format == "dot") return graph_to_dot(g);
  if (o.format == "json") return json_text(graph_to_json(g));
  throw InputError("graphs are written as json or dot");
}

std::string clauses_output(const Options& o, const ClauseSet& c) {
  if (o.format == "dimacs") return clauses_to_dimacs(c);
  if (o.format == "json") return json_text(clauses_to_json(c));
  throw InputError("clause lists are written as json or dimacs");
}

std::string json_only(const Options& o, const Json& j) {
  if (o.format != "json") throw InputError("this output is only available as json");
  return json_text(j);
}

// ---------------------------------------------------------------- gen

std::string cmd_gen(const std::string& kind, const Options& o) {
  Rng rng(o.seed);
  if (kind == "tree") {
    if (o.alphabet < 1 || o.alphabet > 16) throw InputError("--alphabet must lie in [1, 16]");
    return json_only(o, tree_to_json(random_tree(rng, o.alphabet, pick(o.depth, 4))));
  }
  if (kind == "positive-measure-tree") {
    FinTree t = random_positive_tree(rng, pick(o.depth, 10), o.c);
    Dyadic m = min_level_density(t);
    if (below_pow2_neg(m, o.c)) throw PropertyFailure("generated tree misses the density bound");
    Json j = tree_to_json(t);
    j["measure"] = m.to_string();
    j["bound"] = Dyadic::pow2_neg(o.c).to_string();
    return json_only(o, j);
  }
  if (kind == "clauses") return clauses_output(o, random_clauses(rng, pick(o.count, 5), pick(o.depth, 4)));
  if (kind == "graph") {
    std::size_t n = pick(o.vertices, 8);
    return graph_output(o, o.bipartite ? random_bipartite_graph(rng, n) : random_graph(rng, n));
  }
  if (kind == "tournament") return json_only(o, tournament_to_json(random_tournament(rng, pick(o.vertices, 6))));
  if (kind == "adversary") {
    if (o.oracle) {
      std::size_t s_max = pick(o.depth, 8);
      if (s_max > kMaxMeasureLength) throw InputError("--depth for oracle tables is at most 24");
      auto as = random_oracles(rng, pick(o.adversaries, 2), s_max, 3, 3 + 2 * s_max);
      return json_only(o, oracle_family_to_json(as, pick(o.stages, s_max + 8)));
    }
    std::size_t stages = pick(o.stages, 20);
    auto as = random_schedules(rng, pick(o.adversaries, 3), stages, o.events);
    return json_only(o, schedule_family_to_json(as, stages));
  }
  if (kind == "predictions") {
    std::size_t horizon = pick(o.depth, 10);
    return json_only(o, predictions_to_json(random_predictions(rng, pick(o.count, 4), horizon)));
  }
  throw InputError("unknown gen kind '" + kind + "'");
}

// ---------------------------------------------------------------- reduce

struct Reduced {
  Json doc;                   // reduction, parameters, source, image, decode
  std::optional<Graph> graph;  // set when the image is a graph
  std::optional<ClauseSet> clauses;  // set when the image is a clause list
};

Json words_json(const std::vector<Word>& ws, std::uint32_t k) {
  Json arr = Json::array();
  for (const Word& w : ws) arr.push_back(word_to_string(w, k));
  return arr;
}

// Builds the reduction from a source document and parameters, so that
// `verify reductions --input` can rebuild and compare it.
Reduced reduce_doc(const std::string& name, const Json& source, const Json& params) {
  Reduced r;
  Json image, decode;
  auto tree_src = [&] { return tree_from_json(source); };
  if (name == "localize") {
    FinTree t = tree_src();
    auto x = params.at("x").get<std::vector<std::size_t>>();
    Localization loc = localize_tree(t, x);
    image = tree_to_json(loc.image);
    decode = Json{{"positions", loc.positions}, {"source_horizon", loc.source_horizon},
                  {"rule", "position i of the image stands for position x_i of the source"}};
  } else if (name == "kary2bin") {
    FinTree t = tree_src();
    PaddedTree pad = pad_alphabet(t);
    FinTree b = kary_to_binary(pad.tree);
    image = tree_to_json(b);
    decode = Json{{"bits", pad.bits}, {"source_alphabet", t.alphabet()},
                  {"initial_positions", kary_initial_positions(pad.bits, b.horizon())},
                  {"rule", "symbol j of the source is spread over binary positions bits*j .. bits*j+bits-1"}};
  } else if (name == "pack") {
    FinTree t = tree_src();
    std::string g = params.at("g").get<std::string>();
    if (g != "half" && g != "identity") throw InputError("--g must be half or identity");
    PackedTree p = pack_redundant(t, g == "half" ? OrderFunction(g_half) : OrderFunction(g_identity));
    image = tree_to_json(p.image);
    decode = Json{{"g", g}, {"u", p.seq.u}, {"rule", "f(j) is the common value on block [u_j, u_{j+1})"}};
  } else if (name == "fixcolor") {
    FinTree t = tree_src();
    FinTree img = fixed_color_tree(t);
    LengthLexEnum en(2);
    std::vector<Word> taus;
    for (std::size_t i = 0; i < t.horizon(); ++i) taus.push_back(en.word_at(i));
    image = tree_to_json(img);
    decode = Json{{"enumeration", words_json(taus, 2)}, {"rule", "a color-0 set H gives the union of tau_i for i in H"}};
  } else if (name == "chaincode") {
    FinTree t = tree_src();
    ChainCoded c = chain_code_tree(t);
    image = tree_to_json(c.image);
    std::vector<Word> words;
    for (std::uint64_t i = 0; i < c.bound.back(); ++i) words.push_back(c.en.word_at(i));
    decode = Json{{"bound", c.bound}, {"index_words", words_json(words, t.alphabet())},
                  {"rule", "symbol v names index_words[v]; a homogeneous function gives the union of its chain"}};
  } else if (name == "tourney") {
    FinTree t = tree_src();
    Tournament tr = tournament_from_tree(t);
    image = tournament_to_json(tr);
    decode = Json{{"last_changes", tournament_last_changes(tr)},
                  {"rule", "R(x,s) iff the leftmost node of level s has a 1 at x"}};
  } else if (name == "tree2cnf") {
    FinTree t = tree_src();
    ClauseSet cs = tree_to_clauses(t);
    r.clauses = cs;
    image = clauses_to_json(cs);
    decode = Json{{"rule", "atoms become positions; value true is color 1, false is color 0"}};
  } else if (name == "cnf2tree") {
    ClauseSet cs = clauses_from_json(source);
    std::size_t horizon = params.at("horizon").get<std::size_t>();
    std::vector<PropFormula> fs;
    for (const Clause& c : cs.clauses) fs.push_back(clause_formula(c));
    image = tree_to_json(formulas_to_tree(fs, horizon));
    decode = Json{{"horizon", horizon}, {"rule", "positions become atoms; color 1 is true, color 0 is false"}};
  } else if (name == "graph2tree") {
    Graph g = graph_from_json(source);
    int k = params.at("k").get<int>();
    ColoringTree ct = graph_to_coloring_tree(g, k);
    image = tree_to_json(ct.tree);
    decode = Json{{"order", ct.order}, {"k", k}, {"rule", "position i stands for vertex order[i]"}};
  } else if (name == "sat2graph") {
    ClauseSet cs = clauses_from_json(source);
    CompiledGraph cg = compile_clauses(cs);
    r.graph = cg.graph();
    image = graph_to_json(cg.graph());
    decode = decode_table_to_json(cg);
  } else if (name == "localize-graph") {
    Graph g = graph_from_json(source);
    LocalizedGraph loc = localize_graph(g, params.at("x").get<std::vector<Vertex>>());
    r.graph = loc.image;
    Json pairs = Json::array();
    for (std::size_t n = 0; n < loc.pairs.size(); ++n)
      pairs.push_back(Json{{"x", loc.pairs[n].x}, {"y", loc.pairs[n].y}, {"a", loc.a(n)}, {"b", loc.b(n)},
                           {"witness", loc.pairs[n].witness}});
    image = graph_to_json(loc.image);
    decode = Json{{"x", loc.x}, {"pairs", pairs}};
  } else if (name == "clique") {
    Graph g = graph_from_json(source);
    int k = params.at("k").get<int>();
    CliqueAugmented a = clique_augment(g, k);
    r.graph = a.image;
    image = graph_to_json(a.image);
    decode = Json{{"original_vertices", a.original_vertices}, {"clique", a.clique},
                  {"rule", "restrict a k-homogeneous set to the original vertices"}};
  } else {
    throw InputError("unknown reduction '" + name + "'");
  }
  r.doc = Json{{"reduction", name}, {"parameters", params}, {"source", source}, {"image", image}, {"decode", decode}};
  return r;
}

Json load_source(const std::string& name, const std::string& path) {
  if (name == "cnf2tree" || name == "sat2graph") return clauses_to_json(load_clauses(path));
  if (name == "graph2tree" || name == "localize-graph" || name == "clique") return graph_to_json(load_graph(path));
  return tree_to_json(load_tree(path));
}

Json reduce_params(const std::string& name, const Options& o) {
  Json p = Json::object();
  if (name == "localize" || name == "localize-graph") {
    if (o.x.empty()) throw InputError(name + " needs --x");
    p["x"] = parse_list(o.x);
  }
  if (name == "pack") p["g"] = o.g;
  if (name == "cnf2tree") p["horizon"] = pick(o.horizon, 4);
  if (name == "graph2tree" || name == "clique") p["k"] = o.k;
  return p;
}

std::string cmd_reduce(const std::string& name, const std::string& path, const Options& o) {
  Reduced r = reduce_doc(name, load_source(name, path), reduce_params(name, o));
  if (o.format == "json") return json_text(r.doc);
  Json side{{"reduction", name}, {"parameters", r.doc["parameters"]}, {"decode", r.doc["decode"]}};
  if (o.format == "dot") {
    if (!r.graph) throw InputError("--format dot needs a reduction with a graph image");
    return "// decode " + side.dump() + "\n" + graph_to_dot(*r.graph);
  }
  if (o.format == "dimacs") {
    if (!r.clauses) throw InputError("--format dimacs needs a reduction with a clause image");
    return "c decode " + side.dump() + "\n" + clauses_to_dimacs(*r.clauses);
  }
  throw InputError("unknown format '" + o.format + "'");
}

// ---------------------------------------------------------------- verify

struct Tally {
  std::size_t instances = 0, checks = 0, failures = 0;
  Json to_json() const { return Json{{"instances", instances}, {"checks", checks}, {"failures", failures}}; }
};

Json verify_widgets() {
  Json lemmas = Json::array();
  bool ok = true;
  for (const auto& c : check_widget_lemmas(7)) {
    lemmas.push_back(Json{{"lemma", c.lemma}, {"scope", c.scope}, {"cases", c.cases}, {"pass", c.pass}});
    ok = ok && c.pass;
  }
  Json muts = Json::array();
  for (const auto& m : run_widget_mutations()) {
    muts.push_back(Json{{"gadget", m.gadget}, {"removed", {m.removed.first, m.removed.second}},
                        {"expected_failure", m.expected_failure}, {"caught", m.caught()}});
    ok = ok && m.caught();
  }
  std::size_t r = r_pinned_coloring_count();
  ok = ok && r == 2;
  return Json{{"suite", "widgets"}, {"lemmas", lemmas}, {"mutations", muts}, {"r_pinned_colorings", r}, {"pass", ok}};
}

// Library-only round-trips on seeded instances: enumerate image solutions,
// decode, and check the decoded object against the source.
Json verify_reductions(const Options& o) {
  std::map<std::string, Tally> t;
  auto check = [&](const std::string& name, bool ok) {
    ++t[name].checks;
    if (!ok) ++t[name].failures;
  };
  const std::size_t n = pick(o.count, 20);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(o.seed * 1000003 + i);
    const std::size_t d = 1 + rng.below(pick(o.depth, 5));
    FinTree tree = random_tree(rng, 2, d);

    std::vector<std::size_t> x = rng.subset(d + 1, 1 + rng.below(d + 1));
    Localization loc = localize_tree(tree, x);
    ++t["localize"].instances;
    for (const ColorSet& h0 : enumerate_homogeneous(loc.image, loc.image.horizon(), loc.image.horizon()))
      check("localize", tree_homogeneous_to_depth(tree, decode_localized(loc, h0), d));

    FinTree fc = fixed_color_tree(tree);
    ++t["fixcolor"].instances;
    for (const ColorSet& h : enumerate_homogeneous(fc, d, d))
      if (h.color == 0) check("fixcolor", tree.contains(decode_fixed_color(h, tree)));

    ChainCoded cc = chain_code_tree(tree);
    ++t["chaincode"].instances;
    for (const PartialHom& h : horizon_restrictions(cc.image)) check("chaincode", tree.contains(decode_chain_code(h, cc, tree)));

    PackedTree pk = pack_redundant(tree, g_half);
    ++t["pack"].instances;
    for (const Word& w : pk.image.level(pk.image.horizon())) {
      PartialHom full;
      for (std::size_t j = 0; j < w.size(); ++j) full.entries[j] = w[j];
      check("pack", tree.contains(decode_packed(full, pk)));
    }

    ClauseSet cs = tree_to_clauses(tree);
    ++t["tree2cnf"].instances;
    for (const SatHomSet& h : enumerate_sat_homogeneous(cs, cs.clauses.size(), d))
      check("tree2cnf", tree_homogeneous_to_depth(tree, decode_sat_hom(h), d));

    // formulas_to_tree needs every prefix satisfiable; unsatisfiable lists are redrawn.
    ClauseSet rc = random_clauses(rng, 1 + rng.below(4), 1 + rng.below(3));
    while (!finitely_satisfiable(rc, rc.clauses.size())) rc = random_clauses(rng, 1 + rng.below(4), 1 + rng.below(3));
    std::vector<PropFormula> fs;
    for (const Clause& c : rc.clauses) fs.push_back(clause_formula(c));
    // Level i + 1 is the first to check formula i, so the horizon covers every clause.
    const std::size_t hz = std::max(rc.atoms, rc.clauses.size());
    FinTree ft = formulas_to_tree(fs, hz);
    ++t["cnf2tree"].instances;
    for (const ColorSet& h : enumerate_homogeneous(ft, hz, hz))
      check("cnf2tree", sat_homogeneous(rc, SatHomSet(h.positions, h.color == 1), rc.clauses.size()));

    CompiledGraph cg = compile_clauses(rc);
    ++t["sat2graph"].instances;
    for (int color = 0; color < 3; ++color) {
      auto found = find_coloring(cg.graph(), 3, {}, pick(o.budget, kDefaultSearchBudget));
      if (found.status == ColoringSearchResult::Status::kBudgetExceeded) throw BudgetExceeded("sat2graph coloring search");
      if (found.status != ColoringSearchResult::Status::kFound) break;
      std::vector<Vertex> cls;
      for (Vertex v = 0; v < cg.graph().vertex_count(); ++v)
        if (found.coloring[v] == found.coloring[color]) cls.push_back(v);
      DecodedSatHom dec = decode_homogeneous(cg, cls);
      check("sat2graph", sat_homogeneous(ClauseSet{cg.atoms, cg.clauses}, dec.set, cg.clauses.size()));
    }

    Graph g = random_graph(rng, 1 + rng.below(5));
    ColoringTree ct = graph_to_coloring_tree(g, 2);
    ++t["graph2tree"].instances;
    for (const ColorSet& h0 : enumerate_homogeneous(ct.tree, ct.tree.horizon(), ct.tree.horizon())) {
      DecodedColoring dc = decode_coloring_tree(g, ct, h0);
      check("graph2tree", is_proper_coloring(g, dc.witness, 2));
    }
  }
  Json per = Json::object();
  bool ok = true;
  for (const auto& [name, tl] : t) {
    per[name] = tl.to_json();
    ok = ok && tl.failures == 0;
  }
  return Json{{"suite", "reductions"}, {"seed", o.seed}, {"reductions", per}, {"pass", ok}};
}

// Rebuilds a `reduce` document from its source and parameters and compares.
Json verify_reduction_document(const std::string& path) {
  Json doc = read_json(path);
  std::string name;
  Reduced r;
  try {
    name = doc.at("reduction").get<std::string>();
    r = reduce_doc(name, doc.at("source"), doc.at("parameters"));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed reduction document: ") + e.what());
  }
  bool image = r.doc["image"] == doc.value("image", Json());
  bool decode = r.doc["decode"] == doc.value("decode", Json());
  return Json{{"suite", "reductions"}, {"reduction", name}, {"image_matches", image}, {"decode_matches", decode},
              {"pass", image && decode}};
}

Json verify_adversarial(const Options& o) {
  Tally pri, mea, avo;
  bool ok = true;
  const std::size_t n = pick(o.count, 10);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(o.seed * 1000003 + i);
    const std::size_t stages = rng.between(10, 40);
    auto as = random_schedules(rng, rng.between(1, 4), stages, rng.between(2, 5));
    PriorityResult r = priority_build(as, stages);
    ++pri.instances;
    ++pri.checks;
    if (!r.bipartite_every_stage()) ++pri.failures;
    for (std::size_t e : eligible_indices(r))
      for (const auto& a : as)
        if (a.e == e) {
          ++pri.checks;
          if (!verify_defeated(r.graph, a)) ++pri.failures;
        }

    const std::size_t s_max = rng.between(4, 8);
    auto os = random_oracles(rng, rng.between(1, 3), s_max, 3, 3 + 2 * s_max);
    MeasureBuildResult m = measure_build(os, s_max + 8);
    ++mea.instances;
    for (const auto& c : m.log) {
      ++mea.checks;
      if (c.result != c.measure.greater_than(c.p, c.q)) ++mea.failures;
    }
    for (const auto& req : m.requirements)
      if (req.type2) {
        ++mea.checks;
        if (!req.type2->defeated.greater_than(2, 5)) ++mea.failures;
      }

    const std::size_t horizon = 8;
    auto ps = random_predictions(rng, 1 + rng.below(horizon - 2), horizon);
    FinTree t = avoidance_tree(ps, horizon);
    ++avo.instances;
    ++avo.checks;
    if (min_level_density(t).compare_fraction(1, 2) == std::strong_ordering::less) ++avo.failures;
    for (const ColorSet& h : enumerate_homogeneous(t, horizon, horizon))
      for (const Prediction& p : ps) {
        ++avo.checks;
        if (!defeats(h, p)) ++avo.failures;
      }
  }
  ok = pri.failures == 0 && mea.failures == 0 && avo.failures == 0;
  return Json{{"suite", "adversarial"}, {"seed", o.seed},       {"priority", pri.to_json()},
              {"measure", mea.to_json()}, {"avoidance", avo.to_json()}, {"pass", ok}};
}

Json verify_claims(const Options& o) {
  const unsigned c = o.c;
  if (c < 3 || c > 12) throw InputError("--c must lie in [3, 12]");
  const std::size_t n = pick(o.count, 200);
  const std::size_t depth = pick(o.depth, 12);
  std::map<std::size_t, std::size_t> histogram;
  std::size_t below = 0, greedy = 0, dense = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(o.seed * 1000003 + i);
    FinTree t = random_positive_tree(rng, depth, c);
    if (!below_pow2_neg(min_level_density(t), c)) ++dense;
    auto bad = bad_set(t, c);
    ++histogram[bad.size()];
    if (bad.size() < 2 * c) ++below;
    GreedyResult g = greedy_homogeneous(t, c, o.steps);
    bool holds = g.complete;
    for (const auto& st : g.steps) holds = holds && st.holds;
    greedy += holds;
  }
  Json hist = Json::object();
  for (const auto& [size, count] : histogram) hist[std::to_string(size)] = count;
  bool ok = below == n && dense == n && greedy == n;
  return Json{{"suite", "claims"},
              {"c", c},
              {"trees", n},
              {"depth", depth},
              {"seed", o.seed},
              {"density_at_least_bound", dense},
              {"bad_size_histogram", hist},
              {"bad_bound", 2 * c},
              {"bad_below_bound", below},
              {"greedy_steps", o.steps},
              {"greedy_invariant_holds", greedy},
              {"pass", ok}};
}

// Plain-text report: one "path: value" line per scalar, strings unquoted,
// arrays of scalars on one line.
void flatten_report(const Json& j, const std::string& path, std::ostringstream& os) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_report(v, path.empty() ? k : path + "." + k, os);
    return;
  }
  if (j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); })) {
    os << path << ": [";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar(j[i]);
    os << "]\n";
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_report(j[i], path + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << path << ": " << scalar(j) << "\n";
}

std::string report_text(const Json& j) {
  std::ostringstream os;
  flatten_report(j, "", os);
  return os.str();
}

std::string cmd_verify(const std::string& suite, const Options& o) {
  Json r;
  if (suite == "widgets") r = verify_widgets();
  else if (suite == "reductions") r = o.input.empty() ? verify_reductions(o) : verify_reduction_document(o.input);
  else if (suite == "adversarial") r = verify_adversarial(o);
  else if (suite == "claims") r = verify_claims(o);
  else throw InputError("unknown verify suite '" + suite + "'");
  std::string text = o.format == "text" ? report_text(r) : json_only(o, r);
  if (!r.at("pass").get<bool>()) {
    emit(o, text);
    throw PropertyFailure("verification suite '" + suite + "' failed");
  }
  return text;
}

// ---------------------------------------------------------------- solve

std::string cmd_solve(const std::string& kind, const std::string& path, const Options& o) {
  const std::uint64_t budget = o.budget;
  if (kind == "homogeneous") {
    FinTree t = load_tree(path);
    std::size_t bound = std::min<std::size_t>(pick(o.depth, t.horizon()), t.horizon());
    auto sets = enumerate_homogeneous(t, t.horizon(), bound, pick(budget, kDefaultEnumerationBudget));
    std::map<std::size_t, std::size_t> sizes;
    std::optional<ColorSet> largest;
    for (const auto& h : sets) {
      ++sizes[h.positions.size()];
      if (!largest || h.positions.size() > largest->positions.size()) largest = h;
    }
    Json by = Json::object();
    for (const auto& [s, n] : sizes) by[std::to_string(s)] = n;
    Json listed = Json::array();
    for (std::size_t i = 0; i < sets.size() && i < o.limit; ++i) listed.push_back(colorset_to_json(sets[i]));
    return json_only(o, Json{{"bound", bound},
                             {"count", sets.size()},
                             {"by_size", by},
                             {"largest", largest ? colorset_to_json(*largest) : Json(nullptr)},
                             {"sets", listed}});
  }
  if (kind == "colorings") {
    Graph g = load_graph(path);
    std::vector<Coloring> shown;
    std::uint64_t count = 0;
    for_each_coloring(
        g, o.k, {},
        [&](const Coloring& c) {
          if (shown.size() < o.limit) shown.push_back(c);
          ++count;
          return true;
        },
        pick(budget, kDefaultSearchBudget));
    return json_only(o, Json{{"k", o.k}, {"vertices", g.vertex_count()}, {"count", count}, {"colorings", shown}});
  }
  if (kind == "k-homogeneous") {
    Graph g = load_graph(path);
    auto h = parse_list(o.h);
    auto r = is_k_homogeneous(g, h, o.k, pick(budget, kDefaultSearchBudget));
    if (r.verdict == Verdict::kUnknown) throw BudgetExceeded("k-homogeneity search exceeded its budget");
    Json j{{"k", o.k}, {"h", h}, {"verdict", verdict_name(r.verdict)}};
    j["witness"] = r.holds() ? Json(r.witness) : Json(nullptr);
    return json_only(o, j);
  }
  if (kind == "sat-homogeneous") {
    ClauseSet c = load_clauses(path);
    std::size_t bound = std::min<std::size_t>(pick(o.depth, c.atoms), c.atoms);
    auto sets = enumerate_sat_homogeneous(c, c.clauses.size(), bound);
    Json listed = Json::array();
    for (std::size_t i = 0; i < sets.size() && i < o.limit; ++i)
      listed.push_back(Json{{"atoms", sets[i].atoms}, {"value", sets[i].value}});
    return json_only(o, Json{{"bound", bound}, {"count", sets.size()}, {"sets", listed},
                             {"satisfiable", finitely_satisfiable(c, c.clauses.size())}});
  }
  if (kind == "transitive") {
    Tournament t = tournament_from_json(read_json(path));
    auto u = max_transitive_subtournament(t);
    return json_only(o, Json{{"size", u.size()}, {"sequence", u}});
  }
  if (kind == "greedy") {
    FinTree t = load_tree(path);
    return json_only(o, greedy_report(greedy_homogeneous(t, o.c, o.steps)));
  }
  if (kind == "bad-set") {
    FinTree t = load_tree(path);
    auto bad = bad_set(t, o.c);
    return json_only(o, Json{{"c", o.c}, {"measure", tree_measure(t).to_string()}, {"bad", bad},
                             {"bound", 2 * o.c}, {"below_bound", bad.size() < 2 * o.c}});
  }
  if (kind == "avoidance") {
    auto ps = predictions_from_json(read_json(path));
    std::size_t horizon = pick(o.horizon, 10);
    FinTree t = avoidance_tree(ps, horizon);
    std::size_t bound = std::min<std::size_t>(horizon, 16);
    std::size_t sets = 0, defeated = 0;
    for (const ColorSet& h : enumerate_homogeneous(t, horizon, bound, pick(budget, kDefaultEnumerationBudget))) {
      ++sets;
      defeated += std::all_of(ps.begin(), ps.end(), [&](const Prediction& p) { return defeats(h, p); });
    }
    return json_only(o, Json{{"horizon", horizon}, {"density", min_level_density(t).to_string()},
                             {"homogeneous_sets", sets}, {"defeating_every_prediction", defeated}});
  }
  if (kind == "priority") {
    Json doc = read_json(path);
    auto as = schedules_from_json(doc);
    std::size_t stages = o.stages ? o.stages : doc.value("stages", std::size_t{20});
    return json_only(o, priority_report(priority_build(as, stages), as));
  }
  if (kind == "measure") {
    Json doc = read_json(path);
    auto as = oracles_from_json(doc);
    std::size_t stages = o.stages ? o.stages : doc.value("stages", std::size_t{16});
    return json_only(o, measure_report(measure_build(as, stages)));
  }
  throw InputError("unknown solve kind '" + kind + "'");
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--depth", o.depth, "Depth, horizon or size bound");
  cmd->add_option("--budget", o.budget, "Search budget (nodes or candidates)");
  cmd->add_option("--horizon", o.horizon, "Horizon for trees built from clauses or predictions");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dimacs", "dot"}));
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
  cmd->add_option("--c", o.c, "Measure exponent c");
  cmd->add_option("--count", o.count, "Number of items to generate or check");
  cmd->add_option("--limit", o.limit, "Number of solutions to list");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramkit: homogeneous sets for trees, clause lists and graph colorings"};
  app.require_subcommand(1);
  Options o;
  std::string kind, path;

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("kind", kind, "tree, positive-measure-tree, clauses, graph, tournament, adversary, predictions")->required();
  add_common(gen, o);
  gen->add_option("--vertices", o.vertices, "Vertex count");
  gen->add_option("--events", o.events, "Events per adversary schedule");
  gen->add_option("--adversaries", o.adversaries, "Number of adversaries");
  gen->add_option("--stages", o.stages, "Number of stages");
  gen->add_option("--alphabet", o.alphabet, "Tree alphabet size");
  gen->add_flag("--oracle", o.oracle, "Generate oracle tables instead of schedules");
  gen->add_flag("--bipartite", o.bipartite, "Generate a bipartite graph");

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction; emits the image and its decode table");
  reduce->add_option("name", kind,
                     "localize, kary2bin, pack, fixcolor, chaincode, tourney, tree2cnf, cnf2tree, graph2tree, "
                     "sat2graph, localize-graph, clique")
      ->required();
  reduce->add_option("input", path, "Source instance")->required();
  add_common(reduce, o);
  reduce->add_option("--x", o.x, "Comma-separated positions or vertices");
  reduce->add_option("--g", o.g, "Order function for pack: half or identity");
  reduce->add_option("--k", o.k, "Number of colors");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", kind, "widgets, reductions, adversarial, claims")->required();
  add_common(verify, o);
  verify->add_option("--input", o.input, "A reduce output to rebuild and compare (reductions suite)");
  verify->add_option("--steps", o.steps, "Greedy steps (claims suite)");

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("kind",
                    kind,
                    "homogeneous, colorings, k-homogeneous, sat-homogeneous, transitive, greedy, bad-set, avoidance, "
                    "priority, measure")
      ->required();
  solve->add_option("input", path, "Instance file")->required();
  add_common(solve, o);
  solve->add_option("--k", o.k, "Number of colors");
  solve->add_option("--set", o.h, "Comma-separated vertex set H (k-homogeneous)");
  solve->add_option("--steps", o.steps, "Greedy steps");
  solve->add_option("--stages", o.stages, "Override the stage count of an adversary family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  // Verification reports default to plain text; --format json keeps the document form.
  if (*verify && verify->count("--format") == 0) o.format = "text";

  try {
    std::string text;
    if (*gen) text = cmd_gen(kind, o);
    else if (*reduce) text = cmd_reduce(kind, path, o);
    else if (*verify) text = cmd_verify(kind, o);
    else text = cmd_solve(kind, path, o);
    emit(o, text);
    return 0;
  } catch (const PropertyFailure& e) {
    std::cerr << "property check failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return kExitFail;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
