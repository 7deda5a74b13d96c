#pragma once

// Reduction round-trips: build the image instance, enumerate its solutions
// with the brute-force oracles, decode each one and verify the decoded
// object against the source instance, again with the oracles.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ramkit/ramkit.hpp"

namespace roundtrip {

using namespace ramkit;

struct Stats {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  void merge(const Stats& o) {
    instances += o.instances;
    checks += o.checks;
    if (o.failures && !failures) first_failure = o.first_failure;
    failures += o.failures;
  }
};

inline std::string show(const FinTree& t) { return tree_to_json(t).dump(); }

inline std::string show(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

// Runs body and turns library exceptions into recorded failures.
inline void guarded(Stats& st, const std::string& where, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    st.fail(where + ": " + e.what());
  }
}

// localize along X: every homogeneous H0 of the image maps to a set
// homogeneous for T.
inline Stats localize(const FinTree& t, const std::vector<std::size_t>& x) {
  Stats st;
  st.instances = 1;
  guarded(st, "localize " + show(t) + " X=" + show(x), [&] {
    Localization loc = localize_tree(t, x);
    for (const auto& h0 : oracle::homogeneous_sets(loc.image, loc.image.horizon(), loc.image.horizon())) {
      ++st.checks;
      ColorSet h = decode_localized(loc, ColorSet(h0.positions, h0.color));
      if (!oracle::tree_homogeneous(t, h.positions, h.color, t.horizon()))
        st.fail("localize " + show(t) + " X=" + show(x) + " H0=" + show(h0.positions));
    }
  });
  return st;
}

// Largest homogeneous set of the tree below its horizon, first in
// enumeration order among the largest.
inline oracle::HomSet largest_homogeneous(const FinTree& t) {
  oracle::HomSet best;
  bool have = false;
  for (const auto& h : oracle::homogeneous_sets(t, t.horizon(), t.horizon()))
    if (!have || h.positions.size() > best.positions.size()) {
      best = h;
      have = true;
    }
  return best;
}

// kary2bin: pad to 2^k symbols, spread over k binary digits, then run k
// localize-and-refine steps. Every solution of the first localized image is
// carried through; later steps take the largest solution. The decoded set
// must be homogeneous for the source tree.
inline Stats kary2bin(const FinTree& t) {
  Stats st;
  st.instances = 1;
  guarded(st, "kary2bin " + show(t), [&] {
    PaddedTree pad = pad_alphabet(t);
    const unsigned k = pad.bits;
    FinTree s0 = kary_to_binary(pad.tree);
    std::vector<std::size_t> x0 = kary_initial_positions(k, s0.horizon());
    Localization first = localize_tree(s0, x0);
    for (const auto& start : oracle::homogeneous_sets(first.image, first.image.horizon(), first.image.horizon())) {
      ++st.checks;
      FinTree s = s0;
      Localization loc = first;
      oracle::HomSet h0 = start;
      std::vector<Symbol> colors;
      ColorSet hl;
      for (unsigned l = 0; l < k; ++l) {
        if (l > 0) h0 = largest_homogeneous(loc.image);
        hl = decode_localized(loc, ColorSet(h0.positions, h0.color));
        colors.push_back(hl.color);
        if (l + 1 == k) break;
        KaryStep step = kary_refine_step(s, hl, l, k);
        s = step.next;
        loc = localize_tree(s, step.positions);
      }
      ColorSet h = unpad_color(pad, decode_kary(hl, colors, k));
      if (!oracle::tree_homogeneous(t, h.positions, h.color, t.horizon()))
        st.fail("kary2bin " + show(t) + " start=" + show(start.positions));
    }
  });
  return st;
}

// pack: every horizon node of the image restricted to its full domain and
// to `samples` seeded everywhere-packed subdomains decodes to a node of T
// that agrees with it blockwise.
inline Stats pack(const FinTree& t, const OrderFunction& g, const std::string& gname, std::size_t samples,
                  std::uint64_t seed) {
  Stats st;
  st.instances = 1;
  guarded(st, "pack/" + gname + " " + show(t), [&] {
    PackedTree p = pack_redundant(t, g);
    const std::size_t hz = p.image.horizon();
    Rng rng(seed);
    for (const Word& w : p.image.level(hz)) {
      std::vector<PartialHom> hs;
      PartialHom full;
      for (std::size_t i = 0; i < hz; ++i) full.entries[i] = w[i];
      hs.push_back(full);
      for (std::size_t k = 0; k < samples; ++k) {
        PartialHom h;
        for (std::size_t i = 0; i < hz; ++i)
          if (rng.chance(2, 3)) h.entries[i] = w[i];
        if (everywhere_packed(h, p.seq, hz)) hs.push_back(h);
      }
      for (const PartialHom& h : hs) {
        ++st.checks;
        if (!oracle::func_homogeneous(p.image, h.entries, hz)) {
          st.fail("pack/" + gname + ": oracle rejects a restriction of a horizon node");
          continue;
        }
        Word f = decode_packed(h, p);
        bool ok = t.contains(f);
        for (std::size_t j = 0; ok && j < f.size(); ++j)
          for (std::size_t i = p.seq.u[j]; i < p.seq.u[j + 1] && i < hz; ++i)
            if (f[j] != w[i]) ok = false;
        if (!ok) st.fail("pack/" + gname + " " + show(t) + " node " + word_to_string(w, 2));
      }
    }
  });
  return st;
}

// fixcolor: every color-0 homogeneous set of the fixed-color tree decodes
// to a node of S extending each enumerated word it names.
inline Stats fixcolor(const FinTree& s) {
  Stats st;
  st.instances = 1;
  guarded(st, "fixcolor " + show(s), [&] {
    FinTree t = fixed_color_tree(s);
    LengthLexEnum en(2);
    for (const auto& h : oracle::homogeneous_sets(t, t.horizon(), t.horizon())) {
      if (h.color != 0) continue;
      ++st.checks;
      Word f = decode_fixed_color(ColorSet(h.positions, 0), s);
      bool ok = s.contains(f);
      for (std::size_t i : h.positions)
        if (!is_prefix(en.word_at(i), f)) ok = false;
      if (!ok) st.fail("fixcolor " + show(s) + " H=" + show(h.positions));
    }
  });
  return st;
}

// chaincode: every homogeneous partial function of the coded tree (the
// restrictions of its horizon nodes) decodes to a node of T.
inline Stats chaincode(const FinTree& t) {
  Stats st;
  st.instances = 1;
  guarded(st, "chaincode " + show(t), [&] {
    ChainCoded c = chain_code_tree(t);
    const std::size_t hz = c.image.horizon();
    for (const Word& w : c.image.level(hz))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << hz); ++mask) {
        PartialHom h;
        for (std::size_t i = 0; i < hz; ++i)
          if (mask >> i & 1) h.entries[i] = w[i];
        ++st.checks;
        Word f = decode_chain_code(h, c, t);
        bool ok = t.contains(f);
        if (mask + 1 == (std::uint64_t{1} << hz)) ok = ok && f.size() + 1 == hz;
        if (!ok) st.fail("chaincode " + show(t) + " node " + word_to_string(w, c.image.alphabet()));
      }
  });
  return st;
}

// tree2cnf: every sat-homogeneous (atoms, value) for the clause image
// decodes to a set homogeneous for T.
inline Stats tree2cnf(const FinTree& t) {
  Stats st;
  st.instances = 1;
  guarded(st, "tree2cnf " + show(t), [&] {
    ClauseSet cs = tree_to_clauses(t);
    const std::size_t d = t.horizon();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      std::vector<std::size_t> atoms;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1) atoms.push_back(i);
      for (bool v : {false, true}) {
        if (!oracle::clauses_homogeneous(cs.clauses, atoms, v)) continue;
        ++st.checks;
        ColorSet h = decode_sat_hom(SatHomSet(atoms, v));
        if (!oracle::tree_homogeneous(t, h.positions, h.color, d))
          st.fail("tree2cnf " + show(t) + " atoms=" + show(atoms));
      }
    }
  });
  return st;
}

// cnf2tree: every homogeneous set of the formula tree is sat-homogeneous
// for the leading formulas whose atoms all lie below the horizon.
inline Stats cnf2tree(const ClauseSet& cs, std::size_t horizon) {
  Stats st;
  st.instances = 1;
  guarded(st, "cnf2tree", [&] {
    std::vector<PropFormula> fs;
    for (const Clause& c : cs.clauses) fs.push_back(clause_formula(c));
    FinTree t = formulas_to_tree(fs, horizon);
    std::vector<Clause> lead;
    for (std::size_t i = 0; i < horizon && i < cs.clauses.size(); ++i) {
      bool inside = true;
      for (const Literal& l : cs.clauses[i]) inside = inside && l.atom < horizon;
      if (!inside) break;
      lead.push_back(cs.clauses[i]);
    }
    for (const auto& h : oracle::homogeneous_sets(t, horizon, horizon)) {
      ++st.checks;
      if (!oracle::clauses_homogeneous(lead, h.positions, h.color == 1))
        st.fail("cnf2tree H=" + show(h.positions) + " color " + std::to_string(h.color));
    }
  });
  return st;
}

// graph2tree: every homogeneous set of the coloring tree decodes to a
// vertex set with a proper witness coloring putting it on one color, and
// the oracle agrees that such a coloring exists.
inline Stats graph2tree(const Graph& g, int k) {
  Stats st;
  st.instances = 1;
  guarded(st, "graph2tree", [&] {
    ColoringTree ct = graph_to_coloring_tree(g, k);
    for (const auto& h0 : oracle::homogeneous_sets(ct.tree, ct.tree.horizon(), ct.tree.horizon())) {
      ++st.checks;
      DecodedColoring d = decode_coloring_tree(g, ct, ColorSet(h0.positions, h0.color));
      bool ok = oracle::proper(g, d.witness) && oracle::coloring_with_class(g, k, d.vertices).has_value();
      for (Vertex v : d.vertices) ok = ok && d.witness[v] == 0;
      if (!ok) st.fail("graph2tree H0=" + show(h0.positions) + " edges " + edges_to_json(g).dump());
    }
  });
  return st;
}

// sat2graph: for every model of the clauses (found by brute force), the
// oracle extends the literal coloring to a proper 3-coloring of the
// compiled graph; each color class, and each class together with its
// truth vertex, is 3-homogeneous and decodes to a sat-homogeneous set.
inline Stats sat2graph(const ClauseSet& cs) {
  Stats st;
  st.instances = 1;
  guarded(st, "sat2graph", [&] {
    CompiledGraph cg = compile_clauses(cs);
    const Graph& g = cg.graph();
    const std::size_t atoms = cg.atoms;
    std::set<std::vector<Vertex>> seen;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms); ++m) {
      std::vector<bool> v(atoms);
      for (std::size_t i = 0; i < atoms; ++i) v[i] = (m >> i) & 1;
      bool model = true;
      for (const Clause& c : cg.clauses) model = model && oracle::clause_holds(c, v);
      if (!model) continue;
      // A true literal shares the color of truth vertex 1, a false one that
      // of truth vertex 0. The oracle sees these pins as extra edges to the
      // other two truth vertices.
      Graph aux = g;
      for (std::size_t a = 0; a < atoms; ++a) {
        Vertex pos = CompiledGraph::literal_vertex(a, true), neg = CompiledGraph::literal_vertex(a, false);
        aux.add_edge(pos, v[a] ? 0 : 1);
        aux.add_edge(neg, v[a] ? 1 : 0);
      }
      auto full = oracle::coloring_with_class(aux, 3, {});
      ++st.checks;
      if (!full) {
        st.fail("sat2graph: model " + std::to_string(m) + " has no extending 3-coloring");
        continue;
      }
      for (int t = 0; t < 3; ++t) {
        std::vector<Vertex> h;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          if ((*full)[u] == (*full)[t]) h.push_back(u);
        std::vector<Vertex> no_truth;
        for (Vertex u : h)
          if (u >= 3) no_truth.push_back(u);
        for (const auto& cand : {h, no_truth}) {
          if (cand.empty() || !seen.insert(cand).second) continue;
          ++st.checks;
          DecodedSatHom d = decode_homogeneous(cg, cand);
          if (!oracle::clauses_homogeneous(cg.clauses, d.set.atoms, d.set.value))
            st.fail("sat2graph: decoded set of class " + std::to_string(t) + " is not sat-homogeneous");
        }
      }
    }
  });
  return st;
}

}  // namespace roundtrip
