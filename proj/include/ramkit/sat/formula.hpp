#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"

namespace ramkit {

struct Literal {
  std::size_t atom = 0;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

// Truth values of atoms 0, 1, 2, ...; atoms beyond the vector are unassigned.
using Assignment = std::vector<bool>;

// Propositional formula over atoms a_0, a_1, ... built from the connectives
// not, and, or, implies.
struct PropFormula {
  enum class Op { kAtom, kNot, kAnd, kOr, kImplies };
  Op op = Op::kAtom;
  std::size_t atom = 0;
  std::vector<PropFormula> args;

  static PropFormula var(std::size_t a) { return PropFormula{Op::kAtom, a, {}}; }
  static PropFormula negation(PropFormula f) { return PropFormula{Op::kNot, 0, {std::move(f)}}; }
  static PropFormula conj(PropFormula a, PropFormula b) { return PropFormula{Op::kAnd, 0, {std::move(a), std::move(b)}}; }
  static PropFormula disj(PropFormula a, PropFormula b) { return PropFormula{Op::kOr, 0, {std::move(a), std::move(b)}}; }
  static PropFormula implies(PropFormula a, PropFormula b) {
    return PropFormula{Op::kImplies, 0, {std::move(a), std::move(b)}};
  }

  friend bool operator==(const PropFormula&, const PropFormula&) = default;
};

// Largest atom index plus one (0 for a formula without atoms, which cannot occur).
inline std::size_t atom_span(const PropFormula& f) {
  if (f.op == PropFormula::Op::kAtom) return f.atom + 1;
  std::size_t m = 0;
  for (const auto& a : f.args) m = std::max(m, atom_span(a));
  return m;
}

// Evaluates a formula whose atoms are all assigned.
inline bool eval_total(const PropFormula& f, const Assignment& v) {
  switch (f.op) {
    case PropFormula::Op::kAtom: return v.at(f.atom);
    case PropFormula::Op::kNot: return !eval_total(f.args[0], v);
    case PropFormula::Op::kAnd: return eval_total(f.args[0], v) && eval_total(f.args[1], v);
    case PropFormula::Op::kOr: return eval_total(f.args[0], v) || eval_total(f.args[1], v);
    case PropFormula::Op::kImplies: return !eval_total(f.args[0], v) || eval_total(f.args[1], v);
  }
  return false;
}

// Value under a partial assignment: undefined (nullopt) as soon as the
// formula mentions an unassigned atom, regardless of the other atoms.
inline std::optional<bool> eval_partial(const PropFormula& f, const Assignment& v) {
  if (atom_span(f) > v.size()) return std::nullopt;
  return eval_total(f, v);
}

inline PropFormula literal_formula(const Literal& l) {
  return l.positive ? PropFormula::var(l.atom) : PropFormula::negation(PropFormula::var(l.atom));
}

inline PropFormula clause_formula(const Clause& c) {
  if (c.empty()) throw InputError("the empty clause has no formula form");
  PropFormula f = literal_formula(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) f = PropFormula::disj(literal_formula(c[i]), std::move(f));
  return f;
}

// Prefix notation, one formula per line: "or a0 not a1", "imp a2 and a0 a1".
inline std::string formula_to_text(const PropFormula& f) {
  switch (f.op) {
    case PropFormula::Op::kAtom: return "a" + std::to_string(f.atom);
    case PropFormula::Op::kNot: return "not " + formula_to_text(f.args[0]);
    case PropFormula::Op::kAnd: return "and " + formula_to_text(f.args[0]) + " " + formula_to_text(f.args[1]);
    case PropFormula::Op::kOr: return "or " + formula_to_text(f.args[0]) + " " + formula_to_text(f.args[1]);
    case PropFormula::Op::kImplies: return "imp " + formula_to_text(f.args[0]) + " " + formula_to_text(f.args[1]);
  }
  return {};
}

namespace detail {
inline PropFormula parse_prefix(const std::vector<std::string>& tok, std::size_t& pos) {
  if (pos >= tok.size()) throw InputError("formula ends early");
  const std::string& t = tok[pos++];
  if (t == "not") return PropFormula::negation(parse_prefix(tok, pos));
  if (t == "and" || t == "or" || t == "imp") {
    PropFormula a = parse_prefix(tok, pos);
    PropFormula b = parse_prefix(tok, pos);
    if (t == "and") return PropFormula::conj(std::move(a), std::move(b));
    if (t == "or") return PropFormula::disj(std::move(a), std::move(b));
    return PropFormula::implies(std::move(a), std::move(b));
  }
  if (t.size() >= 2 && t[0] == 'a' && std::all_of(t.begin() + 1, t.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return PropFormula::var(std::stoul(t.substr(1)));
  throw InputError("unknown formula token '" + t + "'");
}
}  // namespace detail

inline PropFormula formula_from_text(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  std::size_t pos = 0;
  PropFormula f = detail::parse_prefix(tok, pos);
  if (pos != tok.size()) throw InputError("trailing tokens after formula: " + line);
  return f;
}

// Blank lines and lines starting with '#' are skipped.
inline std::vector<PropFormula> formula_list_from_text(const std::string& text) {
  std::vector<PropFormula> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(formula_from_text(line));
  }
  return out;
}

inline std::string formula_list_to_text(const std::vector<PropFormula>& fs) {
  std::string out;
  for (const auto& f : fs) out += formula_to_text(f) + "\n";
  return out;
}

}  // namespace ramkit
