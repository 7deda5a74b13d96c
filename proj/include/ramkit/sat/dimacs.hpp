#pragma once

#include <sstream>
#include <string>

#include "ramkit/core/errors.hpp"
#include "ramkit/sat/bridge.hpp"

namespace ramkit {

// DIMACS CNF with 1-based variables: atom a_i is variable i+1. Comment
// lines record whether the list is 2-branching and the clause count.
inline std::string clauses_to_dimacs(const ClauseSet& c) {
  std::ostringstream out;
  out << "c ramkit clause list\n";
  out << "c two-branching " << (is_two_branching(c.clauses) ? "yes" : "no") << "\n";
  out << "c atom a_i is variable i+1\n";
  out << "p cnf " << c.atoms << " " << c.clauses.size() << "\n";
  for (const Clause& cl : c.clauses) {
    for (const Literal& l : cl) out << (l.positive ? "" : "-") << (l.atom + 1) << " ";
    out << "0\n";
  }
  return out.str();
}

inline ClauseSet clauses_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  ClauseSet out;
  bool have_header = false;
  std::size_t declared = 0;
  Clause cur;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (have_header || !(ls >> fmt >> out.atoms >> declared) || fmt != "cnf") throw InputError("bad DIMACS header: " + line);
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError("DIMACS clause before the header");
    do {
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) throw InputError("bad DIMACS literal '" + tok + "'");
      } catch (const std::logic_error&) {
        throw InputError("bad DIMACS literal '" + tok + "'");
      }
      if (v == 0) {
        out.clauses.push_back(std::move(cur));
        cur.clear();
      } else {
        std::size_t var = static_cast<std::size_t>(v < 0 ? -v : v);
        if (var > out.atoms) throw InputError("DIMACS literal exceeds the declared variable count");
        cur.push_back(Literal{var - 1, v > 0});
      }
    } while (ls >> tok);
  }
  if (!have_header) throw InputError("DIMACS input has no header");
  if (!cur.empty()) throw InputError("DIMACS clause not terminated by 0");
  if (out.clauses.size() != declared) throw InputError("DIMACS clause count does not match the header");
  return out;
}

}  // namespace ramkit
