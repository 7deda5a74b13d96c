#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"

namespace ramkit {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline bool is_prefix(const Word& a, const Word& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Length first, then lexicographic.
inline bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline Word prefix_of(const Word& w, std::size_t n) { return Word(w.begin(), w.begin() + n); }

// Alphabets of size at most 10 are written as plain digit strings ("0110");
// larger alphabets separate symbols with '.' ("12.0.7").
inline std::string word_to_string(const Word& w, std::uint32_t alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (alphabet <= 10) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i > 0) out.push_back('.');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

inline Word word_from_string(const std::string& s, std::uint32_t alphabet) {
  Word w;
  if (s.empty()) return w;
  if (alphabet <= 10) {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw InputError("bad symbol '" + std::string(1, ch) + "' in word \"" + s + "\"");
      w.push_back(static_cast<Symbol>(ch - '0'));
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t dot = s.find('.', pos);
    if (dot == std::string::npos) dot = s.size();
    std::string part = s.substr(pos, dot - pos);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("bad dotted word \"" + s + "\"");
    w.push_back(static_cast<Symbol>(std::stoul(part)));
    pos = dot + 1;
  }
  return w;
}

// Binary words written with '0'/'1', used by tests and reports.
inline Word bits(const std::string& s) { return word_from_string(s, 2); }

}  // namespace ramkit
