#pragma once

// Braid words: parsing, exponent sum, closure combinatorics, reversal and
// mirror. No braid-group rewriting lives here; that is the engine's job.

#include <string>
#include <vector>

#include "cubic/common.hpp"

namespace cubic {

struct Syllable {
  int index;     // generator b_index, index >= 1
  int exponent;  // nonzero
};

class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  // merges adjacent syllables with equal index; drops cancellations
  BraidWord(int strands, const std::vector<Syllable>& syllables);

  int strands() const { return strands_; }
  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }

  std::string str() const;  // back to the text format

 private:
  int strands_;
  std::vector<Syllable> syls_;
};

// Text format: whitespace-separated signed generator indices with an
// optional ^k suffix; "-i" is b_i^{-1}, "i^k" is b_i^k, "-i^k" is b_i^{-k}.
// Strand count defaults to max index + 1; strands_override may raise it.
BraidWord parse_braid(const std::string& text, int strands_override = 0);

struct ClosureData {
  long exponent_sum;
  int components;
  int epsilon;  // 2 iff components odd, else 1
};

long exponent_sum(const BraidWord& w);
ClosureData closure_components(const BraidWord& w);
BraidWord reverse_word(const BraidWord& w);
BraidWord dagger_word(const BraidWord& w);  // mirror: negate every exponent

}  // namespace cubic
