#include "cubic/braid.hpp"

#include <numeric>
#include <sstream>

namespace cubic {

BraidWord::BraidWord(int strands, const std::vector<Syllable>& syllables) {
  int maxidx = 0;
  for (const auto& s : syllables) {
    if (s.index < 1) throw ParseError("generator index must be >= 1");
    maxidx = std::max(maxidx, s.index);
  }
  int minimum = maxidx + 1;
  if (strands == 0) strands = minimum;
  if (strands < minimum)
    throw ParseError("strand count " + std::to_string(strands) + " too small for b_" +
                     std::to_string(maxidx));
  strands_ = std::max(strands, 1);
  for (const auto& s : syllables) {
    if (s.exponent == 0) continue;
    if (!syls_.empty() && syls_.back().index == s.index) {
      syls_.back().exponent += s.exponent;
      if (syls_.back().exponent == 0) syls_.pop_back();
    } else {
      syls_.push_back(s);
    }
  }
}

std::string BraidWord::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syls_) {
    if (!first) os << " ";
    first = false;
    os << (s.exponent < 0 ? -s.index : s.index);
    int a = std::abs(s.exponent);
    if (a != 1) os << "^" << a;
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text, int strands_override) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Syllable> syls;
  while (is >> tok) {
    size_t caret = tok.find('^');
    std::string head = caret == std::string::npos ? tok : tok.substr(0, caret);
    long idx;
    try {
      size_t used = 0;
      idx = std::stol(head, &used);
      if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
      throw ParseError("malformed braid token: '" + tok + "'");
    }
    if (idx == 0) throw ParseError("generator index 0 in braid word");
    long k = 1;
    if (caret != std::string::npos) {
      std::string tail = tok.substr(caret + 1);
      try {
        size_t used = 0;
        k = std::stol(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(tail);
      } catch (const std::exception&) {
        throw ParseError("malformed exponent in braid token: '" + tok + "'");
      }
      if (k <= 0) throw ParseError("exponent suffix must be positive in '" + tok + "'");
    }
    int sign = idx < 0 ? -1 : 1;
    syls.push_back({int(std::labs(idx)), int(sign * k)});
  }
  return BraidWord(strands_override, syls);
}

long exponent_sum(const BraidWord& w) {
  long e = 0;
  for (const auto& s : w.syllables()) e += s.exponent;
  return e;
}

ClosureData closure_components(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // apply the underlying permutation syllable by syllable
  for (const auto& s : w.syllables()) {
    if (std::abs(s.exponent) % 2 == 0) continue;
    int i = s.index - 1;  // swaps strands i, i+1
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  ClosureData cd;
  cd.exponent_sum = exponent_sum(w);
  cd.components = cycles;
  cd.epsilon = (cycles % 2 == 1) ? 2 : 1;
  return cd;
}

BraidWord reverse_word(const BraidWord& w) {
  std::vector<Syllable> syls(w.syllables().rbegin(), w.syllables().rend());
  return BraidWord(w.strands(), syls);
}

BraidWord dagger_word(const BraidWord& w) {
  std::vector<Syllable> syls = w.syllables();
  for (auto& s : syls) s.exponent = -s.exponent;
  return BraidWord(w.strands(), syls);
}

}  // namespace cubic
