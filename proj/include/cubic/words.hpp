#pragma once

// Positive braid words with syllable exponents in {1,2}, byte-encoded so
// they can double as cache keys. Index and exponent per syllable.

#include <cstdint>
#include <string>
#include <vector>

#include "cubic/common.hpp"

namespace cubic {

struct PosSyl {
  uint8_t index;  // >= 1
  uint8_t exp;    // 1 or 2
  bool operator==(const PosSyl& o) const { return index == o.index && exp == o.exp; }
};

class PositiveWord {
 public:
  PositiveWord() = default;
  explicit PositiveWord(std::vector<PosSyl> syls) : syls_(std::move(syls)) {}

  const std::vector<PosSyl>& syls() const { return syls_; }
  size_t size() const { return syls_.size(); }
  bool empty() const { return syls_.empty(); }
  const PosSyl& operator[](size_t i) const { return syls_[i]; }

  int max_index() const {
    int m = 0;
    for (const auto& s : syls_) m = std::max(m, int(s.index));
    return m;
  }
  int degree_of(int index) const {
    int d = 0;
    for (const auto& s : syls_) d += (s.index == index) ? s.exp : 0;
    return d;
  }

  std::string key() const {  // bytewise, for hashing
    std::string k;
    k.reserve(2 * syls_.size());
    for (const auto& s : syls_) {
      k.push_back(char(s.index));
      k.push_back(char(s.exp));
    }
    return k;
  }

  std::string str() const {
    std::string out;
    for (const auto& s : syls_) {
      if (!out.empty()) out += " ";
      out += std::to_string(int(s.index));
      if (s.exp != 1) out += "^" + std::to_string(int(s.exp));
    }
    return out.empty() ? "1" : out;
  }

  bool operator==(const PositiveWord& o) const { return syls_ == o.syls_; }
  bool operator<(const PositiveWord& o) const {
    if (syls_.size() != o.syls_.size()) return syls_.size() < o.syls_.size();
    for (size_t i = 0; i < syls_.size(); ++i) {
      if (syls_[i].index != o.syls_[i].index) return syls_[i].index < o.syls_[i].index;
      if (syls_[i].exp != o.syls_[i].exp) return syls_[i].exp < o.syls_[i].exp;
    }
    return false;
  }

 private:
  std::vector<PosSyl> syls_;
};

}  // namespace cubic
