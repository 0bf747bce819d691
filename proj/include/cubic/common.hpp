#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cubic {

using Rat = mpq_class;

enum class Family { TypeI, TypeII };

struct CubicError : std::runtime_error {
  explicit CubicError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : CubicError {
  explicit ParseError(const std::string& msg) : CubicError(msg) {}
};

struct EngineError : CubicError {
  explicit EngineError(const std::string& msg) : CubicError(msg) {}
};

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace cubic
