#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Malformed textual input (cycle notation, subset literals).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured bound (exhaustive sweeps, materialization).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A runtime-checked certificate failed to verify. Must never fire.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kneser
