//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <stdexcept>
#include <string>

namespace qicsel {

/// Malformed or out-of-contract input: text, JSON schema, CLI arguments.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The interaction pattern cannot be embedded into the coupling map.
class NoEmbeddingError : public std::runtime_error {
 public:
  explicit NoEmbeddingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure while executing circuits: missing noise entries, reference outcome
/// not deterministic, unsupported gate reaching the engine.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qicsel
