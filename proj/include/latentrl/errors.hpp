#pragma once

#include <stdexcept>
#include <string>

namespace latentrl {

// Domain errors. Each maps to one failure class named in the module
// contracts; the CLI maps them onto exit codes (see io.hpp).

struct GrammarViolation : std::runtime_error {
  explicit GrammarViolation(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SequenceTooLong : std::runtime_error {
  explicit SequenceTooLong(const std::string& what) : std::runtime_error(what) {}
};

struct LatentPosition : std::runtime_error {
  explicit LatentPosition(const std::string& what) : std::runtime_error(what) {}
};

struct NoLatentSpan : std::runtime_error {
  explicit NoLatentSpan(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteGradient : std::runtime_error {
  explicit NonFiniteGradient(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteObjective : std::runtime_error {
  explicit NonFiniteObjective(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteLoss : std::runtime_error {
  explicit NonFiniteLoss(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySet : std::runtime_error {
  explicit EmptySet(const std::string& what) : std::runtime_error(what) {}
};

struct MissingColumns : std::runtime_error {
  explicit MissingColumns(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct CheckpointVersionMismatch : std::runtime_error {
  explicit CheckpointVersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latentrl
