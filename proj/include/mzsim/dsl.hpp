#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzsim/scenarios.hpp"

namespace mzsim {

// Text language for interferometer experiments (.mzc files):
//
//   # optional title comment
//   source { alpha = pi/4 }
//   right = [bs, phase(pi/3), bs]
//   left  = [bs, phase(0), bs]
//
// Elements are listed in application order; `#` starts a line comment.

enum class TokenKind { identifier, number, punctuation, keyword };

struct Token {
  TokenKind kind;
  std::string text;
  int line;    // 1-based
  int column;  // 1-based
};

struct ElementDesc {
  enum class Kind { bs, phase };
  Kind kind;
  double theta = 0.0;

  bool operator==(const ElementDesc&) const = default;
};

struct CircuitSpec {
  std::optional<double> alpha;
  std::optional<double> concurrence;
  std::vector<ElementDesc> right_arm;
  std::vector<ElementDesc> left_arm;
  std::optional<std::string> title;

  bool operator==(const CircuitSpec&) const = default;
};

// Syntax error pointing at a real input location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column, std::string snippet);

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& snippet() const { return snippet_; }

 private:
  std::string message_;
  int line_ = 0;
  int column_ = 0;
  std::string snippet_;
};

// Constraint violation in a syntactically valid file.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Token> tokenize(std::string_view input);

// Parses and validates. The input text is needed for error snippets and the
// leading-comment title.
CircuitSpec parse_circuit(std::string_view input);

// Parse without validation (round-trip and error-reporting tests use this).
CircuitSpec parse_circuit_unvalidated(std::string_view input);

void validate(const CircuitSpec& spec);

// Emits canonical text that reparses to a field-identical spec.
std::string render(const CircuitSpec& spec);

// Builds per-arm compose chains, tensors them, evolves the source state
// (correlated_pair_state for alpha, state_from_concurrence for concurrence)
// and returns detector statistics.
std::pair<JointAmplitudes, JointProbabilities> compile_and_run(const CircuitSpec& spec);

}  // namespace mzsim
