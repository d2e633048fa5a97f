#include "mzsim/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mzsim/elements.hpp"
#include "mzsim/numformat.hpp"

namespace mzsim {

namespace {

std::string source_line(std::string_view input, int line) {
  int current = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= input.size(); ++i) {
    if (i == input.size() || input[i] == '\n') {
      if (current == line) return std::string(input.substr(start, i - start));
      start = i + 1;
      ++current;
    }
  }
  return {};
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

ParseError::ParseError(std::string message, int line, int column, std::string snippet)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      message_(std::move(message)),
      line_(line),
      column_(column),
      snippet_(std::move(snippet)) {}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < input.size() && input[i] != '\n') ++i;
      continue;
    }
    const int tok_line = line, tok_col = column;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < input.size() && is_ident_char(input[j])) ++j;
      tokens.push_back({TokenKind::identifier, std::string(input.substr(i, j - i)),
                        tok_line, tok_col});
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < input.size() && is_digit(input[i + 1]))) {
      std::size_t j = i;
      while (j < input.size() && is_digit(input[j])) ++j;
      if (j < input.size() && input[j] == '.') {
        ++j;
        while (j < input.size() && is_digit(input[j])) ++j;
      }
      if (j < input.size() && (input[j] == 'e' || input[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < input.size() && (input[k] == '+' || input[k] == '-')) ++k;
        if (k < input.size() && is_digit(input[k])) {
          while (k < input.size() && is_digit(input[k])) ++k;
          j = k;
        }
      }
      tokens.push_back({TokenKind::number, std::string(input.substr(i, j - i)),
                        tok_line, tok_col});
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::string_view("=[](),*/-{}").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::punctuation, std::string(1, c), tok_line, tok_col});
      ++column;
      ++i;
      continue;
    }
    throw ParseError("illegal character '" + std::string(1, c) + "'", tok_line, tok_col,
                     source_line(input, tok_line));
  }
  return tokens;
}

namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view input)
      : tokens_(std::move(tokens)), input_(input) {}

  CircuitSpec parse() {
    CircuitSpec spec;
    spec.title = leading_title();
    parse_source_block(spec);
    parse_arm(spec);
    parse_arm(spec);
    if (pos_ < tokens_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      throw ParseError(message + ", got '" + t.text + "'", t.line, t.column,
                       source_line(input_, t.line));
    }
    int line = 1, column = 1;
    if (!tokens_.empty()) {
      line = tokens_.back().line;
      column = tokens_.back().column + static_cast<int>(tokens_.back().text.size());
    }
    throw ParseError(message + ", got end of input", line, column, source_line(input_, line));
  }

  const Token& peek() {
    if (pos_ >= tokens_.size()) fail("unexpected end of input");
    return tokens_[pos_];
  }

  Token expect_punct(std::string_view text) {
    const Token& t = peek();
    if (t.kind != TokenKind::punctuation || t.text != text)
      fail("expected '" + std::string(text) + "'");
    return tokens_[pos_++];
  }

  Token expect_ident() {
    const Token& t = peek();
    if (t.kind != TokenKind::identifier) fail("expected identifier");
    return tokens_[pos_++];
  }

  bool try_punct(std::string_view text) {
    if (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::punctuation &&
        tokens_[pos_].text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<std::string> leading_title() {
    // A comment line before any token becomes the title.
    for (std::size_t i = 0; i < input_.size(); ++i) {
      const char c = input_[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
      if (c != '#') return std::nullopt;
      std::size_t end = input_.find('\n', i);
      if (end == std::string_view::npos) end = input_.size();
      std::string text(input_.substr(i + 1, end - i - 1));
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos) return std::nullopt;
      const auto last = text.find_last_not_of(" \t\r");
      return text.substr(first, last - first + 1);
    }
    return std::nullopt;
  }

  double parse_decimal_token() {
    const Token& t = peek();
    if (t.kind != TokenKind::number) fail("expected number");
    ++pos_;
    double v = 0.0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
      --pos_;
      fail("malformed number");
    }
    return v;
  }

  // num := [-] (decimal | pi | decimal * pi | pi / decimal | decimal * pi / decimal)
  double parse_num() {
    double sign = try_punct("-") ? -1.0 : 1.0;
    const Token& t = peek();
    if (t.kind == TokenKind::identifier) {
      if (t.text != "pi") fail("expected number or 'pi'");
      ++pos_;
      double denom = 1.0;
      if (try_punct("/")) denom = parse_decimal_token();
      if (denom == 0.0) fail("division by zero");
      return sign * std::numbers::pi / denom;
    }
    double v = parse_decimal_token();
    if (try_punct("*")) {
      const Token& p = peek();
      if (p.kind != TokenKind::identifier || p.text != "pi") fail("expected 'pi' after '*'");
      ++pos_;
      double denom = 1.0;
      if (try_punct("/")) denom = parse_decimal_token();
      if (denom == 0.0) fail("division by zero");
      v = v * std::numbers::pi / denom;
    }
    return sign * v;
  }

  void parse_source_block(CircuitSpec& spec) {
    const Token kw = expect_ident();
    if (kw.text != "source") {
      --pos_;
      fail("expected 'source'");
    }
    expect_punct("{");
    while (!try_punct("}")) {
      const Token name = expect_ident();
      if (name.text != "alpha" && name.text != "concurrence") {
        --pos_;
        fail("expected 'alpha' or 'concurrence'");
      }
      expect_punct("=");
      const double value = parse_num();
      if (name.text == "alpha") {
        spec.alpha = value;
      } else {
        spec.concurrence = value;
      }
    }
  }

  void parse_arm(CircuitSpec& spec) {
    const Token name = expect_ident();
    if (name.text != "right" && name.text != "left") {
      --pos_;
      fail("expected 'right' or 'left'");
    }
    expect_punct("=");
    expect_punct("[");
    std::vector<ElementDesc> elements;
    if (!try_punct("]")) {
      elements.push_back(parse_element());
      while (try_punct(",")) elements.push_back(parse_element());
      expect_punct("]");
    }
    auto& slot = name.text == "right" ? spec.right_arm : spec.left_arm;
    if (!slot.empty()) {
      throw ParseError("duplicate arm '" + name.text + "'", name.line, name.column,
                       source_line(input_, name.line));
    }
    slot = std::move(elements);
  }

  ElementDesc parse_element() {
    const Token t = expect_ident();
    if (t.text == "bs") return ElementDesc{ElementDesc::Kind::bs, 0.0};
    if (t.text == "phase") {
      expect_punct("(");
      const double theta = parse_num();
      expect_punct(")");
      return ElementDesc{ElementDesc::Kind::phase, theta};
    }
    --pos_;
    fail("expected 'bs' or 'phase'");
  }

  std::vector<Token> tokens_;
  std::string_view input_;
  std::size_t pos_ = 0;
};

}  // namespace

CircuitSpec parse_circuit_unvalidated(std::string_view input) {
  return Parser(tokenize(input), input).parse();
}

CircuitSpec parse_circuit(std::string_view input) {
  CircuitSpec spec = parse_circuit_unvalidated(input);
  validate(spec);
  return spec;
}

void validate(const CircuitSpec& spec) {
  if (spec.alpha && spec.concurrence)
    throw ValidationError("both alpha and concurrence present");
  if (!spec.alpha && !spec.concurrence)
    throw ValidationError("source needs alpha or concurrence");
  if (spec.concurrence && !(*spec.concurrence >= 0.0 && *spec.concurrence <= 1.0))
    throw ValidationError("concurrence out of range");
  if (spec.alpha && !std::isfinite(*spec.alpha))
    throw ValidationError("alpha must be finite");
  for (const auto* arm : {&spec.right_arm, &spec.left_arm}) {
    const char* name = arm == &spec.right_arm ? "right" : "left";
    if (arm->empty()) throw ValidationError(std::string("empty arm: ") + name);
    int phases = 0;
    for (const auto& e : *arm)
      if (e.kind == ElementDesc::Kind::phase) ++phases;
    if (phases > 1)
      throw ValidationError(std::string("more than one phase element in arm: ") + name);
  }
}

std::string render(const CircuitSpec& spec) {
  std::ostringstream out;
  if (spec.title) out << "# " << *spec.title << "\n";
  out << "source { ";
  if (spec.alpha) out << "alpha = " << format_double(*spec.alpha);
  if (spec.concurrence) {
    if (spec.alpha) out << " ";
    out << "concurrence = " << format_double(*spec.concurrence);
  }
  out << " }\n";
  for (const auto* arm : {&spec.right_arm, &spec.left_arm}) {
    out << (arm == &spec.right_arm ? "right" : "left") << " = [";
    for (std::size_t i = 0; i < arm->size(); ++i) {
      if (i) out << ", ";
      const auto& e = (*arm)[i];
      if (e.kind == ElementDesc::Kind::bs) {
        out << "bs";
      } else {
        out << "phase(" << format_double(e.theta) << ")";
      }
    }
    out << "]\n";
  }
  return out.str();
}

namespace {

Mat2 arm_transfer(const std::vector<ElementDesc>& arm) {
  ElementSequence seq;
  seq.reserve(arm.size());
  for (const auto& e : arm) {
    if (e.kind == ElementDesc::Kind::bs) {
      seq.push_back(bs_5050());
    } else {
      seq.push_back(make_retarder(e.theta));
    }
  }
  return compose(seq);
}

// Recognizes the two canonical arm shapes for metadata purposes only.
std::optional<ScenarioKind> classify(const CircuitSpec& spec) {
  const auto shape = [](const std::vector<ElementDesc>& arm) -> std::optional<ScenarioKind> {
    const auto is_bs = [](const ElementDesc& e) { return e.kind == ElementDesc::Kind::bs; };
    if (arm.size() == 1 && is_bs(arm[0])) return ScenarioKind::p_bs;
    if (arm.size() == 2 && !is_bs(arm[0]) && is_bs(arm[1])) return ScenarioKind::p_bs;
    if (arm.size() == 2 && is_bs(arm[0]) && is_bs(arm[1])) return ScenarioKind::bs_p_bs;
    if (arm.size() == 3 && is_bs(arm[0]) && !is_bs(arm[1]) && is_bs(arm[2]))
      return ScenarioKind::bs_p_bs;
    return std::nullopt;
  };
  const auto r = shape(spec.right_arm);
  const auto l = shape(spec.left_arm);
  if (r && l && *r == *l) return *r;
  return std::nullopt;
}

double arm_phase(const std::vector<ElementDesc>& arm) {
  for (const auto& e : arm)
    if (e.kind == ElementDesc::Kind::phase) return e.theta;
  return 0.0;
}

}  // namespace

std::pair<JointAmplitudes, JointProbabilities> compile_and_run(const CircuitSpec& spec) {
  const TwoQuantonState source =
      spec.alpha ? correlated_pair_state(*spec.alpha) : state_from_concurrence(*spec.concurrence);
  const Mat4 evolution = kron(arm_transfer(spec.right_arm), arm_transfer(spec.left_arm));
  const Vec4 out = apply(evolution, source.amps);
  const JointAmplitudes amps{out[0], out[3], out[1], out[2]};
  JointProbabilities jp{std::norm(amps.a00), std::norm(amps.a11), std::norm(amps.a01),
                        std::norm(amps.a10), classify(spec),
                        concurrence_of_pure_state(source.amps),
                        PhasePair{arm_phase(spec.right_arm), arm_phase(spec.left_arm)}};
  return {amps, jp};
}

}  // namespace mzsim
