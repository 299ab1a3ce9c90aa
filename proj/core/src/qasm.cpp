//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#include "qasm.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "qicsel/errors.hpp"

namespace qicsel {
namespace {

enum class TokKind { Ident, Number, String, Symbol, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_;

  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void bump() {
    if (at(pos_) == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(at(pos_)))) bump();
      if (at(pos_) == '/' && at(pos_ + 1) == '/') {
        while (pos_ < src_.size() && at(pos_) != '\n') bump();
        continue;
      }
      break;
    }
  }

  void advance() {
    skip_space_and_comments();
    current_ = Token{TokKind::End, "", line_, col_};
    if (pos_ >= src_.size()) return;

    const char c = at(pos_);
    current_.line = line_;
    current_.col = col_;

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(at(pos_))) || at(pos_) == '_')) {
        text += at(pos_);
        bump();
      }
      current_ = Token{TokKind::Ident, text, current_.line, current_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string text;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(at(pos_))) ||
                                    at(pos_) == '.' || at(pos_) == 'e' || at(pos_) == 'E' ||
                                    ((at(pos_) == '+' || at(pos_) == '-') &&
                                     (text.ends_with('e') || text.ends_with('E'))))) {
        text += at(pos_);
        bump();
      }
      current_ = Token{TokKind::Number, text, current_.line, current_.col};
      return;
    }
    if (c == '"') {
      bump();
      std::string text;
      while (pos_ < src_.size() && at(pos_) != '"') {
        text += at(pos_);
        bump();
      }
      if (at(pos_) != '"')
        throw ParseError("qasm " + std::to_string(current_.line) + ":" +
                         std::to_string(current_.col) + ": unterminated string literal");
      bump();
      current_ = Token{TokKind::String, text, current_.line, current_.col};
      return;
    }
    if (c == '-' && at(pos_ + 1) == '>') {
      bump();
      bump();
      current_ = Token{TokKind::Symbol, "->", current_.line, current_.col};
      return;
    }
    bump();
    current_ = Token{TokKind::Symbol, std::string(1, c), current_.line, current_.col};
  }
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError("qasm " + std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  UserCircuit run() {
    expect_header();
    while (lex_.peek().kind != TokKind::End) statement();
    circuit_.validate();
    return circuit_;
  }

 private:
  Lexer lex_;
  UserCircuit circuit_;
  std::string qreg_name_;
  bool have_qreg_ = false;
  std::map<std::string, int> cregs_;

  Token expect_symbol(const std::string& sym) {
    Token t = lex_.next();
    if (t.kind != TokKind::Symbol || t.text != sym)
      fail(t, "expected '" + sym + "', got '" + t.text + "'");
    return t;
  }

  Token expect_ident() {
    Token t = lex_.next();
    if (t.kind != TokKind::Ident) fail(t, "expected an identifier, got '" + t.text + "'");
    return t;
  }

  int expect_uint() {
    Token t = lex_.next();
    if (t.kind != TokKind::Number || t.text.find_first_not_of("0123456789") != std::string::npos)
      fail(t, "expected a non-negative integer, got '" + t.text + "'");
    return std::stoi(t.text);
  }

  void expect_header() {
    Token t = lex_.next();
    if (t.kind != TokKind::Ident || t.text != "OPENQASM") fail(t, "expected 'OPENQASM 2.0' header");
    Token v = lex_.next();
    if (v.kind != TokKind::Number || v.text != "2.0")
      fail(v, "unsupported OpenQASM version '" + v.text + "' (only 2.0)");
    expect_symbol(";");
  }

  // expr := ['-'] term; term := factor {('*'|'/') factor};
  // factor := number | 'pi' | '(' expr ')'
  double parse_expr() {
    bool negate = false;
    if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "-") {
      lex_.next();
      negate = true;
    }
    double value = parse_factor();
    while (lex_.peek().kind == TokKind::Symbol &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      const std::string op = lex_.next().text;
      const double rhs = parse_factor();
      value = op == "*" ? value * rhs : value / rhs;
    }
    return negate ? -value : value;
  }

  double parse_factor() {
    Token t = lex_.next();
    if (t.kind == TokKind::Number) return std::stod(t.text);
    if (t.kind == TokKind::Ident && t.text == "pi") return std::numbers::pi;
    if (t.kind == TokKind::Symbol && t.text == "(") {
      const double v = parse_expr();
      expect_symbol(")");
      return v;
    }
    fail(t, "expected a number, 'pi' or '(' in an angle expression, got '" + t.text + "'");
  }

  int parse_qubit_operand() {
    Token name = expect_ident();
    if (!have_qreg_ || name.text != qreg_name_)
      fail(name, "unknown quantum register '" + name.text + "'");
    expect_symbol("[");
    Token idx = lex_.peek();
    const int q = expect_uint();
    expect_symbol("]");
    if (q >= circuit_.num_qubits)
      fail(idx, "qubit index " + std::to_string(q) + " out of range for " + qreg_name_ + "[" +
                    std::to_string(circuit_.num_qubits) + "]");
    return q;
  }

  void statement() {
    Token head = lex_.next();
    if (head.kind != TokKind::Ident) fail(head, "expected a statement, got '" + head.text + "'");

    if (head.text == "include") {
      Token file = lex_.next();
      if (file.kind != TokKind::String) fail(file, "expected a string after include");
      if (file.text != "qelib1.inc")
        fail(file, "unsupported include '" + file.text + "' (only \"qelib1.inc\")");
      expect_symbol(";");
      return;
    }
    if (head.text == "qreg") {
      if (have_qreg_) fail(head, "unsupported construct: multiple qreg declarations");
      Token name = expect_ident();
      expect_symbol("[");
      const int n = expect_uint();
      expect_symbol("]");
      expect_symbol(";");
      qreg_name_ = name.text;
      circuit_.num_qubits = n;
      have_qreg_ = true;
      return;
    }
    if (head.text == "creg") {
      Token name = expect_ident();
      expect_symbol("[");
      const int n = expect_uint();
      expect_symbol("]");
      expect_symbol(";");
      cregs_[name.text] = n;
      return;
    }
    if (head.text == "measure") {
      Token qname = expect_ident();
      if (!have_qreg_ || qname.text != qreg_name_)
        fail(qname, "unknown quantum register '" + qname.text + "'");
      if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "[")
        fail(lex_.peek(), "unsupported construct: per-qubit measure (only whole-register measure)");
      expect_symbol("->");
      Token cname = expect_ident();
      if (!cregs_.contains(cname.text)) fail(cname, "unknown classical register '" + cname.text + "'");
      if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "[")
        fail(lex_.peek(), "unsupported construct: per-bit measure target");
      expect_symbol(";");
      circuit_.gates.push_back(Gate::measure_all());
      return;
    }
    if (head.text == "barrier" || head.text == "gate" || head.text == "if" ||
        head.text == "reset" || head.text == "opaque") {
      fail(head, "unsupported construct '" + head.text + "'");
    }

    gate_statement(head);
  }

  void gate_statement(const Token& head) {
    struct GateEntry {
      GateKind kind;
      int params;
    };
    static const std::map<std::string, GateEntry> table = {
        {"h", {GateKind::H, 0}},      {"x", {GateKind::X, 0}},   {"z", {GateKind::Z, 0}},
        {"rx", {GateKind::RX, 1}},    {"rz", {GateKind::RZ, 1}}, {"cx", {GateKind::CX, 0}},
        {"cz", {GateKind::CZ, 0}},    {"rzz", {GateKind::RZZ, 1}},
        {"swap", {GateKind::Swap, 0}},
    };
    auto it = table.find(head.text);
    if (it == table.end()) fail(head, "unsupported gate '" + head.text + "'");
    const GateEntry& entry = it->second;

    double angle = 0.0;
    if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "(") {
      lex_.next();
      angle = parse_expr();
      expect_symbol(")");
      if (entry.params == 0) fail(head, "gate '" + head.text + "' takes no parameters");
    } else if (entry.params == 1) {
      fail(head, "gate '" + head.text + "' requires an angle parameter");
    }

    std::vector<int> qubits;
    qubits.push_back(parse_qubit_operand());
    while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
      lex_.next();
      qubits.push_back(parse_qubit_operand());
    }
    expect_symbol(";");

    const int want = is_two_qubit(entry.kind) ? 2 : 1;
    if (static_cast<int>(qubits.size()) != want)
      fail(head, "gate '" + head.text + "' expects " + std::to_string(want) + " qubit operand(s)");

    Gate g;
    g.kind = entry.kind;
    g.qubit0 = qubits[0];
    g.qubit1 = want == 2 ? qubits[1] : -1;
    g.param = angle;
    if (want == 2 && g.qubit0 == g.qubit1)
      fail(head, "two-qubit gate '" + head.text + "' repeats a qubit operand");
    circuit_.gates.push_back(g);
  }
};

}  // namespace

UserCircuit parse_qasm2(std::string_view source) { return Parser(source).run(); }

}  // namespace qicsel
