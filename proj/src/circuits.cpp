#include "naed/circuits.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "naed/logical.hpp"

namespace naed {

LogicalCircuit ghz_logical(int n_logical) {
  if (n_logical < 2) {
    throw ValidationError("GHZ needs at least 2 logical qubits");
  }
  if (n_logical > 12) {
    throw CapacityError("GHZ builder supports at most 12 logical qubits");
  }
  LogicalCircuit c;
  c.n_qubits = n_logical;
  c.gates.push_back(LogicalGate::u3(0, M_PI_2, 0.0, M_PI));
  for (int i = 0; i + 1 < n_logical; ++i) {
    c.gates.push_back(LogicalGate::cx(i, i + 1));
  }
  return c;
}

BitFlipCode experiment_code(int q) {
  if (q == 1) return make_code(1, {});
  return make_code(q, default_experiment_set(q));
}

PhysicalCircuit build_ghz(int n_logical, int q) {
  if (n_logical * q > kMaxQubits) {
    throw CapacityError("GHZ(" + std::to_string(n_logical) + "," +
                        std::to_string(q) + ") needs " +
                        std::to_string(n_logical * q) + " qubits, limit is " +
                        std::to_string(kMaxQubits));
  }
  return simplify(lower(ghz_logical(n_logical), experiment_code(q)));
}

Pdf ideal_pdf(int n_logical, int q) {
  if (n_logical * q > kMaxQubits) {
    throw CapacityError("register too large for ideal_pdf");
  }
  const BitFlipCode code = experiment_code(q);
  Pdf pdf;
  pdf[encode_logical(code, std::string(n_logical, '0'))] = 0.5;
  pdf[encode_logical(code, std::string(n_logical, '1'))] = 0.5;
  return pdf;
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_qubit_ref(const Token& tok, int line_no, int declared) {
  if (tok.text.size() < 2 || tok.text[0] != 'q') {
    throw ParseError(line_no, tok.column,
                     "expected a qubit reference like q0, got '" + tok.text +
                         "'");
  }
  for (std::size_t i = 1; i < tok.text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok.text[i]))) {
      throw ParseError(line_no, tok.column,
                       "malformed qubit reference '" + tok.text + "'");
    }
  }
  errno = 0;
  const long v = std::strtol(tok.text.c_str() + 1, nullptr, 10);
  if (errno != 0 || v < 0 || v >= declared) {
    throw ParseError(line_no, tok.column, "index out of range: '" + tok.text +
                                              "' with qubits " +
                                              std::to_string(declared));
  }
  return static_cast<int>(v);
}

double parse_angle(const Token& tok, int line_no) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (errno != 0 || end != begin + tok.text.size() || !std::isfinite(v)) {
    throw ParseError(line_no, tok.column,
                     "expected an angle in radians, got '" + tok.text + "'");
  }
  return v;
}

void expect_arity(const std::vector<Token>& tokens, std::size_t n,
                  int line_no) {
  if (tokens.size() != n) {
    throw ParseError(line_no, tokens[0].column,
                     "'" + tokens[0].text + "' expects " +
                         std::to_string(n - 1) + " operand(s), got " +
                         std::to_string(tokens.size() - 1));
  }
}

}  // namespace

LogicalCircuit parse_dsl(const std::string& text) {
  LogicalCircuit circuit;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string line =
        text.substr(pos, eol == std::string::npos ? std::string::npos
                                                  : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string& op = tokens[0].text;

    if (!have_header) {
      if (op != "qubits") {
        throw ParseError(line_no, tokens[0].column,
                         "expected 'qubits <N>' header, got '" + op + "'");
      }
      expect_arity(tokens, 2, line_no);
      errno = 0;
      char* end = nullptr;
      const long n = std::strtol(tokens[1].text.c_str(), &end, 10);
      if (errno != 0 || *end != '\0' || n < 1 || n > kMaxQubits) {
        throw ParseError(line_no, tokens[1].column,
                         "qubit count must be an integer in [1, " +
                             std::to_string(kMaxQubits) + "]");
      }
      circuit.n_qubits = static_cast<int>(n);
      have_header = true;
      continue;
    }

    if (op == "qubits") {
      throw ParseError(line_no, tokens[0].column, "duplicate qubits header");
    } else if (op == "h" || op == "x") {
      expect_arity(tokens, 2, line_no);
      const int q = parse_qubit_ref(tokens[1], line_no, circuit.n_qubits);
      circuit.gates.push_back(
          op == "h" ? LogicalGate::u3(q, M_PI_2, 0.0, M_PI)
                    : LogicalGate::u3(q, M_PI, 0.0, M_PI));
    } else if (op == "u3") {
      expect_arity(tokens, 5, line_no);
      const double theta = parse_angle(tokens[1], line_no);
      const double phi = parse_angle(tokens[2], line_no);
      const double lambda = parse_angle(tokens[3], line_no);
      const int q = parse_qubit_ref(tokens[4], line_no, circuit.n_qubits);
      circuit.gates.push_back(LogicalGate::u3(q, theta, phi, lambda));
    } else if (op == "cx") {
      expect_arity(tokens, 3, line_no);
      const int c = parse_qubit_ref(tokens[1], line_no, circuit.n_qubits);
      const int t = parse_qubit_ref(tokens[2], line_no, circuit.n_qubits);
      if (c == t) {
        throw ParseError(line_no, tokens[2].column,
                         "cx control and target must differ");
      }
      circuit.gates.push_back(LogicalGate::cx(c, t));
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown gate '" + op + "'");
    }
  }
  if (!have_header) throw ParseError(1, 1, "missing 'qubits <N>' header");
  return circuit;
}

}  // namespace naed
