#include "csmlat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace csmlat {

ParseError::ParseError(const std::string& message, int line, int column,
                       std::string token)
    : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                         std::to_string(column) +
                         (token.empty() ? "" : " near '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

enum class TokenType {
  Ident,
  Int,
  Plus,
  Minus,
  Slash,
  Comma,
  LParen,
  RParen,
  LBrace,
  RBrace,
  End,
};

struct Token {
  TokenType type;
  std::string text;
  long value = 0;  // for Int
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      tok.type = TokenType::Int;
      tok.text = text.substr(start, i - start);
      try {
        tok.value = std::stol(tok.text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal too large", line, column, tok.text);
      }
      column += static_cast<int>(tok.text.size());
      out.push_back(std::move(tok));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      tok.type = TokenType::Ident;
      tok.text = text.substr(start, i - start);
      column += static_cast<int>(tok.text.size());
      out.push_back(std::move(tok));
      continue;
    }
    switch (c) {
      case '+': tok.type = TokenType::Plus; break;
      case '-': tok.type = TokenType::Minus; break;
      case '/': tok.type = TokenType::Slash; break;
      case ',': tok.type = TokenType::Comma; break;
      case '(': tok.type = TokenType::LParen; break;
      case ')': tok.type = TokenType::RParen; break;
      case '{': tok.type = TokenType::LBrace; break;
      case '}': tok.type = TokenType::RBrace; break;
      default:
        throw ParseError("unexpected character", line, column,
                         std::string(1, c));
    }
    tok.text = std::string(1, c);
    ++column;
    ++i;
    out.push_back(std::move(tok));
  }
  Token end;
  end.type = TokenType::End;
  end.text = "<end of input>";
  end.line = line;
  end.column = column;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, AmbientSpace ambient)
      : tokens_(std::move(tokens)), ambient_(ambient) {}

  ConstructibleFunction run() {
    ConstructibleFunction f = parse_expr();
    if (peek().type != TokenType::End) {
      fail("trailing input after expression");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token advance() { return tokens_[pos_++]; }

  bool accept(TokenType type) {
    if (peek().type == type) {
      ++pos_;
      return true;
    }
    return false;
  }

  Token expect(TokenType type, const std::string& what) {
    if (peek().type != type) fail("expected " + what);
    return advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& tok = peek();
    throw ParseError(message, tok.line, tok.column, tok.text);
  }

  long expect_int(const std::string& what) {
    return expect(TokenType::Int, what).value;
  }

  void check_index(long index) {
    if (index < 0 || index > ambient_.dim()) {
      fail("coordinate index " + std::to_string(index) + " outside ambient 0.." +
           std::to_string(ambient_.dim()));
    }
  }

  std::uint32_t parse_set() {
    expect(TokenType::LBrace, "'{'");
    if (peek().type == TokenType::RBrace) {
      fail("empty set literal");
    }
    std::uint32_t mask = 0;
    while (true) {
      const Token tok = expect(TokenType::Int, "coordinate index");
      check_index(tok.value);
      const std::uint32_t bit = std::uint32_t{1} << tok.value;
      if (mask & bit) {
        throw ParseError("duplicate coordinate index", tok.line, tok.column,
                         tok.text);
      }
      mask |= bit;
      if (accept(TokenType::Comma)) continue;
      expect(TokenType::RBrace, "'}' or ','");
      break;
    }
    return mask;
  }

  ConstructibleFunction parse_indicator_pair(bool is_upper) {
    expect(TokenType::LParen, "'('");
    const Token n_tok = expect(TokenType::Int, "ambient dimension");
    if (n_tok.value != ambient_.dim()) {
      throw ParseError(std::string(is_upper ? "U" : "L") +
                           "(n,k) needs n equal to the ambient dimension " +
                           std::to_string(ambient_.dim()),
                       n_tok.line, n_tok.column, n_tok.text);
    }
    expect(TokenType::Comma, "','");
    const Token k_tok = expect(TokenType::Int, "stratum dimension");
    if (k_tok.value < 0 || k_tok.value > ambient_.dim()) {
      throw ParseError("stratum dimension outside 0..n", k_tok.line,
                       k_tok.column, k_tok.text);
    }
    expect(TokenType::RParen, "')'");
    return is_upper ? indicator_U(ambient_, static_cast<int>(k_tok.value))
                    : indicator_L(ambient_, static_cast<int>(k_tok.value));
  }

  ConstructibleFunction parse_atom() {
    if (accept(TokenType::LParen)) {
      ConstructibleFunction f = parse_expr();
      expect(TokenType::RParen, "')'");
      return f;
    }
    if (peek().type != TokenType::Ident) {
      fail("expected an atom (orb, sub, P, U, L, or a parenthesis)");
    }
    const Token ident = advance();
    if (ident.text == "orb") {
      return indicator_orbit(StratumSet(ambient_, parse_set()));
    }
    if (ident.text == "sub") {
      return indicator_subspace(StratumSet(ambient_, parse_set()));
    }
    if (ident.text == "P") {
      const Token n_tok = expect(TokenType::Int, "projective dimension");
      if (n_tok.value < 0 || n_tok.value > ambient_.dim()) {
        throw ParseError("P n needs 0 <= n <= ambient dimension " +
                             std::to_string(ambient_.dim()),
                         n_tok.line, n_tok.column, n_tok.text);
      }
      const std::uint32_t mask =
          (std::uint32_t{1} << (n_tok.value + 1)) - 1;
      return indicator_subspace(StratumSet(ambient_, mask));
    }
    if (ident.text == "U" || ident.text == "L") {
      return parse_indicator_pair(ident.text == "U");
    }
    throw ParseError("unknown atom", ident.line, ident.column, ident.text);
  }

  ConstructibleFunction parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (peek().type == TokenType::Int) {
      const long num = advance().value;
      if (accept(TokenType::Slash)) {
        const Token den_tok = expect(TokenType::Int, "positive denominator");
        if (den_tok.value <= 0) {
          throw ParseError("denominator must be positive", den_tok.line,
                           den_tok.column, den_tok.text);
        }
        coeff = rational_from_parts(Integer(num), Integer(den_tok.value));
      } else {
        coeff = Rational(num);
      }
      have_coeff = true;
    }
    ConstructibleFunction f = parse_atom();
    if (have_coeff) f *= coeff;
    return f;
  }

  ConstructibleFunction parse_expr() {
    bool negate = accept(TokenType::Minus);
    ConstructibleFunction f = parse_term();
    if (negate) f *= Rational(-1);
    while (true) {
      if (accept(TokenType::Plus)) {
        f += parse_term();
      } else if (accept(TokenType::Minus)) {
        f -= parse_term();
      } else {
        break;
      }
    }
    return f;
  }

  std::vector<Token> tokens_;
  AmbientSpace ambient_;
  std::size_t pos_ = 0;
};

// Scans the token stream for P n / L(n,.) / U(n,.) atoms to infer the
// ambient dimension before the real parse.
std::optional<int> infer_ambient(const std::vector<Token>& tokens) {
  std::optional<int> best;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.type != TokenType::Ident) continue;
    long candidate = -1;
    if (tok.text == "P" && tokens[i + 1].type == TokenType::Int) {
      candidate = tokens[i + 1].value;
    } else if ((tok.text == "U" || tok.text == "L") && i + 2 < tokens.size() &&
               tokens[i + 1].type == TokenType::LParen &&
               tokens[i + 2].type == TokenType::Int) {
      candidate = tokens[i + 2].value;
    }
    if (candidate >= 0) {
      best = std::max(best.value_or(0), static_cast<int>(candidate));
    }
  }
  return best;
}

}  // namespace

ConstructibleFunction parse_expression(const std::string& text,
                                       std::optional<int> ambient) {
  std::vector<Token> tokens = tokenize(text);
  std::optional<int> dim = ambient;
  if (!dim) {
    dim = infer_ambient(tokens);
    if (!dim) {
      throw ParseError(
          "ambient dimension required: pass --ambient or mention P n, L(n,k), "
          "or U(n,k)",
          1, 1, "");
    }
  }
  Parser parser(std::move(tokens), AmbientSpace(*dim));
  return parser.run();
}

std::string serialize(const ConstructibleFunction& f) {
  std::ostringstream os;
  bool first = true;
  for (const StratumSet& s : all_strata(f.ambient())) {
    const Rational& c = f.orbit_coeffs()[s.mask()];
    if (sgn(c) == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (magnitude != 1) os << to_string(magnitude) << ' ';
    os << "orb{";
    const std::vector<int> indices = s.indices();
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) os << ',';
      os << indices[i];
    }
    os << '}';
  }
  if (first) return "0 orb{0}";  // the zero function
  return os.str();
}

}  // namespace csmlat
