#include "ga/expression.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "ga/contraction.hpp"
#include "ga/errors.hpp"
#include "ga/exterior.hpp"

namespace ga::expr {

expression_error::expression_error(ErrorCategory category, std::size_t offset,
                                   const std::string &what)
    : ga::error(what), category_(category), offset_(offset) {}

namespace {

enum class Tok {
  number,
  basis,
  grade_kw,
  lparen,
  rparen,
  comma,
  plus,
  minus,
  dot,
  shl,
  shr,
  caret,
  star,
  tilde,
  end,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
  int index = 0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

[[noreturn]] void syntax(std::size_t offset, const std::string &msg) {
  throw expression_error(ErrorCategory::syntax, offset, msg);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, i, src.substr(i, len)});
    i += len;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j]))
        ++j;
      if (j + 1 < src.size() && src[j] == '.' && is_digit(src[j + 1])) {
        ++j;
        while (j < src.size() && is_digit(src[j]))
          ++j;
      }
      Token t{Tok::number, i, src.substr(i, j - i)};
      t.number = std::strtod(std::string(t.text).c_str(), nullptr);
      out.push_back(t);
      i = j;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_alpha(src[j]) || is_digit(src[j])))
        ++j;
      const std::string_view word = src.substr(i, j - i);
      if (word == "grade") {
        push(Tok::grade_kw, j - i);
        continue;
      }
      if (word.size() >= 2 && word[0] == 'e' && word[1] != '0') {
        bool digits = true;
        for (std::size_t k = 1; k < word.size(); ++k)
          digits = digits && is_digit(word[k]);
        if (digits && word.size() <= 4) {
          Token t{Tok::basis, i, word};
          std::from_chars(word.data() + 1, word.data() + word.size(), t.index);
          out.push_back(t);
          i = j;
          continue;
        }
      }
      syntax(i, "unknown symbol '" + std::string(word) + "'");
    }
    const std::string_view two = src.substr(i, 2);
    if (two == "<<") {
      push(Tok::shl, 2);
      continue;
    }
    if (two == ">>") {
      push(Tok::shr, 2);
      continue;
    }
    switch (c) {
    case '(': push(Tok::lparen, 1); continue;
    case ')': push(Tok::rparen, 1); continue;
    case ',': push(Tok::comma, 1); continue;
    case '+': push(Tok::plus, 1); continue;
    case '-': push(Tok::minus, 1); continue;
    case '.': push(Tok::dot, 1); continue;
    case '^': push(Tok::caret, 1); continue;
    case '*': push(Tok::star, 1); continue;
    case '~': push(Tok::tilde, 1); continue;
    default:
      syntax(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, src.size(), {}});
  return out;
}

std::unique_ptr<Node> make(NodeKind kind, std::size_t offset) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->offset = offset;
  return n;
}

class Parser {
public:
  Parser(std::vector<Token> toks, int dim) : toks_(std::move(toks)), dim_(dim) {}

  std::unique_ptr<Node> parse_all() {
    if (peek().kind == Tok::end)
      syntax(peek().offset, "empty expression");
    auto root = sum();
    if (peek().kind != Tok::end)
      syntax(peek().offset, "unexpected '" + std::string(peek().text) + "'");
    return root;
  }

private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &take() { return toks_[pos_++]; }

  struct BinaryOp {
    Tok tok;
    NodeKind kind;
  };

  template <typename Next>
  std::unique_ptr<Node> binary_level(std::initializer_list<BinaryOp> ops,
                                     Next next) {
    auto lhs = next();
    while (true) {
      const BinaryOp *match = nullptr;
      for (const auto &op : ops)
        if (peek().kind == op.tok)
          match = &op;
      if (!match)
        return lhs;
      const Token &op_tok = take();
      if (!starts_operand(peek().kind))
        syntax(op_tok.offset,
               "expected operand after '" + std::string(op_tok.text) + "'");
      auto node = make(match->kind, op_tok.offset);
      node->lhs = std::move(lhs);
      node->rhs = next();
      lhs = std::move(node);
    }
  }

  static bool starts_operand(Tok t) {
    return t == Tok::number || t == Tok::basis || t == Tok::grade_kw ||
           t == Tok::lparen || t == Tok::minus || t == Tok::tilde;
  }

  std::unique_ptr<Node> sum() {
    return binary_level({{Tok::plus, NodeKind::add},
                         {Tok::minus, NodeKind::subtract}},
                        [this] { return dot(); });
  }
  std::unique_ptr<Node> dot() {
    return binary_level({{Tok::dot, NodeKind::scalar_product}},
                        [this] { return contraction(); });
  }
  std::unique_ptr<Node> contraction() {
    return binary_level({{Tok::shl, NodeKind::left_contract},
                         {Tok::shr, NodeKind::right_contract}},
                        [this] { return wedge(); });
  }
  std::unique_ptr<Node> wedge() {
    return binary_level({{Tok::caret, NodeKind::wedge}},
                        [this] { return geometric(); });
  }
  std::unique_ptr<Node> geometric() {
    return binary_level({{Tok::star, NodeKind::geometric}},
                        [this] { return unary(); });
  }

  std::unique_ptr<Node> unary() {
    const Token &t = peek();
    if (t.kind == Tok::minus || t.kind == Tok::tilde) {
      take();
      if (!starts_operand(peek().kind))
        syntax(t.offset, "expected operand after '" + std::string(t.text) + "'");
      auto node = make(t.kind == Tok::minus ? NodeKind::negate : NodeKind::reverse,
                       t.offset);
      node->lhs = unary();
      return node;
    }
    return primary();
  }

  void expect(Tok kind, const char *what) {
    if (peek().kind != kind)
      syntax(peek().offset, std::string("expected ") + what);
    take();
  }

  std::unique_ptr<Node> primary() {
    const Token &t = take();
    switch (t.kind) {
    case Tok::number: {
      auto node = make(NodeKind::number, t.offset);
      node->number = t.number;
      return node;
    }
    case Tok::basis: {
      if (dim_ > 0 && t.index > dim_)
        throw expression_error(ErrorCategory::dimension, t.offset,
                               "basis vector " + std::string(t.text) +
                                   " exceeds dimension " + std::to_string(dim_));
      auto node = make(NodeKind::basis, t.offset);
      node->index = t.index;
      return node;
    }
    case Tok::lparen: {
      auto inner = sum();
      expect(Tok::rparen, "')'");
      return inner;
    }
    case Tok::grade_kw: {
      auto node = make(NodeKind::grade, t.offset);
      expect(Tok::lparen, "'(' after grade");
      node->lhs = sum();
      expect(Tok::comma, "',' in grade(expr, k)");
      const Token &k = peek();
      if (k.kind != Tok::number || k.text.find('.') != std::string_view::npos)
        syntax(k.offset, "grade selection needs an integer grade");
      take();
      node->index = static_cast<int>(k.number);
      if (dim_ > 0 && node->index > dim_)
        throw expression_error(ErrorCategory::dimension, k.offset,
                               "grade " + std::to_string(node->index) +
                                   " outside 0.." + std::to_string(dim_));
      expect(Tok::rparen, "')'");
      return node;
    }
    case Tok::end:
      syntax(t.offset, "unexpected end of expression");
    default:
      syntax(t.offset, "unexpected '" + std::string(t.text) + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int dim_;
};

ErrorCategory categorize(const ga::error &e) {
  if (dynamic_cast<const invariant_error *>(&e))
    return ErrorCategory::internal;
  if (dynamic_cast<const shape_error *>(&e))
    return ErrorCategory::internal;
  return ErrorCategory::dimension;
}

Multivector as_multivector(const Value &v, int dim) {
  if (const auto *d = std::get_if<double>(&v))
    return Multivector::scalar(dim, *d);
  return std::get<Multivector>(v);
}

} // namespace

Expression parse(std::string_view src, int dim) {
  Parser p(lex(src), dim);
  return Expression(p.parse_all());
}

Evaluator::Evaluator(Algebra algebra, bool deform)
    : algebra_(std::move(algebra)) {
  if (deform)
    deform_ = make_metric_operator(algebra_);
}

void Evaluator::use_cayley_table(CayleyTable table) {
  if (table.dim() != algebra_.dim())
    throw dimension_error("Cayley table dimension mismatch");
  table_ = std::move(table);
}

Value Evaluator::evaluate(const Expression &e) const { return eval(e.root()); }

Multivector Evaluator::eval_mv(const Node &n) const {
  return as_multivector(eval(n), algebra_.dim());
}

Value Evaluator::eval(const Node &n) const {
  try {
    return apply(n);
  } catch (const expression_error &) {
    throw;
  } catch (const ga::error &e) {
    throw expression_error(categorize(e), n.offset, e.what());
  }
}

Value Evaluator::apply(const Node &n) const {
  const int dim = algebra_.dim();
  switch (n.kind) {
  case NodeKind::number:
    return Multivector::scalar(dim, n.number);
  case NodeKind::basis:
    if (n.index > dim)
      throw dimension_error("basis vector e" + std::to_string(n.index) +
                            " exceeds dimension " + std::to_string(dim));
    return Multivector::from_terms(dim, {{BladeIndex::vector(n.index), 1.0}});
  case NodeKind::negate:
    return negate(eval_mv(*n.lhs));
  case NodeKind::reverse:
    return reversion(eval_mv(*n.lhs));
  case NodeKind::grade:
    return grade_part(eval_mv(*n.lhs), n.index);
  default:
    break;
  }
  const Multivector x = eval_mv(*n.lhs);
  const Multivector y = eval_mv(*n.rhs);
  switch (n.kind) {
  case NodeKind::add:
    return x + y;
  case NodeKind::subtract:
    return x - y;
  case NodeKind::scalar_product:
    return deform_ ? deformed_scalar_product(*deform_, x, y)
                   : scalar_product(algebra_, x, y);
  case NodeKind::left_contract:
    return deform_ ? deformed_contractions(*deform_, x, y).left
                   : left_contract(algebra_, x, y);
  case NodeKind::right_contract:
    return deform_ ? deformed_contractions(*deform_, x, y).right
                   : right_contract(algebra_, x, y);
  case NodeKind::wedge:
    return ga::wedge(x, y);
  case NodeKind::geometric:
    return table_ ? geometric_product(*table_, x, y)
                  : geometric_product(algebra_, x, y);
  default:
    throw invariant_error("unhandled expression node");
  }
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  double rounded = std::strtod(buf, nullptr);
  if (rounded == 0.0)
    rounded = 0.0; // drop the sign of -0
  char out[512];
  auto res = std::to_chars(out, out + sizeof out, rounded,
                           std::chars_format::fixed);
  return std::string(out, res.ptr);
}

namespace {

std::string blade_text(BladeIndex blade) {
  std::string s;
  for (int i : blade.indices()) {
    if (!s.empty())
      s += '^';
    s += 'e' + std::to_string(i);
  }
  return s;
}

double json_number(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

} // namespace

std::string format(const Multivector &x, FormatMode mode) {
  if (mode == FormatMode::json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[blade, value] : x.terms())
      terms.push_back({{"blade", blade.indices()}, {"coeff", json_number(value)}});
    nlohmann::json doc = {{"dim", x.dim()}, {"terms", terms}};
    return doc.dump();
  }
  if (x.is_zero())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[blade, value] : x.terms()) {
    const bool negative = value < 0.0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const std::string mag = format_number(std::abs(value));
    if (blade.grade() == 0)
      s += mag;
    else if (mag == "1")
      s += blade_text(blade);
    else
      s += mag + "*" + blade_text(blade);
  }
  return s;
}

std::string format(double v, int dim, FormatMode mode) {
  if (mode == FormatMode::json) {
    nlohmann::json doc = {{"dim", dim}, {"scalar", json_number(v)}};
    return doc.dump();
  }
  return format_number(v);
}

std::string format(const Value &v, int dim, FormatMode mode) {
  if (const auto *d = std::get_if<double>(&v))
    return format(*d, dim, mode);
  return format(std::get<Multivector>(v), mode);
}

} // namespace ga::expr
