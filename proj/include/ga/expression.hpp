#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ga/clifford.hpp"
#include "ga/deformation.hpp"
#include "ga/errors.hpp"
#include "ga/metric.hpp"
#include "ga/multivector.hpp"

namespace ga::expr {

// Maps onto the gacalc exit codes.
enum class ErrorCategory { syntax = 1, dimension = 2, internal = 3 };

// Parse or evaluation failure tied to a byte offset in the source text.
class expression_error : public ga::error {
public:
  expression_error(ErrorCategory category, std::size_t offset,
                   const std::string &what);

  ErrorCategory category() const { return category_; }
  std::size_t offset() const { return offset_; }

private:
  ErrorCategory category_;
  std::size_t offset_;
};

enum class NodeKind {
  number,
  basis,
  negate,
  reverse,
  grade,
  add,
  subtract,
  scalar_product,
  left_contract,
  right_contract,
  wedge,
  geometric,
};

struct Node {
  NodeKind kind;
  std::size_t offset = 0;
  double number = 0.0; // number literal
  int index = 0;       // basis index, or the grade of a grade selection
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

// Owning AST root.
class Expression {
public:
  explicit Expression(std::unique_ptr<Node> root) : root_(std::move(root)) {}
  const Node &root() const { return *root_; }

private:
  std::unique_ptr<Node> root_;
};

// Grammar, loosest to tightest, all binaries left-associative:
//   sum     := dot (('+' | '-') dot)*
//   dot     := contr ('.' contr)*
//   contr   := wedge (('<<' | '>>') wedge)*
//   wedge   := geo ('^' geo)*
//   geo     := unary ('*' unary)*
//   unary   := ('-' | '~') unary | primary
//   primary := NUMBER | 'e' DIGITS | 'grade' '(' sum ',' INT ')' | '(' sum ')'
// NUMBER is digits with an optional fraction; there is no exponent form.
// With `dim` > 0, basis indices above dim are rejected as dimension errors.
Expression parse(std::string_view src, int dim = 0);

// Scalar-product nodes produce reals; every other node a multivector.
using Value = std::variant<Multivector, double>;

// Evaluation context. With `deform`, scalar products and contractions go
// through the metric operator against the identity euclidean structure.
class Evaluator {
public:
  explicit Evaluator(Algebra algebra, bool deform = false);

  const Algebra &algebra() const { return algebra_; }
  bool deform() const { return deform_.has_value(); }

  // Route geometric products through a precomputed table.
  void use_cayley_table(CayleyTable table);

  Value evaluate(const Expression &e) const;

private:
  Value eval(const Node &n) const;
  Multivector eval_mv(const Node &n) const;
  Value apply(const Node &n) const;

  Algebra algebra_;
  std::optional<MetricOperator> deform_;
  std::optional<CayleyTable> table_;
};

enum class FormatMode { text, json };

// Coefficients are printed in fixed notation rounded to 15 significant
// digits; text output parses back to the same multivector.
std::string format_number(double v);
std::string format(const Multivector &x, FormatMode mode = FormatMode::text);
std::string format(double v, int dim, FormatMode mode = FormatMode::text);
std::string format(const Value &v, int dim, FormatMode mode = FormatMode::text);

} // namespace ga::expr
