#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ga/expression.hpp"
#include "ga/metric.hpp"

namespace ga::cli {

// {"dim": n, "matrix": [[...], ...]}, row-major and symmetric.
MetricTensor parse_metric_json(std::string_view text);
MetricTensor load_metric_file(const std::string &path);

// "euclidean", "diag:a,b,..." (exactly dim nonzero entries) or "file:PATH".
// Throws invalid_metric_error / degenerate_metric_error / dimension_error.
MetricTensor parse_metric_spec(std::string_view spec, int dim);

struct Outcome {
  std::string text;
  int exit_code = 0;
};

// Parses and evaluates one expression; errors become "error: ..." text with
// the matching exit code.
Outcome evaluate_line(const expr::Evaluator &evaluator, std::string_view line,
                      expr::FormatMode mode);

// One outcome per line, evaluated in parallel; identical to the serial twin.
std::vector<Outcome> evaluate_batch(const expr::Evaluator &evaluator,
                                    const std::vector<std::string> &lines,
                                    expr::FormatMode mode);
std::vector<Outcome> evaluate_batch_serial(const expr::Evaluator &evaluator,
                                           const std::vector<std::string> &lines,
                                           expr::FormatMode mode);

// gacalc entry point. `args` excludes the program name. Exit codes: 0 ok,
// 1 syntax error, 2 dimension/metric error, 3 internal invariant violation.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

} // namespace ga::cli
