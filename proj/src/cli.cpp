#include "ga/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ga/errors.hpp"
#include "ga/kernels.hpp"

namespace ga::cli {

namespace {

// Cayley tables are only built for batch input at or below this dimension.
constexpr int kBatchTableMaxDim = 5;

int exit_code_for(const ga::error &e) {
  if (const auto *ee = dynamic_cast<const expr::expression_error *>(&e))
    return static_cast<int>(ee->category());
  if (dynamic_cast<const invariant_error *>(&e))
    return 3;
  return 2;
}

std::string describe(const ga::error &e) {
  if (const auto *ee = dynamic_cast<const expr::expression_error *>(&e)) {
    const char *kind = ee->category() == expr::ErrorCategory::syntax
                           ? "syntax error"
                       : ee->category() == expr::ErrorCategory::dimension
                           ? "dimension error"
                           : "internal error";
    return std::string(kind) + " at offset " + std::to_string(ee->offset()) +
           ": " + ee->what();
  }
  return e.what();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace

MetricTensor parse_metric_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw invalid_metric_error(std::string("metric JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix") ||
      !doc["dim"].is_number_integer() || !doc["matrix"].is_array())
    throw invalid_metric_error(
        "metric JSON must be {\"dim\": n, \"matrix\": [[...], ...]}");
  const int n = doc["dim"].get<int>();
  if (n < 1 || n > kMaxDim)
    throw invalid_metric_error("metric dim " + std::to_string(n) +
                               " outside 1.." + std::to_string(kMaxDim));
  const auto &rows = doc["matrix"];
  if (static_cast<int>(rows.size()) != n)
    throw invalid_metric_error("metric matrix must have dim rows");
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw invalid_metric_error("metric matrix row " + std::to_string(i) +
                                 " must have dim entries");
    for (int j = 0; j < n; ++j) {
      if (!rows[i][j].is_number())
        throw invalid_metric_error("metric entries must be numbers");
      g(i, j) = rows[i][j].get<double>();
    }
  }
  return MetricTensor(std::move(g));
}

MetricTensor load_metric_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw invalid_metric_error("cannot read metric file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_metric_json(ss.str());
}

MetricTensor parse_metric_spec(std::string_view spec, int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw dimension_error("--dim must be in 1.." + std::to_string(kMaxDim));
  if (spec == "euclidean")
    return MetricTensor::euclidean(dim);
  if (spec.starts_with("diag:")) {
    std::vector<double> entries;
    std::string list(spec.substr(5));
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      char *end = nullptr;
      const double v = std::strtod(t.c_str(), &end);
      if (t.empty() || end != t.c_str() + t.size())
        throw invalid_metric_error("bad diagonal entry '" + t + "'");
      if (v == 0.0)
        throw degenerate_metric_error("diagonal metric entries must be nonzero");
      entries.push_back(v);
    }
    if (static_cast<int>(entries.size()) != dim)
      throw invalid_metric_error("diag metric needs exactly " +
                                 std::to_string(dim) + " entries, got " +
                                 std::to_string(entries.size()));
    return MetricTensor::diagonal(entries);
  }
  if (spec.starts_with("file:")) {
    MetricTensor m = load_metric_file(std::string(spec.substr(5)));
    if (m.dim() != dim)
      throw dimension_error("metric file has dim " + std::to_string(m.dim()) +
                            ", --dim is " + std::to_string(dim));
    return m;
  }
  throw invalid_metric_error("unknown metric '" + std::string(spec) +
                             "' (use euclidean, diag:..., or file:PATH)");
}

Outcome evaluate_line(const expr::Evaluator &evaluator, std::string_view line,
                      expr::FormatMode mode) {
  try {
    const auto e = expr::parse(line, evaluator.algebra().dim());
    return {expr::format(evaluator.evaluate(e), evaluator.algebra().dim(), mode),
            0};
  } catch (const ga::error &e) {
    return {"error: " + describe(e), exit_code_for(e)};
  } catch (const std::exception &e) {
    return {std::string("error: internal error: ") + e.what(), 3};
  }
}

std::vector<Outcome> evaluate_batch(const expr::Evaluator &evaluator,
                                    const std::vector<std::string> &lines,
                                    expr::FormatMode mode) {
  std::vector<Outcome> out(lines.size());
  const long count = static_cast<long>(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    out[i] = evaluate_line(evaluator, lines[i], mode);
  return out;
}

std::vector<Outcome> evaluate_batch_serial(const expr::Evaluator &evaluator,
                                           const std::vector<std::string> &lines,
                                           expr::FormatMode mode) {
  std::vector<Outcome> out;
  out.reserve(lines.size());
  for (const auto &line : lines)
    out.push_back(evaluate_line(evaluator, line, mode));
  return out;
}

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  CLI::App app{"Evaluate multivector expressions in a real geometric algebra",
               "gacalc"};
  int dim = 0;
  std::string metric = "euclidean";
  bool json = false;
  bool deform = false;
  std::string expression;
  app.add_option("--dim", dim, "dimension of the base space (1..12)")
      ->required();
  app.add_option("--metric", metric,
                 "euclidean | diag:a,b,... | file:PATH (JSON)");
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_flag("--deform", deform,
               "compute scalar products and contractions via the metric "
               "operator against the identity euclidean structure");
  app.add_option("expr", expression,
                 "expression; reads one expression per line from stdin when "
                 "omitted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "gacalc: " << e.what() << "\n";
    return 1;
  }

  std::optional<expr::Evaluator> evaluator;
  try {
    evaluator.emplace(make_algebra(parse_metric_spec(metric, dim)), deform);
  } catch (const ga::error &e) {
    err << "gacalc: " << e.what() << "\n";
    return exit_code_for(e);
  }
  const auto mode = json ? expr::FormatMode::json : expr::FormatMode::text;

  if (!app.count("expr")) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
      if (!trim(line).empty())
        lines.push_back(line);
    if (dim <= kBatchTableMaxDim && lines.size() > 1)
      evaluator->use_cayley_table(kernels::build_cayley_table(evaluator->algebra()));
    int code = 0;
    for (const auto &o : evaluate_batch(*evaluator, lines, mode)) {
      out << o.text << "\n";
      if (code == 0)
        code = o.exit_code;
    }
    return code;
  }

  const Outcome o = evaluate_line(*evaluator, expression, mode);
  if (o.exit_code != 0) {
    err << "gacalc: " << o.text.substr(7) << "\n";
    return o.exit_code;
  }
  out << o.text << "\n";
  return 0;
}

} // namespace ga::cli
