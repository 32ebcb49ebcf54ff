#include "spec_files.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "expression.hpp"
#include "valform/errors.hpp"

namespace valform::cli {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error("cli", ErrorCode::SpecFormat, what); }

YAML::Node load_document(std::string_view text) {
  try {
    YAML::Node doc = YAML::Load(std::string(text));
    if (!doc.IsMap()) format_error("expected a mapping at the top level");
    return doc;
  } catch (const YAML::Exception& e) {
    format_error(std::string("malformed document: ") + e.what());
  }
}

void reject_unknown_fields(const YAML::Node& node, const std::set<std::string>& allowed, std::string_view where) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) format_error("unknown field '" + key + "' in " + std::string(where));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) format_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> string_list(const YAML::Node& node, std::string_view field) {
  if (!node.IsSequence()) format_error("field '" + std::string(field) + "' must be a list");
  std::vector<std::string> out;
  for (const auto& item : node) out.push_back(item.as<std::string>());
  return out;
}

Rational scalar_rational(const YAML::Node& node, std::string_view field) {
  if (!node.IsScalar()) format_error("field '" + std::string(field) + "' must hold rationals");
  return parse_rational(node.as<std::string>());
}

VariableContext context_of(const YAML::Node& doc) {
  if (!doc["variables"]) format_error("missing field 'variables'");
  auto names = string_list(doc["variables"], "variables");
  if (names.empty()) format_error("'variables' must not be empty");
  return VariableContext(std::move(names));
}

}  // namespace

ValuationSpec parse_valuation_spec(std::string_view text, const std::filesystem::path& base_dir) {
  const YAML::Node doc = load_document(text);
  reject_unknown_fields(doc, {"variables", "weights", "basis", "residue", "compose"}, "valuation spec");

  if (doc["compose"]) {
    for (const char* other : {"variables", "weights", "basis", "residue"})
      if (doc[other]) format_error(std::string("'compose' cannot be combined with '") + other + "'");
    const auto refs = string_list(doc["compose"], "compose");
    if (refs.size() != 2) format_error("'compose' needs exactly [outer, inner]");
    return ValuationSpec::compose(load_valuation_spec(base_dir / refs[0]), load_valuation_spec(base_dir / refs[1]));
  }

  VariableContext ctx = context_of(doc);
  const YAML::Node weights_node = doc["weights"];
  if (!weights_node || !weights_node.IsMap()) format_error("field 'weights' must be a mapping var: [rationals]");
  std::map<std::string, GroupElement> weights;
  for (const auto& kv : weights_node) {
    const auto var = kv.first.as<std::string>();
    if (!kv.second.IsSequence()) format_error("weight of '" + var + "' must be a list of rationals");
    std::vector<Rational> coords;
    for (const auto& c : kv.second) coords.push_back(scalar_rational(c, "weights"));
    if (!ctx.index_of(var)) format_error("weight given for undeclared variable '" + var + "'");
    weights.emplace(var, GroupElement(std::move(coords)));
  }
  if (weights.empty()) format_error("'weights' must not be empty");
  const std::size_t d = weights.begin()->second.dim();
  for (const auto& [var, w] : weights)
    if (w.dim() != d) format_error("weights have different dimensions");
  auto per_var = weights_from_map(ctx, weights);

  const bool has_basis = static_cast<bool>(doc["basis"]);
  const bool has_residue = static_cast<bool>(doc["residue"]);
  if (has_basis != has_residue) format_error("'basis' and 'residue' must be given together");
  if (has_basis)
    return ValuationSpec::monomial(ctx, std::move(per_var), string_list(doc["basis"], "basis"),
                                   string_list(doc["residue"], "residue"));
  try {
    return ValuationSpec::monomial(ctx, per_var);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonAdaptedWeights) throw;
    return ValuationSpec::quasi_monomial(ctx, std::move(per_var));
  }
}

ValuationSpec load_valuation_spec(const std::filesystem::path& path) {
  return parse_valuation_spec(read_file(path), path.parent_path().empty() ? "." : path.parent_path());
}

LogPair parse_log_pair(std::string_view text) {
  const YAML::Node doc = load_document(text);
  reject_unknown_fields(doc, {"variables", "boundary"}, "pair spec");
  VariableContext ctx = context_of(doc);
  std::vector<DivisorComponent> components;
  if (const YAML::Node boundary = doc["boundary"]) {
    if (!boundary.IsSequence()) format_error("'boundary' must be a list");
    for (const auto& entry : boundary) {
      if (!entry.IsMap()) format_error("boundary entries must be {coeff, function} mappings");
      reject_unknown_fields(entry, {"coeff", "function"}, "boundary entry");
      if (!entry["coeff"] || !entry["function"]) format_error("boundary entry needs 'coeff' and 'function'");
      const Rational coeff = scalar_rational(entry["coeff"], "coeff");
      const auto expr = parse_expression(entry["function"].as<std::string>(), &ctx);
      components.push_back({coeff, evaluate(*expr, ctx)});
    }
  }
  return LogPair(ctx, Divisor(std::move(components)));
}

LogPair load_log_pair(const std::filesystem::path& path) { return parse_log_pair(read_file(path)); }

}  // namespace valform::cli
