#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "expression.hpp"
#include "spec_files.hpp"
#include "valform/errors.hpp"
#include "valform/forms.hpp"
#include "valform/genseries.hpp"
#include "valform/logpair.hpp"
#include "valform/valuation.hpp"

namespace valform::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string spec;
  std::string inner;
  std::string pair;
  std::string expr;
  std::string form;
  std::string hyper;
  std::string mode = "klt";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string series;
  std::size_t invert_terms = 0;
  std::string cutoff;
  int partial = -1;
  std::string residue_layout;
  std::string times;
  std::string basis_values;
};

// Collected output: the JSON object always, plus the text rendering.
struct Output {
  json doc;
  std::vector<std::string> lines;
  int code = kOk;
};

std::string describe(const ValuationSpec& nu) {
  std::string s;
  for (std::size_t i = 0; i < nu.context().size(); ++i) {
    if (i) s += " ";
    s += nu.context().name(i) + "=" + to_string(nu.weight(i));
  }
  return s;
}

ValuationSpec spec_of(const Options& o) {
  if (o.spec.empty()) throw Error("cli", ErrorCode::InvalidArgument, "--spec is required");
  return load_valuation_spec(o.spec);
}

LogPair pair_of(const Options& o) {
  if (o.pair.empty()) throw Error("cli", ErrorCode::InvalidArgument, "--pair is required");
  return load_log_pair(o.pair);
}

RationalFunction function_of(const std::string& text, const VariableContext& ctx) {
  if (text.empty()) throw Error("cli", ErrorCode::InvalidArgument, "--expr is required");
  return evaluate(*parse_expression(text, &ctx), ctx);
}

TopForm form_of(const std::string& text, const VariableContext& ctx) {
  return evaluate_form(parse_form(text, &ctx), ctx);
}

void emit(Output& o, const std::string& key, const std::string& value, bool text = true) {
  o.doc[key] = value;
  if (text) o.lines.push_back(value);
}

void cmd_value(const Options& opt, Output& o) {
  const ValuationSpec nu = spec_of(opt);
  emit(o, "result", to_string(value(nu, function_of(opt.expr, nu.context()))));
}

void cmd_form_value(const Options& opt, Output& o) {
  const ValuationSpec nu = spec_of(opt);
  emit(o, "result", to_string(valuate_form(form_of(opt.form, nu.context()), nu)));
}

void cmd_residue(const Options& opt, Output& o) {
  if (opt.expr.empty() == opt.form.empty())
    throw Error("cli", ErrorCode::InvalidArgument, "residue needs exactly one of --expr, --form");
  const ValuationSpec nu = spec_of(opt);
  if (!opt.form.empty()) {
    const ResidueForm r = poincare_residue(form_of(opt.form, nu.context()), nu);
    emit(o, "result", to_string(r));
    o.doc["coefficient"] = to_string(r.coefficient());
  } else {
    emit(o, "result", to_string(residue(nu, function_of(opt.expr, nu.context()))));
  }
}

void cmd_discrepancy(const Options& opt, Output& o) {
  const LogPair pair = pair_of(opt);
  emit(o, "result", to_string(log_discrepancy(pair, spec_of(opt))));
}

void cmd_lct(const Options& opt, Output& o) {
  const LogPair pair = pair_of(opt);
  if (opt.hyper.empty()) throw Error("cli", ErrorCode::InvalidArgument, "--H is required");
  const Divisor h = Divisor::principal(function_of(opt.hyper, pair.context()));
  emit(o, "result", to_string(lct(pair, h, spec_of(opt))));
}

void cmd_decompose(const Options& opt, Output& o) {
  const LogPair pair = pair_of(opt);
  const ValuationSpec nu = spec_of(opt);
  const auto dec = decompose_discrepancy(pair, nu);
  json coeffs = json::object();
  for (std::size_t k = 0; k < dec.basis.size(); ++k) {
    const std::string& name = nu.context().name(dec.basis[k]);
    coeffs[name] = to_string(dec.coefficients[k]);
    o.lines.push_back(name + ": " + to_string(dec.coefficients[k]));
  }
  o.doc["discrepancy"] = to_string(log_discrepancy(pair, nu));
  o.doc["coefficients"] = std::move(coeffs);
}

void cmd_different(const Options& opt, Output& o) {
  emit(o, "result", to_string(different(pair_of(opt), spec_of(opt))));
}

void cmd_adjunction(const Options& opt, Output& o) {
  if (opt.inner.empty()) throw Error("cli", ErrorCode::InvalidArgument, "--inner is required");
  const auto report = adjunction_identity_check(pair_of(opt), spec_of(opt), load_valuation_spec(opt.inner));
  o.doc["ambient"] = to_string(report.ambient);
  o.doc["center"] = to_string(report.center);
  o.doc["equal"] = report.equal;
  o.lines.push_back("ambient " + to_string(report.ambient));
  o.lines.push_back("center " + to_string(report.center));
  o.lines.push_back(std::string("equal ") + (report.equal ? "true" : "false"));
  if (!report.equal) o.code = kViolation;
}

void cmd_probe(const Options& opt, Output& o) {
  ProbeMode mode;
  if (opt.mode == "klt")
    mode = ProbeMode::Klt;
  else if (opt.mode == "lc")
    mode = ProbeMode::Lc;
  else
    throw Error("cli", ErrorCode::InvalidArgument, "--mode must be klt or lc");
  const auto report = probe_global(pair_of(opt), mode, opt.samples, opt.seed, opt.threads);
  o.doc["mode"] = opt.mode;
  o.doc["samples"] = report.samples;
  o.lines.push_back("mode " + opt.mode);
  o.lines.push_back("samples " + std::to_string(report.samples));
  o.lines.push_back("violations " + std::to_string(report.violations.size()));
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"sample", v.sample}, {"weights", describe(v.spec)}, {"discrepancy", to_string(v.discrepancy)}});
    o.lines.push_back("sample " + std::to_string(v.sample) + ": " + describe(v.spec) + " a=" + to_string(v.discrepancy));
  }
  o.doc["violations"] = std::move(violations);
  if (!report.ok()) o.code = kViolation;
}

std::vector<GroupElement> group_list(const std::string& text) {
  std::vector<GroupElement> out;
  std::string_view s = text;
  while (!s.empty()) {
    const auto semi = s.find(';');
    out.push_back(parse_group_element(s.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    s.remove_prefix(semi + 1);
  }
  return out;
}

void cmd_series(const Options& opt, Output& o) {
  if (opt.series.empty()) throw Error("cli", ErrorCode::InvalidArgument, "--series is required");
  GenSeries s = parse_series(opt.series);
  const int ops = (opt.invert_terms > 0) + (opt.partial >= 0) + !opt.residue_layout.empty() + !opt.times.empty();
  if (ops > 1) throw Error("cli", ErrorCode::InvalidArgument, "at most one of --invert, --partial, --residue, --times");
  if (!opt.cutoff.empty() && opt.invert_terms == 0)
    throw Error("cli", ErrorCode::InvalidArgument, "--cutoff only applies to --invert");

  if (opt.invert_terms > 0) {
    InversePolicy policy;
    policy.max_terms = opt.invert_terms;
    if (!opt.cutoff.empty()) policy.cutoff = parse_group_element(opt.cutoff);
    s = series_invert(s, policy);
  } else if (opt.partial >= 0) {
    s = formal_partial(s, default_frame(s.group().dimension), static_cast<std::size_t>(opt.partial));
  } else if (!opt.residue_layout.empty()) {
    const GroupElement dims = parse_group_element(opt.residue_layout);
    if (dims.dim() != 2 || !is_integer(dims[0]) || !is_integer(dims[1]) || dims[0] < 0 || dims[1] < 0)
      throw Error("cli", ErrorCode::InvalidArgument, "--residue expects FRONT,BACK");
    s = series_residue(s, {dims[0].get_num().get_ui(), dims[1].get_num().get_ui()});
  } else if (!opt.times.empty()) {
    s = s * parse_series(opt.times, s.group().dimension);
  }

  emit(o, "result", to_string(s));
  if (s.truncation()) {
    const auto& t = *s.truncation();
    const std::string prec = t.precision ? to_string(*t.precision) : "unknown";
    o.doc["truncated"] = true;
    o.doc["precision"] = prec;
    o.lines.push_back("truncated, exact below " + prec);
  }
  if (!s.is_zero()) {
    if (!opt.basis_values.empty()) {
      o.doc["form_value"] = to_string(series_form_value(s, group_list(opt.basis_values)));
      o.lines.push_back("form value " + o.doc["form_value"].get<std::string>());
    }
    o.doc["value"] = to_string(series_value(s));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact valuations of rational functions and top forms at Abhyankar places", "valform"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto with_spec = [&](CLI::App* c) { c->add_option("--spec", opt.spec, "Valuation spec file")->required(); };
  auto with_pair = [&](CLI::App* c) { c->add_option("--pair", opt.pair, "Log pair file")->required(); };

  auto* value_cmd = app.add_subcommand("value", "Value of a rational function");
  with_spec(value_cmd);
  value_cmd->add_option("--expr", opt.expr, "Rational function")->required();

  auto* form_cmd = app.add_subcommand("form-value", "Log valuation of a top form");
  with_spec(form_cmd);
  form_cmd->add_option("--form", opt.form, "Form literal, e.g. \"(1/t) d(t) ^ d(x)\"")->required();

  auto* residue_cmd = app.add_subcommand("residue", "Residue of a function, or Poincare residue of a form");
  with_spec(residue_cmd);
  auto* rexpr = residue_cmd->add_option("--expr", opt.expr, "Value-zero rational function");
  auto* rform = residue_cmd->add_option("--form", opt.form, "Value-zero top form");
  rexpr->excludes(rform);

  auto* disc_cmd = app.add_subcommand("discrepancy", "Log discrepancy a(X, D, nu)");
  with_pair(disc_cmd);
  with_spec(disc_cmd);

  auto* lct_cmd = app.add_subcommand("lct", "Log canonical threshold at a rank-one place");
  with_pair(lct_cmd);
  with_spec(lct_cmd);
  lct_cmd->add_option("--H", opt.hyper, "Function h with H = div(h)")->required();

  auto* dec_cmd = app.add_subcommand("decompose", "Write a(X, D, nu) in the basis weights");
  with_pair(dec_cmd);
  with_spec(dec_cmd);

  auto* diff_cmd = app.add_subcommand("different", "Different on the center of an lc place");
  with_pair(diff_cmd);
  with_spec(diff_cmd);

  auto* adj_cmd = app.add_subcommand("adjunction-check", "Compare a(X, D, nu o mu) with a(Z, Delta_Z, mu)");
  with_pair(adj_cmd);
  with_spec(adj_cmd);
  adj_cmd->add_option("--inner", opt.inner, "Spec of mu on the residue variables")->required();

  auto* probe_cmd = app.add_subcommand("probe", "Sample monomial places and check klt/lc");
  with_pair(probe_cmd);
  probe_cmd->add_option("--mode", opt.mode, "klt or lc")->check(CLI::IsMember({"klt", "lc"}));
  probe_cmd->add_option("--samples", opt.samples, "Number of sampled places");
  probe_cmd->add_option("--seed", opt.seed, "Random seed");
  probe_cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");

  auto* series_cmd = app.add_subcommand("series", "Generalized power series arithmetic");
  series_cmd->add_option("--series", opt.series, "Series literal, e.g. \"[(0,0): 1, (1,0): -1]\"")->required();
  series_cmd->add_option("--invert", opt.invert_terms, "Invert, emitting at most N terms");
  series_cmd->add_option("--cutoff", opt.cutoff, "Exponent cutoff for --invert");
  series_cmd->add_option("--partial", opt.partial, "Formal derivative in direction i (0-based)");
  series_cmd->add_option("--residue", opt.residue_layout, "Residue for the layout FRONT,BACK");
  series_cmd->add_option("--times", opt.times, "Multiply by another series literal");
  series_cmd->add_option("--basis-values", opt.basis_values, "Form value with basis values \"(..);(..)\"");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error [cli/usage]: " << e.what() << "\n";
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Output o;
  o.doc["command"] = command;
  try {
    if (command == "value") cmd_value(opt, o);
    else if (command == "form-value") cmd_form_value(opt, o);
    else if (command == "residue") cmd_residue(opt, o);
    else if (command == "discrepancy") cmd_discrepancy(opt, o);
    else if (command == "lct") cmd_lct(opt, o);
    else if (command == "decompose") cmd_decompose(opt, o);
    else if (command == "different") cmd_different(opt, o);
    else if (command == "adjunction-check") cmd_adjunction(opt, o);
    else if (command == "probe") cmd_probe(opt, o);
    else if (command == "series") cmd_series(opt, o);
  } catch (const Error& e) {
    if (opt.format == "json") {
      json doc{{"command", command},
               {"error", {{"module", e.module()}, {"code", std::string(to_string(e.code()))}, {"message", e.detail()}}}};
      out << doc.dump(2) << "\n";
    }
    err << "error [" << e.module() << "/" << to_string(e.code()) << "]: " << e.detail() << "\n";
    return kInputError;
  }

  if (opt.format == "json") {
    out << o.doc.dump(2) << "\n";
  } else {
    for (const auto& line : o.lines) out << line << "\n";
  }
  return o.code;
}

}  // namespace valform::cli
