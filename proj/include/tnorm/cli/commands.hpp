#pragma once

#include <array>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "tnorm/cli/input.hpp"
#include "tnorm/cli/report.hpp"
#include "tnorm/dim_group.hpp"

namespace tnorm::cli {

inline constexpr std::array<std::string_view, 9> kSubcommands = {
    "charpoly", "perron", "trace", "norm", "cone", "validate", "dimgroup", "bratteli", "report"};

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kParseError = 2, kUndecided = 3 };

/// Command-line flags after argv parsing. Vector-valued flags stay as text
/// and go through the input grammar's list reader.
struct Options {
  std::string input;
  std::optional<double> tol;
  std::size_t max_iter = kDefaultMaxIter;
  std::size_t prime_budget = kDefaultPrimeBudget;
  std::optional<std::string> element;
  std::optional<std::string> klass;
  std::optional<std::string> fiber_class;
  std::optional<long> box;
  std::optional<long> levels;
  std::optional<long> stage;
  std::optional<std::string> vector;
  std::string format = "text";
};

struct CommandResult {
  std::string out;  // report or DOT text
  std::string err;  // diagnostics
  int exit_code = kSuccess;
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UsageError: return kParseError;
    case ErrorCode::IrreducibilityUnverified:
    case ErrorCode::PositivityUndecided: return kUndecided;
    default: return kDomainError;
  }
}

namespace detail {

inline IntVector flag_vector(const std::optional<std::string>& text, std::string_view flag) {
  if (!text) throw Error(ErrorCode::UsageError, "missing required flag --" + std::string(flag));
  try {
    return parse_int_vector(*text);
  } catch (const ParseError& e) {
    throw Error(ErrorCode::UsageError, "bad value for --" + std::string(flag) + ": " + e.what());
  }
}

inline std::size_t nonnegative(long value, std::string_view flag) {
  if (value < 0) throw Error(ErrorCode::UsageError, "--" + std::string(flag) + " must be nonnegative");
  return static_cast<std::size_t>(value);
}

inline PseudoAnosovBundle bundle_of(const InputDocument& doc) {
  if (doc.kind != InputKind::Bundle)
    throw Error(ErrorCode::NotABundle, "input has no genus and singularity data");
  return build_bundle(*doc.genus, SingularityData{*doc.singularities}, doc.matrix);
}

inline std::string sign_value(const PositivitySign& s) { return std::string(sign_name(s.kind)); }

inline void charpoly(ReportText& out, const Options& opt, const InputDocument& doc) {
  IntPolynomial chi = char_poly(doc.matrix);
  out.add("charpoly", format_list(chi.coeffs()));
  out.add("min_poly", format_list(matrix_min_poly(doc.matrix).coeffs()));
  auto cert = irreducibility_certificate(chi, opt.prime_budget);
  out.add("certificate", std::string(status_name(cert.status)));
  if (cert.witness_prime) out.add("witness_prime", std::to_string(*cert.witness_prime));
  if (cert.factor_degrees) out.add("factor_degrees", format_sizes(*cert.factor_degrees));
  if (cert.factor) out.add("factor", format_list(cert.factor->coeffs()));
  if (cert.status == Irreducibility::Undecided)
    throw Error(ErrorCode::IrreducibilityUnverified,
                "no certificate within " + std::to_string(opt.prime_budget) + " primes");
}

inline void perron(ReportText& out, const Options& opt, const InputDocument& doc) {
  PerronData d = perron_data(doc.matrix, opt.tol.value_or(kDefaultPerronTol), opt.max_iter);
  out.add("primitivity_witness", std::to_string(d.primitivity_witness));
  out.add("lambda", format_float(d.lambda));
  out.add("right_vec", format_floats(d.right_vec));
  out.add("left_vec", format_floats(d.left_vec));
  out.add("gap", format_float(d.gap));
}

inline void trace(ReportText& out, const Options& opt, const InputDocument& doc) {
  OrderElement a{flag_vector(opt.element, "element")};
  NumberFieldOrder order = build_order(doc.matrix, opt.prime_budget);
  out.add("min_poly", format_list(order.min_poly().coeffs()));
  out.add("element", format_list(a.coords));
  Integer by_mult = trace_via_mult(order, a);
  out.add("trace_mult", by_mult.get_str());
  out.add("trace_newton", trace_via_newton(order, a).get_str());
  out.add("trace_embeddings", trace_via_embeddings(order, a, opt.tol.value_or(kDefaultEmbeddingTol)).get_str());
  out.add("trace", by_mult.get_str());
}

inline void norm(ReportText& out, const Options& opt, const InputDocument& doc) {
  IntVector z = flag_vector(opt.klass, "class");
  TraceFunctional t = norm_on_action(doc.matrix, opt.prime_budget);
  out.add("trace_functional", format_list(t.t));
  out.add("class", format_list(z));
  out.add("norm", norm_value(t, z).get_str());
}

inline void cone(ReportText& out, const Options& opt, const InputDocument& doc) {
  ConeDescription c{norm_on_action(doc.matrix, opt.prime_budget)};
  out.add("trace_functional", format_list(c.functional.t));
  if (opt.klass) {
    HomologyClass z{flag_vector(opt.klass, "class")};
    out.add("class", format_list(z.z));
    out.add("norm", norm_value(c.functional, z.z).get_str());
    out.add("membership", std::string(region_name(cone_membership(c, z))));
  }
  const long box = opt.box.value_or(1);
  if (box < 1) throw Error(ErrorCode::UsageError, "--box must be at least 1");
  out.add("box", std::to_string(box));
  auto points = enumerate_cone_points(c, box);
  out.add("cone_point_count", std::to_string(points.size()));
  std::string listing = "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) listing += ',';
    listing += format_list(points[i].z);
  }
  out.add("cone_points", listing + "]");
  if (auto bad = cone_axiom_check(c, box, 4)) {
    out.add("cone_axioms", "counterexample");
    throw Error(ErrorCode::ConeAxiomViolation, "cone axiom fails at " + format_list(bad->first.z));
  }
  out.add("cone_axioms", "ok");
}

inline void validate(ReportText& out, const Options&, const InputDocument& doc) {
  if (doc.kind != InputKind::Bundle) throw Error(ErrorCode::NotABundle, "input has no genus and singularity data");
  out.add("genus", std::to_string(*doc.genus));
  out.add("singularities", format_longs(*doc.singularities));
  PseudoAnosovBundle b = bundle_of(doc);
  out.add("rank", std::to_string(b.rank()));
  out.add("primitivity_witness", std::to_string(b.primitivity_witness()));
  out.add("hyperbolic", b.hyperbolic() ? "true" : "false");
  out.add("valid", "true");
}

inline void dimgroup(ReportText& out, const Options& opt, const InputDocument& doc) {
  StationaryDimGroup g = make_dim_group(doc.matrix);
  out.add("primitivity_witness", std::to_string(g.primitivity_witness()));
  DimGroupElement unit = order_unit(g);
  out.add("order_unit", format_list(unit.v));
  out.add("order_unit_sign", sign_value(is_positive(g, unit)));
  if (!opt.vector) {
    if (opt.stage) throw Error(ErrorCode::UsageError, "--stage needs --vector");
    return;
  }
  DimGroupElement e{flag_vector(opt.vector, "vector"), nonnegative(opt.stage.value_or(0), "stage")};
  g.check(e);
  out.add("element", format_list(e.v));
  out.add("stage", std::to_string(e.stage));
  DimGroupElement next = telescope(g, e, e.stage + 1);
  out.add("next_stage", format_list(next.v));
  PositivitySign s = is_positive(g, e);
  out.add("sign", sign_value(s));
  if (s.kind == PositivitySign::Kind::Positive || s.kind == PositivitySign::Kind::Negative)
    out.add("sign_witness", std::to_string(s.witness));
  if (s.kind == PositivitySign::Kind::Undecided)
    throw Error(ErrorCode::PositivityUndecided, "sign undecided after " + std::to_string(s.witness) + " steps");
}

inline std::string bratteli(ReportText& out, const Options& opt, const InputDocument& doc) {
  StationaryDimGroup g = make_dim_group(doc.matrix);
  const std::size_t levels = nonnegative(opt.levels.value_or(2), "levels");
  std::string dot = bratteli_dot(g, levels);
  if (opt.format == "dot") return dot;
  out.add("levels", std::to_string(levels));
  out.add("vertices", std::to_string(levels * g.dimension()));
  Integer edges = g.matrix().entry_sum() * static_cast<unsigned long>(levels - 1);
  out.add("edges", edges.get_str());
  return {};
}

inline void report(ReportText& out, const Options& opt, const InputDocument& doc) {
  HomologyClass z{flag_vector(opt.fiber_class, "fiber-class")};
  PseudoAnosovBundle b = bundle_of(doc);
  write_report(out, fiber_class_report(b, z, opt.prime_budget));
}

}  // namespace detail

inline bool is_subcommand(std::string_view name) {
  for (auto s : kSubcommands)
    if (s == name) return true;
  return false;
}

/// Runs one subcommand on a parsed document. Failures become an `error = ...`
/// line appended to whatever the report held so far.
inline CommandResult run_subcommand(std::string_view name, const Options& opt, const InputDocument& doc) {
  CommandResult result;
  ReportText out;
  try {
    if (!is_subcommand(name)) throw Error(ErrorCode::UsageError, "unknown subcommand '" + std::string(name) + "'");
    if (opt.format != "text" && opt.format != "dot")
      throw Error(ErrorCode::UsageError, "unknown format '" + opt.format + "'");
    if (opt.format == "dot" && name != "bratteli") throw Error(ErrorCode::UsageError, "--format dot is for bratteli");

    if (name == "charpoly") detail::charpoly(out, opt, doc);
    else if (name == "perron") detail::perron(out, opt, doc);
    else if (name == "trace") detail::trace(out, opt, doc);
    else if (name == "norm") detail::norm(out, opt, doc);
    else if (name == "cone") detail::cone(out, opt, doc);
    else if (name == "validate") detail::validate(out, opt, doc);
    else if (name == "dimgroup") detail::dimgroup(out, opt, doc);
    else if (name == "report") detail::report(out, opt, doc);
    else if (name == "bratteli") {
      std::string dot = detail::bratteli(out, opt, doc);
      if (!dot.empty()) {
        result.out = std::move(dot);
        return result;
      }
    }
  } catch (const Error& e) {
    out.add("error", std::string(error_name(e.code())));
    result.err = std::string(e.what()) + "\n";
    result.exit_code = exit_code_for(e.code());
  }
  result.out = out.str();
  return result;
}

/// Reads and parses the input file, then dispatches.
inline CommandResult run_file(std::string_view name, const Options& opt) {
  CommandResult result;
  ReportText out;
  try {
    if (!is_subcommand(name)) throw Error(ErrorCode::UsageError, "unknown subcommand '" + std::string(name) + "'");
    if (opt.input.empty()) throw Error(ErrorCode::UsageError, "missing required flag --input");
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw Error(ErrorCode::UsageError, "cannot read input file '" + opt.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    InputDocument doc = parse_input(buf.str());
    return run_subcommand(name, opt, doc);
  } catch (const ParseError& e) {
    out.add("error", "ParseError");
    out.add("error_line", std::to_string(e.line()));
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kParseError;
  } catch (const Error& e) {
    out.add("error", std::string(error_name(e.code())));
    result.err = std::string(e.what()) + "\n";
    result.exit_code = exit_code_for(e.code());
  }
  result.out = out.str();
  return result;
}

}  // namespace tnorm::cli
