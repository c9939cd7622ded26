#pragma once

/*
 * Command-line front end. Each verb has an options struct and a run_*
 * function writing JSON to `out`; run() parses argv and maps errors to exit
 * codes:
 *
 *   0 ok, 1 verification failure, 2 input error, 3 degenerate spectrum
 */

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/inverse.hpp"
#include "bochner/io.hpp"
#include "bochner/lemmas.hpp"
#include "bochner/operator.hpp"
#include "bochner/presets.hpp"
#include "bochner/recurrence.hpp"
#include "bochner/shapiro.hpp"
#include "bochner/spectral.hpp"

namespace bochner::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kDegenerate = 3 };

/// Exactly one of file, preset or shapiro must be set.
struct OperatorSource {
  std::string file;
  std::string preset;
  std::string alpha = "0";
  std::string beta = "0";
  std::string c;        // comma list for preset shapiro
  std::string shapiro;  // comma list, shorthand for --preset shapiro --c
};

struct DirectOptions {
  OperatorSource source;
  int n_max = 10;
  bool check = false;
  bool determinant = false;
  std::optional<int> decimal;
};

struct PresetOptions {
  OperatorSource source;
};

struct LemmaOptions {
  std::vector<std::string> ids;     // empty: every identity
  std::vector<std::string> params;  // "name=lo:hi[:step]"
};

struct InverseOptions {
  std::string data;
  std::optional<int> order;
  bool search = false;
  std::optional<int> decimal;
};

struct RecurrenceOptions {
  OperatorSource source;
  std::string data;  // eigen-data file instead of an operator
  int n_max = 20;
  std::optional<int> from;
  std::optional<int> decimal;
};

struct VerifyOptions {
  OperatorSource source;
  int n_max = 12;
};

namespace detail {

inline std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) throw ParseError("empty coefficient list");
  return out;
}

inline Rational parse_rational(const std::string& text, const char* what) {
  Scalar s = Scalar::parse(text);
  if (!s.is_real()) throw ParseError(std::string(what) + " must be rational, got '" + text + "'");
  return s.real();
}

inline void require_nmax(int n_max) {
  if (n_max < 0) throw ParseError("--nmax must be nonnegative");
}

inline json decimal_list(const std::vector<Scalar>& v, int digits) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_decimal(s, digits));
  return out;
}

inline json decimal_poly(const Poly& p, int digits) {
  if (p.is_zero()) return json::array({to_decimal(Scalar(0), digits)});
  return decimal_list(p.coeffs(), digits);
}

inline void require_digits(const std::optional<int>& d) {
  if (d && (*d < 0 || *d > 1000)) throw ParseError("--decimal must lie in [0, 1000]");
}

}  // namespace detail

/// The operator named by `src`. Also reports whether it is a shapiro operator.
inline BochnerOperator resolve_operator(const OperatorSource& src,
                                        std::optional<ShapiroOperator>* shapiro = nullptr) {
  int given = !src.file.empty() + !src.preset.empty() + !src.shapiro.empty();
  if (given != 1) throw ParseError("give exactly one of --operator, --preset, --shapiro");
  if (!src.file.empty()) return io::operator_from_json(io::read_file(src.file));

  std::string list = src.shapiro;
  if (!src.preset.empty()) {
    if (src.preset == "hermite") return presets::hermite();
    if (src.preset == "laguerre") return presets::laguerre(detail::parse_rational(src.alpha, "alpha"));
    if (src.preset == "jacobi")
      return presets::jacobi(detail::parse_rational(src.alpha, "alpha"),
                             detail::parse_rational(src.beta, "beta"));
    if (src.preset != "shapiro") throw ParseError("unknown preset '" + src.preset + "'");
    if (src.c.empty()) throw ParseError("preset shapiro needs --c c1,...,cN");
    list = src.c;
  }
  ShapiroOperator op(detail::parse_scalar_list(list));
  if (shapiro) *shapiro = op;
  return op.to_bochner();
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

/// Eigenvalues (of the normalized operator, see "shift") and monic
/// eigenpolynomials up to n_max. --check runs the eigenpair oracle and the
/// determinant cross-check on every degree.
inline int run_direct(const DirectOptions& opt, std::ostream& out) {
  detail::require_nmax(opt.n_max);
  detail::require_digits(opt.decimal);
  BochnerOperator op = resolve_operator(opt.source);
  Normalized norm = normalize(op);
  DeltaTable deltas = deltas_from_operator(norm.op, opt.n_max);
  auto method = opt.determinant ? CoefficientMethod::Determinant : CoefficientMethod::Recursive;
  EigenSystem sys = eigen_system(deltas, opt.n_max, method);

  json result = io::to_json(sys);
  result["operator"] = io::to_json(op);
  result["shift"] = io::to_json(norm.shift);
  result["n_max"] = opt.n_max;
  bool ok = true;
  if (opt.check) {
    int first_bad_pair = -1, first_bad_det = -1;
    auto other = opt.determinant ? CoefficientMethod::Recursive : CoefficientMethod::Determinant;
    EigenSystem cross = eigen_system(deltas, opt.n_max, other);
    for (int n = 0; n <= opt.n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (first_bad_pair < 0 && !is_eigenpair(norm.op, sys.polys[i], sys.lambdas[i])) first_bad_pair = n;
      if (first_bad_det < 0 && !(cross.polys[i] == sys.polys[i])) first_bad_det = n;
    }
    result["check"] = {{"eigenpair", first_bad_pair < 0}, {"determinant", first_bad_det < 0}};
    if (first_bad_pair >= 0) result["check"]["eigenpair_fails_at"] = first_bad_pair;
    if (first_bad_det >= 0) result["check"]["determinant_fails_at"] = first_bad_det;
    ok = first_bad_pair < 0 && first_bad_det < 0;
  }
  if (opt.decimal) {
    json p = json::array();
    for (const auto& q : sys.polys) p.push_back(detail::decimal_poly(q, *opt.decimal));
    result["decimal"] = {{"digits", *opt.decimal},
                         {"lambda", detail::decimal_list(sys.lambdas, *opt.decimal)},
                         {"P", std::move(p)}};
  }
  emit(out, result);
  return ok ? kOk : kVerificationFailed;
}

inline int run_preset(const PresetOptions& opt, std::ostream& out) {
  emit(out, io::to_json(resolve_operator(opt.source)));
  return kOk;
}

/// Sweeps the selected identities over their default grids, with ranges
/// overridden by --param. Exit 1 on the first nonzero residual.
inline int run_lemmas(const LemmaOptions& opt, std::ostream& out) {
  std::vector<std::string> ids = opt.ids.empty() ? lemma_ids() : opt.ids;
  for (const auto& id : ids)
    if (!is_lemma_id(id)) throw ParseError("unknown identity '" + id + "'");

  std::map<std::string, ParamRange> overrides;
  for (const auto& spec : opt.params) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param must be name=lo:hi[:step]");
    ParamRange r{spec.substr(0, eq), 0, 0, 1};
    std::vector<std::string> parts;
    std::stringstream in(spec.substr(eq + 1));
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) throw ParseError("--param must be name=lo:hi[:step]");
    r.lo = detail::parse_rational(parts[0], "range bound");
    r.hi = detail::parse_rational(parts[1], "range bound");
    if (parts.size() == 3) r.step = detail::parse_rational(parts[2], "range step");
    if (sgn(r.step) <= 0) throw ParseError("range step must be positive");
    overrides[r.name] = r;
  }
  for (const auto& [name, range] : overrides) {
    bool used = false;
    for (const auto& id : ids)
      for (const auto& p : lemma_params(id)) used = used || p == name;
    if (!used) throw ParseError("no selected identity has a parameter '" + name + "'");
  }

  json results = json::array();
  long checked = 0, skipped = 0;
  std::optional<LemmaCounterexample> bad;
  for (const auto& id : ids) {
    auto grid = default_lemma_grid(id);
    for (auto& range : grid)
      if (auto it = overrides.find(range.name); it != overrides.end()) range = it->second;
    auto report = sweep_lemma(id, grid);
    checked += report.checked;
    skipped += report.skipped;
    results.push_back({{"id", id},
                       {"checked", report.checked},
                       {"skipped", report.skipped},
                       {"ok", report.ok()}});
    if (!report.ok()) {
      bad = report.counterexample;
      break;
    }
  }
  json result{{"identities", std::move(results)},
              {"checked", checked},
              {"skipped", skipped},
              {"ok", !bad}};
  if (bad) {
    json params = json::object();
    for (const auto& [name, value] : bad->params) params[name] = value.get_str();
    result["counterexample"] = {{"id", bad->id}, {"params", params}, {"residual", bad->residual.str()}};
  }
  emit(out, result);
  return bad ? kVerificationFailed : kOk;
}

/// Operator of order --order (or the smallest order with --search) having the
/// data as eigen-pairs. The finite-order criterion is only checked up to the
/// highest degree in the file, which the output reports as "window".
inline int run_inverse(const InverseOptions& opt, std::ostream& out) {
  detail::require_digits(opt.decimal);
  if (opt.data.empty()) throw ParseError("inverse needs --data");
  if (opt.search == opt.order.has_value()) throw ParseError("give exactly one of --order, --search");
  EigenData data = io::eigendata_from_json(io::read_file(opt.data));
  json result{{"window", data.m_max()}};

  int order;
  if (opt.search) {
    auto found = search_order(data);
    result["search"] = true;
    if (!found) {
      result["order"] = nullptr;
      result["consistent"] = false;
      result["statement"] = "no order below " + std::to_string(data.m_max()) +
                            " is consistent with data up to degree " + std::to_string(data.m_max());
      emit(out, result);
      return kVerificationFailed;
    }
    order = *found;
  } else {
    order = *opt.order;
  }
  result["order"] = order;
  try {
    BochnerOperator op = reconstruct(data, order);
    bool verified = true;
    for (int n = 0; n <= data.m_max(); ++n)
      verified = verified && is_eigenpair(op, data.polys()[static_cast<std::size_t>(n)], data.lambda(n));
    result["consistent"] = true;
    result["verified"] = verified;
    result["operator"] = io::to_json(op);
    result["statement"] = "order <= " + std::to_string(order) +
                          " consistent with data up to degree " + std::to_string(data.m_max());
    if (opt.decimal) {
      json a = json::array();
      for (const auto& p : op.coeffs()) a.push_back(detail::decimal_poly(p, *opt.decimal));
      result["decimal"] = {{"digits", *opt.decimal}, {"a", std::move(a)}};
    }
    emit(out, result);
    return verified ? kOk : kVerificationFailed;
  } catch (const NoFiniteOrderOperator& e) {
    result["consistent"] = false;
    result["failure"] = {{"n", e.n()}, {"k", e.k()}};
    result["statement"] = e.what();
    emit(out, result);
    return kVerificationFailed;
  }
}

/// Fits x P_n = P_{n+1} + sum_k alpha_{n,k} P_k for n < n_max and reports
/// the band width detected on [from, n_max - 1].
inline int run_recurrence(const RecurrenceOptions& opt, std::ostream& out) {
  detail::require_digits(opt.decimal);
  std::vector<Poly> family;
  const bool have_source =
      !opt.source.file.empty() || !opt.source.preset.empty() || !opt.source.shapiro.empty();
  if (!opt.data.empty()) {
    if (have_source) throw ParseError("give either --data or an operator, not both");
    family = io::eigendata_from_json(io::read_file(opt.data)).polys();
  } else {
    if (opt.n_max < 1) throw ParseError("--nmax must be at least 1");
    family = eigen_system(resolve_operator(opt.source), opt.n_max).polys;
  }
  RecurrenceCoeffs rec = fit_recurrence(family);
  const int from = opt.from ? *opt.from : (rec.n_max() + 1) / 2;
  if (from < 0 || from > rec.n_max())
    throw ParseError("--from must lie in [0, " + std::to_string(rec.n_max()) + "]");
  auto p = bandwidth(rec, from);

  json result{{"alpha", io::to_json(rec)}, {"n_max", rec.n_max()}, {"from", from}};
  result["bandwidth"] = p ? json(*p) : json(nullptr);
  result["terms"] = p ? json(*p + 2) : json(nullptr);
  if (opt.decimal) {
    json rows = json::array();
    for (const auto& row : rec.rows()) rows.push_back(detail::decimal_list(row, *opt.decimal));
    result["decimal"] = {{"digits", *opt.decimal}, {"alpha", std::move(rows)}};
  }
  emit(out, result);
  return kOk;
}

/// Runs every check that applies to the operator: eigenpair oracle,
/// determinant cross-check, inverse round-trip and, for shapiro operators,
/// the closed-form recurrence.
inline int run_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.n_max < 1) throw ParseError("--nmax must be at least 1");
  std::optional<ShapiroOperator> shapiro;
  BochnerOperator op = resolve_operator(opt.source, &shapiro);
  Normalized norm = normalize(op);
  DeltaTable deltas = deltas_from_operator(norm.op, opt.n_max);
  EigenSystem rec_sys = eigen_system(deltas, opt.n_max, CoefficientMethod::Recursive);
  EigenSystem det_sys = eigen_system(deltas, opt.n_max, CoefficientMethod::Determinant);

  json checks = json::object();
  bool pairs = true;
  for (int n = 0; n <= opt.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    pairs = pairs && is_eigenpair(norm.op, rec_sys.polys[i], rec_sys.lambdas[i]);
  }
  checks["eigenpair"] = pairs;
  checks["determinant"] = rec_sys.polys == det_sys.polys;

  if (opt.n_max > op.order()) {
    EigenData data(rec_sys);
    checks["inverse_deltas"] = deltas_from_eigendata_rec(data, opt.n_max) == deltas;
    bool round_trip;
    try {
      round_trip = reconstruct(data, op.order()) == norm.op;
    } catch (const NoFiniteOrderOperator&) {
      round_trip = false;
    }
    checks["inverse_round_trip"] = round_trip;
  }
  if (shapiro) {
    checks["shapiro_recurrence"] = verify_shapiro_recurrence(*shapiro, opt.n_max - 1).ok;
    RecurrenceCoeffs fit = fit_recurrence(rec_sys);
    ShapiroBand band = shapiro_alpha_band(*shapiro, fit.n_max());
    bool match = true;
    for (int n = 0; n <= fit.n_max(); ++n)
      for (int k = 0; k <= n; ++k) {
        const int s = n - k;
        Scalar expected = s < shapiro->order() ? band[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]
                                               : Scalar(0);
        match = match && fit.alpha(n, k) == expected;
      }
    checks["shapiro_alpha"] = match;
  }
  bool ok = true;
  for (const auto& [name, value] : checks.items()) ok = ok && value.get<bool>();
  emit(out, json{{"n_max", opt.n_max}, {"checks", checks}, {"ok", ok}});
  return ok ? kOk : kVerificationFailed;
}

namespace detail {

inline void add_source(CLI::App* cmd, OperatorSource& src) {
  cmd->add_option("--operator", src.file, "operator JSON file");
  cmd->add_option("--preset", src.preset, "hermite, laguerre, jacobi or shapiro");
  cmd->add_option("--alpha", src.alpha, "laguerre/jacobi alpha");
  cmd->add_option("--beta", src.beta, "jacobi beta");
  cmd->add_option("--c", src.c, "shapiro coefficients c1,...,cN");
  cmd->add_option("--shapiro", src.shapiro, "shapiro operator from c1,...,cN");
}

// Writes `text` to `path`, or to `out` when path is empty.
inline void deliver(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

}  // namespace detail

/// Parses argv, dispatches, and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact spectral computations for Bochner differential operators"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write JSON to this file instead of standard output");

  DirectOptions direct;
  auto* c_direct = app.add_subcommand("direct", "eigenvalues and eigenpolynomials");
  detail::add_source(c_direct, direct.source);
  c_direct->add_option("--nmax", direct.n_max, "highest degree");
  c_direct->add_flag("--check", direct.check, "run the eigenpair oracle and determinant cross-check");
  c_direct->add_flag("--det", direct.determinant, "compute coefficients by determinants");
  c_direct->add_option("--decimal", direct.decimal, "add k-digit decimal approximations");
  c_direct->add_option("--out", out_path, "output file");

  PresetOptions preset;
  auto* c_preset = app.add_subcommand("preset", "print a classical operator");
  c_preset->add_option("name", preset.source.preset, "hermite, laguerre, jacobi or shapiro")->required();
  c_preset->add_option("--alpha", preset.source.alpha, "laguerre/jacobi alpha");
  c_preset->add_option("--beta", preset.source.beta, "jacobi beta");
  c_preset->add_option("--c", preset.source.c, "shapiro coefficients c1,...,cN");
  c_preset->add_option("--out", out_path, "output file");

  LemmaOptions lemmas;
  auto* c_lemmas = app.add_subcommand("lemmas", "check the binomial identities on integer grids");
  c_lemmas->add_option("--id", lemmas.ids, "identity to check (repeatable)");
  c_lemmas->add_option("--param", lemmas.params, "range override name=lo:hi[:step] (repeatable)");
  c_lemmas->add_option("--out", out_path, "output file");

  InverseOptions inverse;
  auto* c_inverse = app.add_subcommand("inverse", "operator from eigenvalues and eigenpolynomials");
  c_inverse->add_option("--data", inverse.data, "eigen-data JSON file")->required();
  c_inverse->add_option("--order", inverse.order, "operator order N");
  c_inverse->add_flag("--search", inverse.search, "find the smallest consistent order");
  c_inverse->add_option("--decimal", inverse.decimal, "add k-digit decimal approximations");
  c_inverse->add_option("--out", out_path, "output file");

  RecurrenceOptions recurrence;
  auto* c_rec = app.add_subcommand("recurrence", "fit the recurrence of the eigenpolynomials");
  detail::add_source(c_rec, recurrence.source);
  c_rec->add_option("--data", recurrence.data, "eigen-data JSON file instead of an operator");
  c_rec->add_option("--nmax", recurrence.n_max, "highest degree of the family");
  c_rec->add_option("--from", recurrence.from, "first row of the band-width window");
  c_rec->add_option("--decimal", recurrence.decimal, "add k-digit decimal approximations");
  c_rec->add_option("--out", out_path, "output file");

  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "run every exact self-check on an operator");
  detail::add_source(c_verify, verify.source);
  c_verify->add_option("--nmax", verify.n_max, "highest degree");
  c_verify->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ostringstream buf;
  try {
    int code = kOk;
    if (*c_direct) code = run_direct(direct, buf);
    else if (*c_preset) code = run_preset(preset, buf);
    else if (*c_lemmas) code = run_lemmas(lemmas, buf);
    else if (*c_inverse) code = run_inverse(inverse, buf);
    else if (*c_rec) code = run_recurrence(recurrence, buf);
    else if (*c_verify) code = run_verify(verify, buf);
    detail::deliver(out_path, buf.str(), out);
    return code;
  } catch (const DegenerateSpectrum& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const NoFiniteOrderOperator& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace bochner::cli
