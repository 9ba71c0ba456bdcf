#include "cli/cli.hpp"

#include "cli/output.hpp"
#include "cli/verify.hpp"
#include "cli/weight_cache.hpp"

#include "springer/errors.hpp"
#include "springer/springer.hpp"
#include "springer/weyl.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <ostream>

namespace springer::cli {

namespace {

struct Options {
  std::string type;
  std::optional<std::size_t> rank;
  std::string weight;
  std::string format = "table";
  std::string cache_dir;
  std::string torus;
  bool symplectic = false;
  bool expand = false;
  bool all = false;
  std::size_t max_rank = 4;
  std::string weight_set = "all";
};

void add_type_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--type", o.type, "Lie family letter (A-G), or a full name such as G2");
  cmd.add_option("--rank", o.rank, "Rank");
}

void add_output_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  cmd.add_option("--cache-dir", o.cache_dir, "Directory for cached weight systems");
}

void add_weight_option(CLI::App& cmd, Options& o) {
  cmd.add_option("--weight", o.weight, "Highest weight, comma-separated fundamental coordinates")->required();
}

LieType resolve_type(const Options& o) {
  if (o.type.empty()) throw InvalidArgument("--type is required");
  if (!o.rank) return LieType::parse(o.type);
  if (o.type.size() != 1) throw InvalidArgument("--type takes a family letter when --rank is given");
  return LieType::from_parts(o.type, *o.rank);
}

Weight resolve_weight(const RootSystemData& rs, const Options& o) {
  const auto coords = parse_int_list(o.weight);
  if (coords.size() != rs.rank()) {
    throw InvalidArgument("--weight has " + std::to_string(coords.size()) + " coordinates, " +
                          rs.lie_type.name() + " needs " + std::to_string(rs.rank()));
  }
  for (auto c : coords) {
    if (c < 0) throw InvalidArgument("highest weight must be dominant (nonnegative coordinates)");
    if (c > 1'000'000) throw InvalidArgument("highest weight coordinate out of range");
  }
  return Weight::from(coords);
}

void require_nonzero(const Weight& lambda) {
  if (lambda.is_zero()) {
    throw NotAlmostFaithfulError("lambda = 0 gives the trivial representation, which is not almost faithful");
  }
}

std::unique_ptr<WeightCache> make_cache(const Options& o) {
  std::string dir = o.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("SPRINGER_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<WeightCache>(dir);
}

std::vector<Json> one_based(const std::vector<std::size_t>& indices) {
  std::vector<Json> out;
  for (auto i : indices) out.emplace_back(i + 1);
  return out;
}

std::string join_one_based(const std::vector<std::size_t>& indices) {
  std::string s;
  for (auto i : indices) s += (s.empty() ? "" : ", ") + std::to_string(i + 1);
  return s;
}

void print_header(std::ostream& out, const LieType& type, const std::optional<Weight>& lambda) {
  out << "type: " << type.name();
  if (lambda) out << "  lambda: " << lambda->to_string();
  out << '\n';
}

struct Emitter {
  const Options& o;
  std::ostream& out;
  bool json() const { return o.format == "json"; }
  void document(const std::string& command, const std::optional<LieType>& type,
                const std::optional<Weight>& lambda, Json payload) const {
    out << make_document(command, type, lambda, std::move(payload)).dump(2) << '\n';
  }
};

int cmd_info(const Options& o, std::ostream& out) {
  const auto rs = build(resolve_type(o));
  const auto s_inv = mat_inverse(rs.s_matrix);
  const auto a_inv = mat_inverse(rs.cartan);
  Emitter emit{o, out};
  if (emit.json()) {
    Json d = Json::array();
    for (const auto& v : rs.d_diag) d.push_back(to_json(v));
    emit.document("info", rs.lie_type, std::nullopt,
                  {{"cartan", to_json(rs.cartan)},
                   {"cartan_inverse", to_json(a_inv)},
                   {"d", std::move(d)},
                   {"s", to_json(rs.s_matrix)},
                   {"s_inverse", to_json(s_inv)},
                   {"positive_root_count", rs.positive_roots.size()},
                   {"long_indices", one_based(rs.long_indices)}});
    return kSuccess;
  }
  print_header(out, rs.lie_type, std::nullopt);
  print_matrix(out, "Cartan matrix A", rs.cartan);
  print_matrix(out, "A^-1", a_inv);
  out << "D: diag(";
  for (std::size_t i = 0; i < rs.d_diag.size(); ++i) out << (i ? ", " : "") << to_string(rs.d_diag[i]);
  out << ")\n";
  print_matrix(out, "S", rs.s_matrix);
  print_matrix(out, "S^-1", s_inv);
  out << "positive roots: " << rs.positive_roots.size() << '\n';
  out << "long simple roots: " << join_one_based(rs.long_indices) << '\n';
  return kSuccess;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const auto rs = build(resolve_type(o));
  const auto lambda = resolve_weight(rs, o);
  const auto cache = make_cache(o);
  const auto wm = weights_for(rs, lambda, cache.get());
  Emitter emit{o, out};
  if (emit.json()) {
    Json dominant = Json::array();
    for (const auto& [mu, m] : wm.dominant_mults) {
      dominant.push_back({{"weight", to_json(mu)}, {"multiplicity", to_json(m)}, {"orbit_size", orbit_size(rs, mu)}});
    }
    Json payload = {{"dimension", to_json(wm.total_dim)}, {"dominant", std::move(dominant)}};
    if (o.expand) {
      Json all = Json::array();
      for (const auto& w : expand(rs, wm)) all.push_back({{"weight", to_json(w.weight)}, {"multiplicity", to_json(w.multiplicity)}});
      payload["expanded"] = std::move(all);
    }
    emit.document("weights", rs.lie_type, lambda, std::move(payload));
    return kSuccess;
  }
  print_header(out, rs.lie_type, lambda);
  out << "dimension: " << to_string(wm.total_dim) << '\n';
  out << "dominant weights:\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& [mu, m] : wm.dominant_mults) {
    rows.push_back({mu.to_string(), to_string(m), std::to_string(orbit_size(rs, mu))});
  }
  print_columns(out, {"weight", "multiplicity", "orbit"}, rows);
  if (o.expand) {
    out << "all weights:\n";
    rows.clear();
    for (const auto& w : expand(rs, wm)) rows.push_back({w.weight.to_string(), to_string(w.multiplicity)});
    print_columns(out, {"weight", "multiplicity"}, rows);
  }
  return kSuccess;
}

int cmd_smatrix(const Options& o, std::ostream& out) {
  const auto rs = build(resolve_type(o));
  const auto lambda = resolve_weight(rs, o);
  require_nonzero(lambda);
  const auto cache = make_cache(o);
  const auto wm = weights_for(rs, lambda, cache.get());
  const auto weights = expand(rs, wm);
  const auto brute = s_matrix_bruteforce(rs, weights);
  const auto x = x_long(rs, weights);
  const auto closed = s_matrix_closed(rs, weights);
  const bool agree = brute == closed;
  Emitter emit{o, out};
  if (emit.json()) {
    emit.document("smatrix", rs.lie_type, lambda,
                  {{"bruteforce", to_json(brute)},
                   {"closed_form", to_json(closed)},
                   {"x_long", to_json(x)},
                   {"dimension", to_json(wm.total_dim)},
                   {"agree", agree}});
  } else {
    print_header(out, rs.lie_type, lambda);
    out << "dimension: " << to_string(wm.total_dim) << '\n';
    print_matrix(out, "sum over weights of mu_i mu_j", brute);
    out << "x (sum of mu_j^2 at a long simple root): " << to_string(x) << '\n';
    print_matrix(out, "(x/2) S", closed);
    out << "agree: " << (agree ? "true" : "false") << '\n';
  }
  return agree ? kSuccess : kVerificationFailed;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const auto rs = build(resolve_type(o));
  const auto lambda = resolve_weight(rs, o);
  require_nonzero(lambda);
  const auto cache = make_cache(o);
  const auto wm = weights_for(rs, lambda, cache.get());
  const auto weights = expand(rs, wm);
  const auto coeffs = coefficients(rs, wm, weights);
  Emitter emit{o, out};
  if (emit.json()) {
    Json list = Json::array();
    for (const auto& c : coeffs) list.push_back(to_json(c));
    emit.document("coeffs", rs.lie_type, lambda,
                  {{"coefficients", std::move(list)}, {"x_long", to_json(x_long(rs, weights))}});
    return kSuccess;
  }
  print_header(out, rs.lie_type, lambda);
  out << "x = " << to_string(x_long(rs, weights)) << '\n';
  for (std::size_t i = 0; i < coeffs.size(); ++i) out << "c_" << i + 1 << " = " << format_combo(coeffs[i]) << '\n';
  return kSuccess;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto rs = build(resolve_type(o));
  const auto lambda = resolve_weight(rs, o);
  if (o.symplectic && rs.lie_type.family() != Family::C) {
    throw InvalidArgument("--symplectic-eigenvalues applies to type C only");
  }
  const auto input = parse_complex_list(o.torus);
  if (input.size() != rs.rank()) {
    throw InvalidArgument("--torus has " + std::to_string(input.size()) + " values, " + rs.lie_type.name() +
                          " needs " + std::to_string(rs.rank()));
  }
  const TorusPoint t = o.symplectic ? torus_from_symplectic_eigenvalues(input) : TorusPoint(input);
  require_nonzero(lambda);
  const auto cache = make_cache(o);
  const auto wm = weights_for(rs, lambda, cache.get());
  const auto weights = expand(rs, wm);
  const auto result = evaluate_coefficients(coefficients(rs, wm, weights), t);
  Emitter emit{o, out};
  if (emit.json()) {
    Json values = Json::array();
    for (auto z : result.coefficients) values.push_back(to_json(z));
    Json torus = Json::array();
    for (auto z : t.values()) torus.push_back(to_json(z));
    Json payload = {{"coefficients", std::move(values)}, {"torus", std::move(torus)}};
    if (o.symplectic) {
      Json eig = Json::array();
      for (auto z : input) eig.push_back(to_json(z));
      payload["symplectic_eigenvalues"] = std::move(eig);
    }
    emit.document("eval", rs.lie_type, lambda, std::move(payload));
    return kSuccess;
  }
  print_header(out, rs.lie_type, lambda);
  out << "torus (values on fundamental weights):";
  for (auto z : t.values()) out << ' ' << format_complex(z);
  out << '\n';
  for (std::size_t i = 0; i < result.coefficients.size(); ++i) {
    out << "c_" << i + 1 << "(t) = " << format_complex(result.coefficients[i]) << '\n';
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  if (o.all == !o.type.empty()) throw InvalidArgument("verify needs exactly one of --all or --type");
  if (!o.all) vo.type = resolve_type(o);
  vo.max_rank = o.max_rank;
  vo.weights = o.weight_set == "fundamental" ? WeightSet::Fundamental
               : o.weight_set == "rho"       ? WeightSet::Rho
                                             : WeightSet::All;
  const auto cache = make_cache(o);
  const auto report = run_verification(vo, cache.get());
  Emitter emit{o, out};
  if (emit.json()) {
    Json checks = Json::array();
    for (const auto& e : report.entries) {
      checks.push_back({{"type", e.type.name()},
                        {"lambda", e.lambda ? to_json(*e.lambda) : Json(nullptr)},
                        {"check", e.check},
                        {"status", e.passed ? "pass" : "fail"},
                        {"detail", e.detail}});
    }
    emit.document("verify", vo.type, std::nullopt,
                  {{"checks", std::move(checks)},
                   {"total", report.entries.size()},
                   {"failures", report.failures()},
                   {"passed", report.passed()}});
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : report.entries) {
      rows.push_back({e.passed ? "pass" : "FAIL", e.type.name(), e.lambda ? e.lambda->to_string() : "-", e.check,
                      e.detail});
    }
    print_columns(out, {"status", "type", "lambda", "check", "detail"}, rows);
    out << report.entries.size() << " checks, " << report.failures() << " failed\n";
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Springer morphisms of simple algebraic groups restricted to a maximal torus"};
  app.name("springer");
  app.require_subcommand(1);

  Options o;
  auto* info = app.add_subcommand("info", "Cartan matrix, symmetrization and inverses");
  add_type_options(*info, o);
  add_output_options(*info, o);

  auto* weights = app.add_subcommand("weights", "Weights of V_lambda with multiplicities");
  add_type_options(*weights, o);
  add_weight_option(*weights, o);
  add_output_options(*weights, o);
  weights->add_flag("--expand", o.expand, "List every weight, not only the dominant ones");

  auto* smatrix = app.add_subcommand("smatrix", "S(G,lambda) by brute force and in closed form");
  add_type_options(*smatrix, o);
  add_weight_option(*smatrix, o);
  add_output_options(*smatrix, o);

  auto* coeffs = app.add_subcommand("coeffs", "Coroot coefficients c_i as character combinations");
  add_type_options(*coeffs, o);
  add_weight_option(*coeffs, o);
  add_output_options(*coeffs, o);

  auto* eval = app.add_subcommand("eval", "Evaluate theta_lambda at a torus point");
  add_type_options(*eval, o);
  add_weight_option(*eval, o);
  add_output_options(*eval, o);
  eval->add_option("--torus", o.torus, "Comma-separated complex values (a, bi, a+bi)")->required();
  eval->add_flag("--symplectic-eigenvalues", o.symplectic,
                 "Read --torus as the eigenvalues t_1..t_n of a symplectic torus element (type C)");

  auto* verify = app.add_subcommand("verify", "Check the weight-sum identities over a grid");
  add_type_options(*verify, o);
  add_output_options(*verify, o);
  verify->add_flag("--all", o.all, "Every type of rank up to --max-rank");
  verify->add_option("--max-rank", o.max_rank, "Largest rank for --all")->check(CLI::Range(1, 8));
  verify->add_option("--weights", o.weight_set, "Highest weights to check")
      ->check(CLI::IsMember({"fundamental", "rho", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*weights) return cmd_weights(o, out);
    if (*smatrix) return cmd_smatrix(o, out);
    if (*coeffs) return cmd_coeffs(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const NotAlmostFaithfulError& e) {
    err << "error: " << e.what() << '\n';
    return kNotAlmostFaithful;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"springer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace springer::cli
