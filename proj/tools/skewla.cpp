// skewla: quaternion matrix computations over JSON.
//
//   skewla <command> [input] [--mode rational|float] [--kind rc|cr] [--seed N] [--tol X]
//
// `input` is a file path, inline JSON, or '-' for standard input (the default).
// Exit status: 0 success, 1 malformed input, 2 domain error.

#include "skewla/checks.hpp"
#include "skewla/eigenpairs.hpp"
#include "skewla/json_io.hpp"
#include "skewla/ode.hpp"
#include "skewla/quasidet.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace skewla;

namespace {

enum class Mode { Rational, Float };

struct Options {
  std::string command;
  std::string input = "-";
  std::optional<Mode> mode;
  Product kind = Product::RC;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
};

/// Domain error carrying extra fields for the error object.
struct Failure {
  std::string code;
  std::string message;
  json extra = json::object();
};

json read_input(const std::string& input) {
  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    const auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) {
      text = input;
    } else {
      std::ifstream in(input);
      if (!in) throw InputError("cannot read input file " + input);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& in, const char* key) {
  if (!in.is_object()) throw InputError("input must be a JSON object");
  if (!in.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return in.at(key);
}

Side parse_side(const json& j) {
  if (j == "left") return Side::Left;
  if (j == "right") return Side::Right;
  throw InputError("side must be \"left\" or \"right\", got " + j.dump());
}

Product parse_kind(const json& j) {
  if (j == "rc") return Product::RC;
  if (j == "cr") return Product::CR;
  throw InputError("kind must be \"rc\" or \"cr\", got " + j.dump());
}

SolutionForm parse_form(const json& j) {
  if (j == "right_exp") return SolutionForm::RightExp;
  if (j == "left_exp") return SolutionForm::LeftExp;
  throw InputError("form must be \"right_exp\" or \"left_exp\", got " + j.dump());
}

double parse_real(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

template <typename S>
EigenPair<S> parse_pair(const json& j, Product default_kind) {
  EigenPair<S> p;
  p.value = scalar_from_json<S>(field(j, "value"));
  p.vector = vector_from_json<S>(field(j, "vector"));
  p.side = parse_side(field(j, "side"));
  p.kind = j.contains("kind") ? parse_kind(j.at("kind")) : default_kind;
  return p;
}

template <typename S>
json pair_to_json(const EigenPair<S>& p) {
  return {{"value", scalar_to_json(p.value)},
          {"vector", matrix_to_json(p.vector)},
          {"side", to_string(p.side)},
          {"kind", to_string(p.kind)}};
}

template <typename S>
json solution_to_json(const ClosedFormSolution<S>& sol) {
  return {{"form", to_string(sol.form)}, {"b", scalar_to_json(sol.b)}, {"c", matrix_to_json(sol.c)}};
}

template <typename S>
json run_command(const Options& opt, const json& in) {
  const Product kind = opt.kind;
  const double tol = opt.tol;
  const std::string& cmd = opt.command;

  if (cmd == "mul") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    const auto b = matrix_from_json<S>(field(in, "b"));
    if (kind == Product::RC ? a.cols() != b.rows() : a.rows() != b.cols()) {
      throw ShapeError("cannot multiply " + shape_string(a.rows(), a.cols()) + " by " +
                       shape_string(b.rows(), b.cols()) + " under " + to_string(kind));
    }
    return {{"kind", to_string(kind)}, {"result", matrix_to_json(mul(a, b, kind))}};
  }
  if (cmd == "power") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    const json& k = field(in, "k");
    if (!k.is_number_integer()) throw InputError("k must be an integer");
    return {{"kind", to_string(kind)}, {"result", matrix_to_json(power(a, k.get<int>(), kind))}};
  }
  if (cmd == "invert") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    try {
      return {{"kind", to_string(kind)}, {"result", matrix_to_json(inverse(a, kind, tol))}};
    } catch (const SingularMatrix& e) {
      throw Failure{"singular", e.what(), {{"rank", e.rank()}}};
    }
  }
  if (cmd == "rank") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    return {{"kind", to_string(kind)}, {"rank", rank(a, kind, tol)}, {"rows", a.rows()}, {"cols", a.cols()}};
  }
  if (cmd == "quasidet") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    if (in.contains("index")) {
      const json& idx = in.at("index");
      if (!idx.is_array() || idx.size() != 2 || !idx[0].is_number_integer() || !idx[1].is_number_integer()) {
        throw InputError("index must be [i, j]");
      }
      const QuasidetIndex qi{idx[0].get<Eigen::Index>(), idx[1].get<Eigen::Index>()};
      return {{"kind", to_string(kind)}, {"index", idx}, {"quasidet", scalar_to_json(quasidet(a, qi, kind, tol))}};
    }
    const auto qm = quasidet_matrix(a, kind, tol);
    json rows = json::array();
    for (Eigen::Index i = 0; i < qm.size(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < qm.size(); ++j) row.push_back(qm(i, j) ? scalar_to_json(*qm(i, j)) : json("undefined"));
      rows.push_back(std::move(row));
    }
    return {{"kind", to_string(kind)}, {"quasidet", std::move(rows)}};
  }
  if (cmd == "eig-verify") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    const auto p = parse_pair<S>(field(in, "pair"), kind);
    const bool pass = eigen_check(a, p, tol);
    const double residual = max_magnitude(eigen_residual(a, p));
    return {{"pair", pair_to_json(p)},
            {"pass", pass},
            {"residual", residual},
            {"matrix_singular", is_matrix_eigenvalue(a, p.value, p.kind, tol)}};
  }
  if (cmd == "diagonalize") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    const auto u = matrix_from_json<S>(field(in, "u"));
    const Side side = parse_side(field(in, "side"));
    try {
      return {{"kind", to_string(kind)}, {"side", to_string(side)},
              {"result", matrix_to_json(diagonalize_via(a, u, kind, side, tol))}};
    } catch (const NotDiagonalizable<S>& e) {
      throw Failure{e.code(), e.what(), {{"result", matrix_to_json(e.result())}}};
    }
  }
  if (cmd == "spectrum") {
    const auto u = matrix_from_json<S>(field(in, "u"));
    const auto d = matrix_from_json<S>(field(in, "d"));
    const Side side = parse_side(field(in, "side"));
    const auto report = spectrum(u, d, side, kind, tol);
    json entries = json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"pair", pair_to_json(e.pair)},
                         {"verified", e.verified},
                         {"matrix_singular", e.matrix_singular},
                         {"pair_singular", e.pair_singular}});
    }
    return {{"matrix", matrix_to_json(report.matrix)},
            {"side", to_string(report.side)},
            {"kind", to_string(report.kind)},
            {"entries", std::move(entries)}};
  }
  if (cmd == "conjugate") {
    const auto p = parse_pair<S>(field(in, "pair"), kind);
    const S c = scalar_from_json<S>(field(in, "c"));
    const auto q = conjugate_eigen(p, c);
    json out = {{"pair", pair_to_json(q)}};
    if (in.contains("a")) {
      const auto a = matrix_from_json<S>(in.at("a"));
      out["verified"] = eigen_check(a, q, tol);
      out["commutes_with_all"] = commutes_with_all(c, a, tol);
      out["scaling_preserves"] = scaling_preserves(p, c, a, tol);
    }
    return out;
  }
  if (cmd == "ode-solve") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    const S b = scalar_from_json<S>(field(in, "b"));
    const auto c = vector_from_json<S>(field(in, "c"));
    const SolutionForm form = in.contains("form") ? parse_form(in.at("form")) : SolutionForm::RightExp;
    ClosedFormSolution<S> sol;
    try {
      sol = build_solution(a, b, c, form, tol);
    } catch (const RejectedSolution& e) {
      json extra = {{"condition", e.condition()}};
      if (e.condition() != "eigen_equation" && c.cols() == 1 && c.rows() == a.rows()) {
        extra["naive_residual"] = grid_residual(a, naive_solution(b, c, form));
      }
      throw Failure{e.code(), e.what(), std::move(extra)};
    }
    json table = json::array();
    double worst = 0.0;
    for (int k = 0; k < kResidualGridPoints; ++k) {
      const double t = kResidualGridEnd * k / (kResidualGridPoints - 1);
      const double r = solution_residual(a, sol, t);
      worst = std::max(worst, r);
      table.push_back({{"t", t}, {"residual", r}});
    }
    return {{"solution", solution_to_json(sol)}, {"residuals", std::move(table)}, {"max_residual", worst}};
  }
  if (cmd == "ode-check") {
    const auto a = matrix_from_json<S>(field(in, "a"));
    const double t_end = in.contains("t_end") ? parse_real(in.at("t_end"), "t_end") : 1.0;
    const double h = in.contains("h") ? parse_real(in.at("h"), "h") : 1e-3;
    json out = {{"t_end", t_end}, {"h", h}};
    Matrix<S> x0;
    std::optional<ClosedFormSolution<S>> sol;
    if (in.contains("b")) {
      const S b = scalar_from_json<S>(in.at("b"));
      const auto c = vector_from_json<S>(field(in, "c"));
      const SolutionForm form = in.contains("form") ? parse_form(in.at("form")) : SolutionForm::RightExp;
      try {
        sol = build_solution(a, b, c, form, tol);
      } catch (const RejectedSolution& e) {
        throw Failure{e.code(), e.what(), {{"condition", e.condition()}}};
      }
      x0 = (*sol)(0.0);
    } else {
      x0 = vector_from_json<S>(field(in, "x0"));
    }
    const auto traj = rk4_integrate(a, x0, t_end, h);
    out["endpoint"] = matrix_to_json(traj.back());
    if (sol) {
      const Matrix<S> exact = (*sol)(t_end);
      out["closed_form"] = matrix_to_json(exact);
      const double gap = max_magnitude(Matrix<S>(traj.back() - exact));
      out["max_difference"] = gap;
      out["agrees"] = gap <= 1e-6;
    }
    return out;
  }
  if (cmd == "exp-identity") {
    const S a = scalar_from_json<S>(field(in, "a"));
    const S c = scalar_from_json<S>(field(in, "c"));
    const double t = parse_real(field(in, "t"), "t");
    const auto r = conj_exp_residuals(a, c, t);
    return {{"residuals", {r[0], r[1], r[2]}}, {"max_residual", std::max({r[0], r[1], r[2]})}};
  }
  throw InputError("unknown command " + cmd);
}

json error_object(const std::string& code, const std::string& message, const json& extra = json::object()) {
  json out = extra;
  out["error"] = code;
  out["message"] = message;
  return out;
}

bool is_ode_command(const std::string& cmd) {
  return cmd == "ode-solve" || cmd == "ode-check" || cmd == "exp-identity";
}

int execute(const Options& opt) {
  if (opt.command == "selftest") {
    const auto results = run_selftest(opt.seed);
    json checks = json::array();
    int passed = 0;
    for (const auto& r : results) {
      checks.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"samples", r.samples}, {"detail", r.detail}});
      if (r.pass) ++passed;
    }
    const json out = {{"seed", opt.seed},
                      {"checks", std::move(checks)},
                      {"passed", passed},
                      {"total", results.size()},
                      {"all_passed", passed == static_cast<int>(results.size())}};
    std::cout << out.dump() << '\n';
    return 0;
  }

  try {
    const json in = read_input(opt.input);
    const Mode mode = opt.mode.value_or(is_ode_command(opt.command) ? Mode::Float : Mode::Rational);
    if (mode == Mode::Rational && is_ode_command(opt.command)) {
      throw UnsupportedMode(opt.command + " needs --mode float");
    }
    const json out = mode == Mode::Rational ? run_command<QuaternionQ>(opt, in) : run_command<QuaternionD>(opt, in);
    std::cout << out.dump() << '\n';
    return 0;
  } catch (const Failure& f) {
    std::cout << error_object(f.code, f.message, f.extra).dump() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cout << error_object(e.code(), e.what()).dump() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cout << error_object("malformed_input", e.what()).dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cout << error_object("malformed_input", e.what()).dump() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion matrix computations with row-column and column-row products"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string mode, kind = "rc";
  app.add_option("--mode", mode, "Scalar mode")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--kind", kind, "Product kind")->check(CLI::IsMember({"rc", "cr"}));
  app.add_option("--seed", opt.seed, "Generator seed");
  app.add_option("--tol", opt.tol, "Float tolerance")->check(CLI::PositiveNumber);

  const std::pair<const char*, const char*> commands[] = {
      {"mul", "Product of a and b"},
      {"power", "k-th power of a"},
      {"invert", "Inverse of a"},
      {"rank", "Rank of a"},
      {"quasidet", "Quasideterminants of a"},
      {"eig-verify", "Check an eigenpair of a"},
      {"diagonalize", "Transform a by u and require a diagonal result"},
      {"spectrum", "Build a matrix from (u, d) and verify its eigenpairs"},
      {"conjugate", "Conjugate an eigenpair by c"},
      {"ode-solve", "Closed-form solution of dx/dt = x * a"},
      {"ode-check", "RK4 trajectory, compared with the closed form when given"},
      {"exp-identity", "Residuals of the exponent conjugation identity"},
      {"selftest", "Run the property suite"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string(name) != "selftest") sub->add_option("input", opt.input, "File path, inline JSON or -");
    sub->callback([&opt, name = std::string(name)] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (!mode.empty()) opt.mode = mode == "float" ? Mode::Float : Mode::Rational;
  opt.kind = kind == "cr" ? Product::CR : Product::RC;
  return execute(opt);
}
