#include "fpst/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpst/apps.hpp"
#include "fpst/entire.hpp"
#include "fpst/fpi.hpp"
#include "fpst/reference.hpp"
#include "fpst/stieltjes.hpp"
#include "fpst/verify.hpp"

namespace fpst::cli {

namespace {

using Value = std::variant<double, long long, bool, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

struct Report {
  std::string command;
  Record params;
  std::vector<Record> results;
  Record diagnostics;
};

enum class Format { text, json, csv };

struct Common {
  std::string format = "text";
  double tol = 1e-10;
  int term_cap = 2000;

  [[nodiscard]] SeriesControl control() const {
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("--tol must lie in (0, 1)");
    if (term_cap < 1) throw DomainError("--term-cap must be positive");
    SeriesControl c;
    c.rel_tol = tol;
    c.term_cap = term_cap;
    return c;
  }
  [[nodiscard]] Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::text;
  }
};

std::string json_text(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    return std::isfinite(*d) ? format_real(*d) : "null";
  }
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return nlohmann::json(std::get<std::string>(v)).dump();
}

std::string plain_text(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

std::string csv_field(const Value& v) {
  std::string s = plain_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit_object(std::ostream& out, const Record& record) {
  out << '{';
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i) out << ',';
    out << nlohmann::json(record[i].first).dump() << ':' << json_text(record[i].second);
  }
  out << '}';
}

void emit(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      out << "{\"command\":" << nlohmann::json(report.command).dump() << ",\"params\":";
      emit_object(out, report.params);
      out << ",\"results\":[";
      for (std::size_t i = 0; i < report.results.size(); ++i) {
        if (i) out << ',';
        emit_object(out, report.results[i]);
      }
      out << "],\"diagnostics\":";
      emit_object(out, report.diagnostics);
      out << "}\n";
      break;
    }
    case Format::csv: {
      if (report.results.empty()) break;
      const auto& first = report.results.front();
      for (std::size_t i = 0; i < first.size(); ++i) out << (i ? "," : "") << first[i].first;
      out << '\n';
      for (const auto& row : report.results) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].second);
        out << '\n';
      }
      break;
    }
    case Format::text: {
      out << report.command;
      for (const auto& [k, v] : report.params) out << ' ' << k << '=' << plain_text(v);
      out << '\n';
      for (std::size_t r = 0; r < report.results.size(); ++r) {
        if (report.results.size() > 1) out << "[" << r << "]\n";
        for (const auto& [k, v] : report.results[r]) out << "  " << k << " = " << plain_text(v) << '\n';
      }
      for (const auto& [k, v] : report.diagnostics) out << "  # " << k << ": " << plain_text(v) << '\n';
      break;
    }
  }
}

double parse_limit(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || std::isnan(v)) {
    throw DomainError("cannot parse number '" + text + "'");
  }
  return v;
}

double relative_error(double value, double ref) {
  if (!std::isfinite(ref)) return std::nan("");
  return std::fabs(value - ref) / std::max(std::fabs(ref), 1e-300);
}

struct FunctionChoice {
  std::string key = "exp_neg";
  std::string coeff_file;

  [[nodiscard]] EntireFunction resolve() const {
    if (!coeff_file.empty()) return load_coefficient_file(coeff_file);
    return function_from_key(key);
  }
  [[nodiscard]] std::string label() const { return coeff_file.empty() ? key : "file:" + coeff_file; }
};

void add_function_options(CLI::App* cmd, FunctionChoice& choice) {
  auto* key = cmd->add_option("--f", choice.key,
                              "Built-in function key: exp_neg, exp[b], power_exp[n], beta_poly[r,s], "
                              "gauss_exp[alpha,beta], monomial[m], zero");
  auto* file = cmd->add_option("--coeff-file", choice.coeff_file,
                               "Polynomial from a file of (k, c_k) pairs (text lines or JSON)");
  key->excludes(file);
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--tol", common.tol, "Relative truncation tolerance of every series")
      ->capture_default_str();
  cmd->add_option("--term-cap", common.term_cap, "Hard cap on terms per series")->capture_default_str();
}

// Oracle values are advisory: a failing oracle is reported, not fatal.
template <typename Fn>
double try_oracle(Report& report, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    report.diagnostics.emplace_back("oracle_error", e.tag() + ": " + e.what());
    return std::nan("");
  }
}

template <typename Fn>
std::optional<OracleReport> try_epsilon_oracle(Report& report, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    report.diagnostics.emplace_back("oracle_error", e.tag() + ": " + e.what());
    return std::nullopt;
  }
}

struct StieltjesArgs {
  FunctionChoice f;
  double omega = 0.0;
  std::string a = "inf";
  int n = 1;
  double alpha = 0.5;
  bool no_oracle = false;
};

Record stieltjes_row(const EntireFunction& f, const StieltjesQuery& q, const SeriesControl& control,
                     bool oracle, Report& report) {
  const auto e = eval_stieltjes(f, q, control);
  const double o = oracle ? try_oracle(report, [&] {
    return reference::stieltjes_quadrature(f, q.omega, q.a, q.lambda()).value;
  }) : std::nan("");
  Record row{{"value", e.total},
             {"naive_sum", e.naive_sum()},
             {"singular_term", e.singular_term},
             {"tail_estimate", e.tail_estimate},
             {"terms", static_cast<long long>(e.terms_used)},
             {"oracle", o},
             {"rel_err", relative_error(e.total, o)}};
  try {
    const auto d = dominant_term(f, q, control);
    row.emplace_back("dominant_coefficient", d.coefficient);
    row.emplace_back("dominant_power", d.power);
    row.emplace_back("dominant_source", to_string(d.source));
    row.emplace_back("zero_order", static_cast<long long>(d.zero_order));
  } catch (const DomainError& e) {
    report.diagnostics.emplace_back("dominant_term", std::string(e.what()));
  }
  return row;
}

struct FpArgs {
  FunctionChoice f;
  std::string kind = "origin";
  std::string a = "inf";
  double c = 1.0;
  double rho = 1.5;
  double omega = 0.1;
  int n = 1;
  double alpha = 0.5;
  bool oracle = false;
};

Report run_fp(const FpArgs& args, const SeriesControl& control) {
  const auto f = args.f.resolve();
  Report report{"fp", {{"f", args.f.label()}, {"kind", args.kind}}, {}, {}};
  FinitePartValue v;
  std::optional<OracleReport> oracle;
  if (args.kind == "origin") {
    const double a = parse_limit(args.a);
    report.params.emplace_back("a", a);
    report.params.emplace_back("rho", args.rho);
    if (is_integer_order(args.rho)) {
      v = fp_origin_integer(f, a, static_cast<int>(std::lround(args.rho)), control);
    } else {
      v = fp_origin_noninteger(f, a, args.rho, control);
      if (args.oracle) {
        oracle = try_epsilon_oracle(report, [&] {
          return fp_epsilon_oracle_origin(f, a, args.rho, default_origin_ladder(args.rho, a));
        });
      }
    }
  } else if (args.kind == "endpoint") {
    report.params.emplace_back("c", args.c);
    report.params.emplace_back("rho", args.rho);
    v = fp_endpoint(f, args.c, args.rho, control);
    if (args.oracle) {
      const int n = static_cast<int>(std::floor(args.rho));
      oracle = try_epsilon_oracle(report, [&] {
        return fp_epsilon_oracle(f, args.c, n, args.rho - n, default_endpoint_ladder(args.c));
      });
    }
  } else if (args.kind == "singular") {
    report.params.emplace_back("omega", args.omega);
    report.params.emplace_back("n", static_cast<long long>(args.n));
    report.params.emplace_back("alpha", args.alpha);
    v = fp_singular_term(f, args.omega, args.n, args.alpha, control);
  } else {
    throw DomainError("--kind must be origin, endpoint or singular");
  }
  Record row{{"value", v.value},
             {"terms", static_cast<long long>(v.terms_used)},
             {"tail_estimate", v.tail_estimate}};
  if (oracle) {
    row.emplace_back("oracle", oracle->value);
    row.emplace_back("oracle_error_estimate", oracle->error_estimate);
    row.emplace_back("abs_diff", std::fabs(v.value - oracle->value));
  }
  report.results.push_back(std::move(row));
  return report;
}

struct SweepArgs {
  std::string cmd = "stieltjes";
  FunctionChoice f;
  std::string a = "inf";
  int n = 1;
  double alpha = 0.5;
  double beta = 0.0;
  std::string grid;
  int threads = 0;
};

std::vector<double> parse_grid(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw DomainError("--omega-grid must look like lo:hi:N");
  }
  const double lo = parse_limit(spec.substr(0, first));
  const double hi = parse_limit(spec.substr(first + 1, second - first - 1));
  const double count = parse_limit(spec.substr(second + 1));
  if (!(lo > 0.0) || !(hi >= lo) || !(count >= 1.0) || count != std::floor(count)) {
    throw DomainError("--omega-grid needs 0 < lo <= hi and an integer N >= 1");
  }
  const int n = static_cast<int>(count);
  std::vector<double> grid;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    grid.push_back(lo * std::pow(hi / lo, t));
  }
  return grid;
}

Report run_sweep(const SweepArgs& args, const SeriesControl& control) {
  const auto grid = parse_grid(args.grid);
  Report report{"sweep", {{"cmd", args.cmd}, {"omega_grid", args.grid}}, {}, {}};
  std::function<Record(double)> row_at;
  const double nan = std::nan("");
  if (args.cmd == "stieltjes" || args.cmd == "sqrt-transform") {
    const auto f = args.f.resolve();
    const double a = parse_limit(args.a);
    report.params.emplace_back("f", args.f.label());
    report.params.emplace_back("a", a);
    if (args.cmd == "stieltjes") {
      report.params.emplace_back("n", static_cast<long long>(args.n));
      report.params.emplace_back("alpha", args.alpha);
      row_at = [=](double w) {
        const StieltjesQuery q{w, a, args.n, args.alpha};
        const auto e = eval_stieltjes(f, q, control);
        double o = nan;
        try {
          o = reference::stieltjes_quadrature(f, w, a, q.lambda()).value;
        } catch (const Error&) {
        }
        double pred = nan;
        try {
          pred = dominant_term(f, q, control).predict(w);
        } catch (const DomainError&) {
        }
        return Record{{"omega", w}, {"expansion", e.total}, {"oracle", o},
                      {"rel_err", relative_error(e.total, o)}, {"singular_term", e.singular_term},
                      {"naive_sum", e.naive_sum()}, {"terms_used", static_cast<long long>(e.terms_used)},
                      {"dominant_pred", pred}};
      };
    } else {
      row_at = [=](double w) {
        const auto e = eval_sqrt_transform(f, w, a, control);
        double o = nan;
        try {
          o = reference::sqrt_transform_quadrature(f, w, a).value;
        } catch (const Error&) {
        }
        // -f(0) ln ω dominates as ω -> 0
        const double pred = -f.coeff(0) * std::log(w);
        return Record{{"omega", w}, {"expansion", e.total}, {"oracle", o},
                      {"rel_err", relative_error(e.total, o)}, {"singular_term", e.singular_term},
                      {"naive_sum", e.naive_sum()}, {"terms_used", static_cast<long long>(e.terms_used)},
                      {"dominant_pred", pred}};
      };
    }
  } else if (args.cmd == "kummeru") {
    report.params.emplace_back("n", static_cast<long long>(args.n));
    report.params.emplace_back("alpha", args.alpha);
    row_at = [=](double w) {
      const apps::KummerParams p{args.n, args.alpha, w};
      const auto u = apps::kummer_u(p, control);
      const double o = reference::kummer_u_quadrature(p).value;
      return Record{{"omega", w}, {"expansion", u.value}, {"oracle", o},
                    {"rel_err", relative_error(u.value, o)}, {"singular_term", nan},
                    {"naive_sum", nan}, {"terms_used", static_cast<long long>(u.terms_used)},
                    {"dominant_pred", apps::kummer_u_leading(p)}};
    };
  } else if (args.cmd == "gaussian-sqrt") {
    report.params.emplace_back("alpha", args.alpha);
    report.params.emplace_back("beta", args.beta);
    row_at = [=](double w) {
      const auto g = apps::gaussian_sqrt(args.alpha, args.beta, w, control);
      const double o = reference::gaussian_sqrt_quadrature(args.alpha, args.beta, w).value;
      return Record{{"omega", w}, {"expansion", g.value}, {"oracle", o},
                    {"rel_err", relative_error(g.value, o)}, {"singular_term", nan},
                    {"naive_sum", nan}, {"terms_used", static_cast<long long>(g.terms_used)},
                    {"dominant_pred", apps::gaussian_sqrt_leading(args.alpha, args.beta, w, control)}};
    };
  } else {
    throw DomainError("--cmd must be stieltjes, sqrt-transform, kummeru or gaussian-sqrt");
  }

  // Rows are computed concurrently and stored by grid index.
  std::vector<Record> rows(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(grid.size(), args.threads > 0 ? args.threads : hw);
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = row_at(grid[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  report.results = std::move(rows);
  report.diagnostics.emplace_back("rows", static_cast<long long>(grid.size()));
  return report;
}

void print_checks(const std::vector<verify::CheckResult>& checks, Format format, std::ostream& out) {
  Report report{"verify", {}, {}, {}};
  long long passed = 0;
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    report.results.push_back(
        {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  report.diagnostics = {{"passed", passed}, {"failed", static_cast<long long>(checks.size()) - passed}};
  if (format != Format::text) {
    emit(report, format, out);
    return;
  }
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.name << " :: " << c.detail << '\n';
  }
  out << passed << " passed, " << checks.size() - passed << " failed\n";
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stieltjes-type transforms through finite-part integration", "fpst"};
  app.require_subcommand(1);

  Common common;
  std::function<Report(const SeriesControl&)> action;
  int exit_override = -1;

  // stieltjes
  StieltjesArgs st;
  auto* st_cmd = app.add_subcommand("stieltjes", "S(w) = int_0^a f(x)/(w+x)^(n+alpha) dx");
  add_function_options(st_cmd, st.f);
  st_cmd->add_option("--omega", st.omega, "omega > 0")->required();
  st_cmd->add_option("--a", st.a, "Upper limit (number or inf)")->capture_default_str();
  st_cmd->add_option("--n", st.n, "Integer part of the order")->capture_default_str();
  st_cmd->add_option("--alpha", st.alpha, "Fractional part of the order, 0 < alpha < 1")->capture_default_str();
  st_cmd->add_flag("--no-oracle", st.no_oracle, "Skip the quadrature oracle");
  add_common(st_cmd, common);
  st_cmd->callback([&] {
    action = [&](const SeriesControl& control) {
      const auto f = st.f.resolve();
      const StieltjesQuery q{st.omega, parse_limit(st.a), st.n, st.alpha};
      Report r{"stieltjes",
               {{"f", st.f.label()}, {"omega", q.omega}, {"a", q.a}, {"n", static_cast<long long>(q.n)},
                {"alpha", q.alpha}},
               {},
               {}};
      r.results.push_back(stieltjes_row(f, q, control, !st.no_oracle, r));
      return r;
    };
  });

  // sqrt-transform
  FunctionChoice sq_f;
  double sq_omega = 0.0;
  std::string sq_a = "inf";
  bool sq_no_oracle = false;
  auto* sq_cmd = app.add_subcommand("sqrt-transform", "int_0^a f(x)/sqrt(w^2+x^2) dx");
  add_function_options(sq_cmd, sq_f);
  sq_cmd->add_option("--omega", sq_omega, "omega > 0")->required();
  sq_cmd->add_option("--a", sq_a, "Upper limit (number or inf)")->capture_default_str();
  sq_cmd->add_flag("--no-oracle", sq_no_oracle, "Skip the quadrature oracle");
  add_common(sq_cmd, common);
  sq_cmd->callback([&] {
    action = [&](const SeriesControl& control) {
      const auto f = sq_f.resolve();
      const double a = parse_limit(sq_a);
      Report r{"sqrt-transform", {{"f", sq_f.label()}, {"omega", sq_omega}, {"a", a}}, {}, {}};
      const auto e = eval_sqrt_transform(f, sq_omega, a, control);
      const double o = sq_no_oracle ? std::nan("") : try_oracle(r, [&] {
        return reference::sqrt_transform_quadrature(f, sq_omega, a).value;
      });
      r.results.push_back({{"value", e.total},
                           {"naive_sum", e.naive_sum()},
                           {"singular_term", e.singular_term},
                           {"tail_estimate", e.tail_estimate},
                           {"terms", static_cast<long long>(e.terms_used)},
                           {"oracle", o},
                           {"rel_err", relative_error(e.total, o)}});
      return r;
    };
  });

  // fp
  FpArgs fp;
  auto* fp_cmd = app.add_subcommand("fp", "Hadamard finite-part integrals");
  add_function_options(fp_cmd, fp.f);
  fp_cmd->add_option("--kind", fp.kind, "origin | endpoint | singular")
      ->check(CLI::IsMember({"origin", "endpoint", "singular"}))
      ->capture_default_str();
  fp_cmd->add_option("--a", fp.a, "Upper limit for --kind origin (number or inf)")->capture_default_str();
  fp_cmd->add_option("--c", fp.c, "Endpoint for --kind endpoint")->capture_default_str();
  fp_cmd->add_option("--rho", fp.rho, "Order of the singularity")->capture_default_str();
  fp_cmd->add_option("--omega", fp.omega, "omega for --kind singular")->capture_default_str();
  fp_cmd->add_option("--n", fp.n, "n for --kind singular")->capture_default_str();
  fp_cmd->add_option("--alpha", fp.alpha, "alpha for --kind singular")->capture_default_str();
  fp_cmd->add_flag("--oracle", fp.oracle, "Also run the epsilon-limit oracle");
  add_common(fp_cmd, common);
  fp_cmd->callback([&] { action = [&](const SeriesControl& control) { return run_fp(fp, control); }; });

  // gauss2f1
  apps::Gauss2F1Params gp;
  auto* g_cmd = app.add_subcommand("gauss2f1", "2F1(n+alpha, r; s; -zeta) for zeta > 1");
  g_cmd->add_option("--n", gp.n)->capture_default_str();
  g_cmd->add_option("--alpha", gp.alpha)->capture_default_str();
  g_cmd->add_option("--r", gp.r)->capture_default_str();
  g_cmd->add_option("--s", gp.s)->capture_default_str();
  g_cmd->add_option("--zeta", gp.zeta)->capture_default_str();
  add_common(g_cmd, common);
  g_cmd->callback([&] {
    action = [&](const SeriesControl& control) {
      Report r{"gauss2f1",
               {{"n", static_cast<long long>(gp.n)}, {"alpha", gp.alpha}, {"r", static_cast<long long>(gp.r)},
                {"s", static_cast<long long>(gp.s)}, {"zeta", gp.zeta}},
               {},
               {}};
      const auto e = apps::gauss2f1_expansion(gp, control);
      const double two = apps::gauss2f1_two_hypergeometric(gp, control).value;
      const double o = try_oracle(r, [&] { return reference::gauss2f1_quadrature(gp).value; });
      r.results.push_back({{"value", e.value},
                           {"two_2f1", two},
                           {"large_zeta", apps::gauss2f1_large_zeta(gp)},
                           {"oracle", o},
                           {"rel_err", relative_error(e.value, o)},
                           {"terms", static_cast<long long>(e.terms_used)}});
      return r;
    };
  });

  // kummeru
  apps::KummerParams kp;
  auto* k_cmd = app.add_subcommand("kummeru", "U(n, 1-alpha, omega)");
  k_cmd->add_option("--n", kp.n)->capture_default_str();
  k_cmd->add_option("--alpha", kp.alpha)->capture_default_str();
  k_cmd->add_option("--omega", kp.omega)->required();
  add_common(k_cmd, common);
  k_cmd->callback([&] {
    action = [&](const SeriesControl& control) {
      Report r{"kummeru",
               {{"n", static_cast<long long>(kp.n)}, {"alpha", kp.alpha}, {"omega", kp.omega}},
               {},
               {}};
      const auto u = apps::kummer_u(kp, control);
      const double two = apps::kummer_u_two_hypergeometric(kp, control).value;
      const double o = try_oracle(r, [&] { return reference::kummer_u_quadrature(kp).value; });
      r.results.push_back({{"value", u.value},
                           {"two_1f1", two},
                           {"oracle", o},
                           {"rel_err", relative_error(u.value, o)},
                           {"terms", static_cast<long long>(u.terms_used)},
                           {"leading", apps::kummer_u_leading(kp)}});
      return r;
    };
  });

  // gaussian-sqrt
  double ga = 1.0;
  double gb = 0.0;
  double gw = 0.0;
  auto* gs_cmd = app.add_subcommand("gaussian-sqrt", "int_0^inf exp(-alpha x^2 + beta x)/sqrt(w^2+x^2) dx");
  gs_cmd->add_option("--alpha", ga)->capture_default_str();
  gs_cmd->add_option("--beta", gb)->capture_default_str();
  gs_cmd->add_option("--omega", gw)->required();
  add_common(gs_cmd, common);
  gs_cmd->callback([&] {
    action = [&](const SeriesControl& control) {
      Report r{"gaussian-sqrt", {{"alpha", ga}, {"beta", gb}, {"omega", gw}}, {}, {}};
      const auto v = apps::gaussian_sqrt(ga, gb, gw, control);
      const double o = try_oracle(r, [&] { return reference::gaussian_sqrt_quadrature(ga, gb, gw).value; });
      r.results.push_back({{"value", v.value},
                           {"oracle", o},
                           {"rel_err", relative_error(v.value, o)},
                           {"terms", static_cast<long long>(v.terms_used)},
                           {"leading", apps::gaussian_sqrt_leading(ga, gb, gw, control)}});
      return r;
    };
  });

  // k0
  double kx = 0.0;
  auto* k0_cmd = app.add_subcommand("k0", "Modified Bessel K0(x), 0 < x <= 5");
  k0_cmd->add_option("--x", kx)->required();
  add_common(k0_cmd, common);
  k0_cmd->callback([&] {
    action = [&](const SeriesControl& control) {
      Report r{"k0", {{"x", kx}}, {}, {}};
      const auto v = apps::bessel_k0(kx, control);
      const double o = reference::bessel_k0_classical(kx);
      r.results.push_back({{"value", v.value},
                           {"oracle", o},
                           {"rel_err", relative_error(v.value, o)},
                           {"terms", static_cast<long long>(v.terms_used)}});
      return r;
    };
  });

  // sweep
  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Expansion vs oracle over a log-spaced omega grid");
  sw_cmd->add_option("--cmd", sw.cmd, "stieltjes | sqrt-transform | kummeru | gaussian-sqrt")
      ->check(CLI::IsMember({"stieltjes", "sqrt-transform", "kummeru", "gaussian-sqrt"}))
      ->capture_default_str();
  add_function_options(sw_cmd, sw.f);
  sw_cmd->add_option("--a", sw.a)->capture_default_str();
  sw_cmd->add_option("--n", sw.n)->capture_default_str();
  sw_cmd->add_option("--alpha", sw.alpha)->capture_default_str();
  sw_cmd->add_option("--beta", sw.beta, "beta for --cmd gaussian-sqrt")->capture_default_str();
  sw_cmd->add_option("--omega-grid", sw.grid, "lo:hi:N (log spaced)")->required();
  sw_cmd->add_option("--threads", sw.threads, "Worker threads (0 = hardware)")->capture_default_str();
  add_common(sw_cmd, common);
  sw_cmd->callback([&] { action = [&](const SeriesControl& control) { return run_sweep(sw, control); }; });

  // verify
  int criterion = 0;
  bool acceptance_only = false;
  auto* v_cmd = app.add_subcommand("verify", "Run the acceptance criteria and invariant suite");
  v_cmd->add_option("--criterion", criterion, "Run a single acceptance criterion (1-12)");
  v_cmd->add_flag("--acceptance-only", acceptance_only, "Skip the invariant suite");
  add_common(v_cmd, common);
  v_cmd->callback([&] {
    action = [&](const SeriesControl&) {
      std::vector<verify::CheckResult> checks;
      if (criterion != 0) {
        checks.push_back(verify::run_criterion(criterion));
      } else {
        checks = acceptance_only ? verify::run_acceptance() : verify::run_all();
      }
      print_checks(checks, common.fmt(), out);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      exit_override = ok ? 0 : static_cast<int>(ExitCode::verify_failure);
      return Report{};
    };
  });

  // functions
  auto* list_cmd = app.add_subcommand("functions", "List the built-in function keys");
  add_common(list_cmd, common);
  list_cmd->callback([&] {
    action = [&](const SeriesControl&) {
      Report r{"functions", {}, {}, {}};
      for (const auto& entry : builtin_library()) {
        r.results.push_back({{"key", entry.key}, {"description", entry.description},
                             {"example", entry.example.name()}});
      }
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: E_USAGE: " << msg << '\n';
    return static_cast<int>(ExitCode::validation);
  }

  try {
    const auto control = common.control();
    Report r = action(control);
    if (exit_override >= 0) return exit_override;
    emit(r, common.fmt(), out);
    return 0;
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << e.tag() << ": " << msg << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: E_INTERNAL: " << e.what() << '\n';
    return static_cast<int>(ExitCode::validation);
  }
}

}  // namespace fpst::cli
