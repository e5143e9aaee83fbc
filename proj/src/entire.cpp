#include "fpst/entire.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace fpst {

struct EntireFunction::State {
  std::string name;
  Family family;
  FamilyParams params;
  CoefficientRule rule;
  Evaluator eval;
  std::optional<int> degree;
  std::optional<EntireFunction> base;
  mutable std::mutex mutex;
  mutable std::vector<double> memo;
};

EntireFunction::EntireFunction(std::string name, Family family, FamilyParams params,
                               CoefficientRule rule, Evaluator eval,
                               std::optional<int> degree, const EntireFunction* base) {
  auto state = std::make_shared<State>();
  state->name = std::move(name);
  state->family = family;
  state->params = params;
  state->rule = std::move(rule);
  state->eval = std::move(eval);
  state->degree = degree;
  if (base != nullptr) state->base = *base;
  state_ = std::move(state);
}

double EntireFunction::coeff(int k) const {
  if (k < 0) throw DomainError("coefficient index must be non-negative");
  if (state_->degree && k > *state_->degree) return 0.0;
  std::lock_guard lock(state_->mutex);
  auto& memo = state_->memo;
  while (static_cast<int>(memo.size()) <= k) {
    const double c = state_->rule(static_cast<int>(memo.size()), std::span<const double>(memo));
    memo.push_back(c);
  }
  return memo[k];
}

Eigen::VectorXd EntireFunction::coefficients(int count) const {
  Eigen::VectorXd out(std::max(count, 0));
  for (int k = 0; k < count; ++k) out[k] = coeff(k);
  return out;
}

bool EntireFunction::has_eval() const noexcept { return static_cast<bool>(state_->eval); }

double EntireFunction::eval(double x) const {
  if (state_->eval) return state_->eval(x);
  return taylor_eval(x);
}

double EntireFunction::taylor_eval(double x, const SeriesControl& control) const {
  if (state_->degree) {
    double acc = 0.0;
    for (int k = *state_->degree; k >= 0; --k) acc = acc * x + coeff(k);
    return acc;
  }
  double power = 1.0;
  return sum_series(control, "taylor_eval(" + name() + ")", [&](int k) {
           const double term = coeff(k) * power;
           power *= x;
           return term;
         }).value();
}

std::optional<int> EntireFunction::degree() const noexcept { return state_->degree; }
const std::string& EntireFunction::name() const noexcept { return state_->name; }
Family EntireFunction::family() const noexcept { return state_->family; }
const FamilyParams& EntireFunction::params() const noexcept { return state_->params; }

const EntireFunction* EntireFunction::base() const noexcept {
  return state_->base ? &*state_->base : nullptr;
}

double shifted_coefficient(const EntireFunction& f, double x0, int k,
                           const SeriesControl& control) {
  if (x0 == 0.0) return f.coeff(k);
  if (auto deg = f.degree()) {
    double acc = 0.0;
    double weight = 1.0;  // C(m, k) x0^{m-k}
    for (int m = k; m <= *deg; ++m) {
      acc += f.coeff(m) * weight;
      weight *= x0 * (m + 1) / (m + 1 - k);
    }
    return acc;
  }
  double weight = 1.0;
  return sum_series(control, "shift(" + f.name() + ") coefficient " + std::to_string(k),
                    [&](int i) {
                      const double term = f.coeff(k + i) * weight;
                      weight *= x0 * (k + i + 1) / (i + 1);
                      return term;
                    })
      .value();
}

ShiftedExpansion shift(const EntireFunction& f, double x0, int K, const SeriesControl& control) {
  if (K < 0) throw DomainError("shift: K must be non-negative");
  ShiftedExpansion out{x0, Eigen::VectorXd(K + 1)};
  for (int k = 0; k <= K; ++k) out.coeffs[k] = shifted_coefficient(f, x0, k, control);
  return out;
}

EntireFunction reflect(const EntireFunction& f) {
  EntireFunction::Evaluator eval;
  if (f.has_eval()) eval = [f](double x) { return f.eval(-x); };
  FamilyParams params;
  return EntireFunction(
      "reflect(" + f.name() + ")", Family::reflected, params,
      [f](int k, std::span<const double>) { return (k % 2 == 0 ? 1.0 : -1.0) * f.coeff(k); },
      std::move(eval), f.degree(), &f);
}

EntireFunction translate(const EntireFunction& f, double x0, const SeriesControl& control) {
  EntireFunction::Evaluator eval;
  if (f.has_eval()) eval = [f, x0](double x) { return f.eval(x + x0); };
  FamilyParams params;
  params.x0 = x0;
  std::ostringstream name;
  name.precision(17);
  name << "translate(" << f.name() << "," << x0 << ")";
  return EntireFunction(
      name.str(), Family::translated, params,
      [f, x0, control](int k, std::span<const double>) {
        return shifted_coefficient(f, x0, k, control);
      },
      std::move(eval), f.degree(), &f);
}

EntireFunction exponential(double b) {
  FamilyParams params;
  params.beta = b;
  std::ostringstream name;
  name.precision(17);
  if (b == -1.0) {
    name << "exp_neg";
  } else {
    name << "exp[" << b << "]";
  }
  return EntireFunction(
      name.str(), Family::exponential, params,
      [b](int k, std::span<const double> prev) { return k == 0 ? 1.0 : prev[k - 1] * b / k; },
      [b](double x) { return std::exp(b * x); });
}

EntireFunction exp_neg() { return exponential(-1.0); }

EntireFunction power_exp(int n) {
  if (n < 1) throw DomainError("power_exp: n must be >= 1");
  FamilyParams params;
  params.n = n;
  return EntireFunction(
      "power_exp[" + std::to_string(n) + "]", Family::power_exp, params,
      [n](int k, std::span<const double> prev) {
        if (k < n - 1) return 0.0;
        if (k == n - 1) return 1.0;
        return -prev[k - 1] / (k - n + 1);
      },
      [n](double x) { return std::exp(-x) * std::pow(x, n - 1); });
}

EntireFunction beta_poly(int r, int s) {
  if (r < 1 || s < r + 1) throw DomainError("beta_poly: need r >= 1 and s >= r + 1");
  const int N = s - r - 1;
  std::vector<double> dense(s - 1, 0.0);
  double binom = 1.0;
  for (int i = 0; i <= N; ++i) {
    dense[r - 1 + i] = (i % 2 == 0 ? 1.0 : -1.0) * binom;
    binom = binom * (N - i) / (i + 1);
  }
  FamilyParams params;
  params.r = r;
  params.s = s;
  return EntireFunction(
      "beta_poly[" + std::to_string(r) + "," + std::to_string(s) + "]", Family::beta_poly,
      params,
      [dense](int k, std::span<const double>) {
        return k < static_cast<int>(dense.size()) ? dense[k] : 0.0;
      },
      [r, N](double x) { return std::pow(x, r - 1) * std::pow(1.0 - x, N); }, s - 2);
}

EntireFunction gauss_exp(double alpha, double beta) {
  FamilyParams params;
  params.alpha = alpha;
  params.beta = beta;
  std::ostringstream name;
  name.precision(17);
  name << "gauss_exp[" << alpha << "," << beta << "]";
  // f' = (β - 2αx) f  =>  k c_k = β c_{k-1} - 2α c_{k-2}
  return EntireFunction(
      name.str(), Family::gauss_exp, params,
      [alpha, beta](int k, std::span<const double> prev) {
        if (k == 0) return 1.0;
        const double two_back = k >= 2 ? prev[k - 2] : 0.0;
        return (beta * prev[k - 1] - 2.0 * alpha * two_back) / k;
      },
      [alpha, beta](double x) { return std::exp(-alpha * x * x + beta * x); });
}

EntireFunction monomial(int m) {
  if (m < 0) throw DomainError("monomial: m must be >= 0");
  FamilyParams params;
  params.m = m;
  return EntireFunction(
      "monomial[" + std::to_string(m) + "]", Family::monomial, params,
      [m](int k, std::span<const double>) { return k == m ? 1.0 : 0.0; },
      [m](double x) { return std::pow(x, m); }, m);
}

EntireFunction zero_function() { return from_coefficients({}, "zero"); }

EntireFunction from_coefficients(std::vector<std::pair<int, double>> pairs, std::string name) {
  int top = -1;
  for (const auto& [k, c] : pairs) {
    if (k < 0) throw DomainError("coefficient index must be non-negative");
    if (c != 0.0) top = std::max(top, k);
  }
  std::vector<double> dense(top + 1, 0.0);
  for (const auto& [k, c] : pairs) {
    if (k <= top) dense[k] += c;
  }
  while (!dense.empty() && dense.back() == 0.0) dense.pop_back();
  const int degree = static_cast<int>(dense.size()) - 1;
  return EntireFunction(
      std::move(name), Family::polynomial, FamilyParams{},
      [dense](int k, std::span<const double>) {
        return k < static_cast<int>(dense.size()) ? dense[k] : 0.0;
      },
      [dense](double x) {
        double acc = 0.0;
        for (auto it = dense.rbegin(); it != dense.rend(); ++it) acc = acc * x + *it;
        return acc;
      },
      degree);
}

EntireFunction parse_coefficient_text(std::string_view text, std::string name) {
  std::vector<std::pair<int, double>> pairs;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '[' || text[first] == '{')) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("coefficient JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("coefficients")) doc = doc["coefficients"];
    if (!doc.is_array()) throw DomainError("coefficient JSON: expected an array");
    for (const auto& item : doc) {
      if (item.is_array() && item.size() == 2 && item[0].is_number_integer() &&
          item[1].is_number()) {
        pairs.emplace_back(item[0].get<int>(), item[1].get<double>());
      } else if (item.is_object() && item.contains("k") && item.contains("c")) {
        pairs.emplace_back(item["k"].get<int>(), item["c"].get<double>());
      } else {
        throw DomainError("coefficient JSON: entries must be [k, c] or {\"k\":..,\"c\":..}");
      }
    }
    return from_coefficients(std::move(pairs), std::move(name));
  }

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double k_raw = 0.0;
    double c = 0.0;
    if (!(fields >> k_raw)) continue;
    std::string extra;
    if (!(fields >> c) || (fields >> extra) || k_raw < 0 || std::floor(k_raw) != k_raw) {
      throw DomainError("coefficient text: malformed line " + std::to_string(lineno));
    }
    pairs.emplace_back(static_cast<int>(k_raw), c);
  }
  return from_coefficients(std::move(pairs), std::move(name));
}

EntireFunction load_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_coefficient_text(buffer.str(), "user:" + path);
}

namespace {

std::vector<double> parse_key_args(std::string_view key, std::string_view& head) {
  const auto open = key.find('[');
  if (open == std::string_view::npos) {
    head = key;
    return {};
  }
  if (key.back() != ']') throw DomainError("malformed function key: " + std::string(key));
  head = key.substr(0, open);
  std::string inner(key.substr(open + 1, key.size() - open - 2));
  std::replace(inner.begin(), inner.end(), ',', ' ');
  std::istringstream in(inner);
  std::vector<double> args;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      args.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw DomainError("malformed argument '" + token + "' in function key " + std::string(key));
    }
  }
  return args;
}

int as_int(double v, std::string_view key) {
  if (std::floor(v) != v) {
    throw DomainError("integer argument expected in function key " + std::string(key));
  }
  return static_cast<int>(v);
}

}  // namespace

EntireFunction function_from_key(std::string_view key) {
  std::string_view head;
  const auto args = parse_key_args(key, head);
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw DomainError("function key " + std::string(key) + " expects " + std::to_string(count) +
                        " argument(s)");
    }
  };
  if (head == "exp_neg") {
    need(0);
    return exp_neg();
  }
  if (head == "exp") {
    need(1);
    return exponential(args[0]);
  }
  if (head == "power_exp") {
    need(1);
    return power_exp(as_int(args[0], key));
  }
  if (head == "beta_poly") {
    need(2);
    return beta_poly(as_int(args[0], key), as_int(args[1], key));
  }
  if (head == "gauss_exp") {
    need(2);
    return gauss_exp(args[0], args[1]);
  }
  if (head == "monomial") {
    need(1);
    return monomial(as_int(args[0], key));
  }
  if (head == "zero") {
    need(0);
    return zero_function();
  }
  throw DomainError("unknown function key: " + std::string(key));
}

std::vector<CatalogEntry> builtin_library() {
  return {
      {"exp_neg", "e^{-x}", exp_neg()},
      {"exp[b]", "e^{b x}", exponential(0.5)},
      {"power_exp[n]", "e^{-x} x^{n-1}", power_exp(2)},
      {"beta_poly[r,s]", "x^{r-1} (1-x)^{s-r-1}", beta_poly(2, 3)},
      {"gauss_exp[alpha,beta]", "e^{-alpha x^2 + beta x}", gauss_exp(1.0, 2.0)},
      {"monomial[m]", "x^m", monomial(2)},
      {"zero", "identically zero", zero_function()},
  };
}

}  // namespace fpst
