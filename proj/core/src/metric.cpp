#include "radialgeo/metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + item + "' in factor spec");
    }
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "' in factor spec");
    out.push_back(value);
  }
  return out;
}

int third_axis(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j) throw std::invalid_argument("axes must be distinct and in 0..2");
  return 3 - i - j;
}

}  // namespace

ConformalFactor::ConformalFactor(FactorKind kind, std::string name, Eval eval, FactorDomain domain)
    : kind_(kind), name_(std::move(name)), eval_(std::move(eval)), domain_(domain) {}

ConformalFactor ConformalFactor::euclidean() {
  return {FactorKind::Euclidean, "euclidean", [](double) { return FactorValue{1.0, 0.0, 0.0}; },
          FactorDomain::NonNegative};
}

ConformalFactor ConformalFactor::radial_model() {
  return {FactorKind::RadialModel, "radial",
          [](double t) {
            const double s = std::sqrt(t);
            return FactorValue{s, 0.5 / s, -0.25 / (t * s)};
          },
          FactorDomain::Positive};
}

ConformalFactor ConformalFactor::exp_model() {
  return {FactorKind::ExpModel, "exp",
          [](double t) {
            const double e = std::exp(-t);
            return FactorValue{e, -e, e};
          },
          FactorDomain::NonNegative};
}

ConformalFactor ConformalFactor::custom(std::string name, Eval eval, FactorDomain domain) {
  return {FactorKind::Custom, std::move(name), std::move(eval), domain};
}

ConformalFactor ConformalFactor::parse(const std::string& text) {
  if (text == "euclidean") return euclidean();
  if (text == "radial") return radial_model();
  if (text == "exp") return exp_model();

  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("unknown factor '" + text + "'");
  const std::string rest = text.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("custom factor needs <family>:<args>");
  const std::string family = rest.substr(0, colon);
  const std::vector<double> args = parse_numbers(rest.substr(colon + 1));
  if (args.size() != 2) throw std::invalid_argument("custom factor family '" + family + "' takes two numbers");
  const double a = args[0];
  const double b = args[1];

  if (family == "affine") {
    return custom(text, [a, b](double t) { return FactorValue{a + b * t, b, 0.0}; });
  }
  if (family == "power") {
    return custom(
        text,
        [a, b](double t) {
          const double p = a * std::pow(t, b);
          return FactorValue{p, b * p / t, b * (b - 1.0) * p / (t * t)};
        },
        FactorDomain::Positive);
  }
  if (family == "exp") {
    return custom(text, [a, b](double t) {
      const double e = a * std::exp(b * t);
      return FactorValue{e, b * e, b * b * e};
    });
  }
  throw std::invalid_argument("unknown custom factor family '" + family + "'");
}

bool ConformalFactor::in_domain(double t) const {
  if (!std::isfinite(t) || t < 0.0) return false;
  if (domain_ == FactorDomain::Positive) return t >= kMinRadius * kMinRadius;
  return true;
}

FactorValue ConformalFactor::eval(double t) const {
  if (!in_domain(t)) {
    std::ostringstream msg;
    msg << "t = " << t << " outside the domain of factor '" << name_ << "'";
    throw DomainError(msg.str());
  }
  const FactorValue v = eval_(t);
  if (!std::isfinite(v.h) || !std::isfinite(v.dh) || !std::isfinite(v.d2h) || v.h == 0.0) {
    std::ostringstream msg;
    msg << "factor '" << name_ << "' is zero or not finite at t = " << t;
    throw DomainError(msg.str());
  }
  return v;
}

Vec3 ChristoffelTable::contract(const Vec3& a, const Vec3& b) const {
  Vec3 out = Vec3::Zero();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[k] += gamma[k][i][j] * a[i] * b[j];
  return out;
}

FactorValue factor_eval(const ConformalFactor& factor, double t) { return factor.eval(t); }

double metric_inner(const ConformalFactor& factor, const Vec3& x, const Vec3& v, const Vec3& w) {
  const double h = factor.at(x).h;
  return v.dot(w) / (h * h);
}

double metric_norm(const ConformalFactor& factor, const Vec3& x, const Vec3& v) {
  return v.norm() / std::abs(factor.at(x).h);
}

Vec3 factor_gradient(const ConformalFactor& factor, const Vec3& x) { return 2.0 * factor.at(x).dh * x; }

ChristoffelTable christoffel(const ConformalFactor& factor, const Vec3& x) {
  const FactorValue fv = factor.at(x);
  // dlog[j] = F_{,j} / F
  const Vec3 dlog = 2.0 * fv.dh * x / fv.h;
  ChristoffelTable table;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) table.gamma[j][i][i] = dlog[j];
      // Gamma^i_{ij} = Gamma^i_{ji} = -F_{,j}/F, including i == j.
      table.gamma[i][i][j] = -dlog[j];
      table.gamma[i][j][i] = -dlog[j];
    }
  }
  return table;
}

double sectional_curvature(const ConformalFactor& factor, const Vec3& x, int i, int j) {
  const int k = third_axis(i, j);
  const auto [f, df, d2f] = factor.at(x);
  return -4.0 * df * df * x[k] * x[k] + 4.0 * f * df + 4.0 * (x[i] * x[i] + x[j] * x[j]) * (-df * df + f * d2f);
}

double sectional_curvature_general(const ConformalFactor& factor, const Vec3& x, int i, int j) {
  const int k = third_axis(i, j);
  const auto [f, df, d2f] = factor.at(x);
  // (F_{,a}/F)_{,a} with F_{,a} = 2 x_a h'
  const auto log_second = [&](int a) { return 2.0 * df / f + 4.0 * x[a] * x[a] * (f * d2f - df * df) / (f * f); };
  const double log_k = 2.0 * x[k] * df / f;
  return (log_second(i) + log_second(j) - log_k * log_k) * f * f;
}

double curve_length(const ConformalFactor& factor, std::span<const Vec3> samples) {
  if (samples.size() < 2) throw std::invalid_argument("curve_length needs at least two samples");
  const auto inv_h = [&](const Vec3& p) { return 1.0 / std::abs(factor.at(p).h); };
  double total = 0.0;
  double left = inv_h(samples[0]);
  for (std::size_t n = 1; n < samples.size(); ++n) {
    const Vec3& a = samples[n - 1];
    const Vec3& b = samples[n];
    const double right = inv_h(b);
    const double mid = inv_h(0.5 * (a + b));
    total += (b - a).norm() / 6.0 * (left + 4.0 * mid + right);
    left = right;
  }
  return total;
}

}  // namespace radialgeo
