#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace radialgeo {

struct ProfileValue {
  double phi = 0.0;
  double dphi = 0.0;
  double d2phi = 0.0;
};

/// Generating curve u -> phi(u) of the rotation surface
/// X(u,v) = (phi(u) cos v, phi(u) sin v, u), with its first two derivatives.
class RotationProfile {
 public:
  using Sampler = std::function<ProfileValue(double)>;

  RotationProfile(std::string name, Sampler sampler, double u_min, double u_max);

  /// phi(u) = sqrt(R^2 - u^2): the sphere of radius R centred at the origin.
  /// The interval is shrunk away from the poles by 1e-3 of its length.
  static RotationProfile sphere(double radius);

  /// phi(u) = base + amplitude * cos(u): a generic non-isothermal test profile.
  static RotationProfile cosine(double base, double amplitude, double u_min, double u_max);

  /// Quintic Hermite interpolation through nodes carrying (phi, phi', phi'').
  static RotationProfile from_nodes(std::string name, std::vector<double> u, std::vector<ProfileValue> values);

  /// Throws DomainError outside [u_min, u_max] or where phi <= 0.
  [[nodiscard]] ProfileValue operator()(double u) const;

  [[nodiscard]] double u_min() const { return u_min_; }
  [[nodiscard]] double u_max() const { return u_max_; }
  [[nodiscard]] const std::string& name() const { return name_; }

  /// Nodes of an integrated profile; empty for closed-form profiles.
  /// Construction parameters of closed-form profiles (empty for node profiles).
  [[nodiscard]] const std::map<std::string, double>& params() const { return params_; }
  [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<ProfileValue>& node_values() const { return node_values_; }

 private:
  std::string name_;
  Sampler sampler_;
  double u_min_;
  double u_max_;
  std::map<std::string, double> params_;
  std::vector<double> nodes_;
  std::vector<ProfileValue> node_values_;
};

}  // namespace radialgeo
