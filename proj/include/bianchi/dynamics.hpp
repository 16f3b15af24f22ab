#pragma once

// Symplectic leaves of solvable structures P = X_phi ^ d/dx3.
//
// phi is stored in display order, phi_a^b = phi(b, a), so the planar
// field X_phi integrates as x' = phi^T x. Everything below the exact
// reconstruction helpers works in double precision.

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/classify.hpp"

namespace bianchi {

struct SolvableNormalForm {
  Mat2 phi;
  std::size_t axis = 2;

  /// q with alpha = 1/2 (phi_2^1 dx1^2 - phi_1^2 dx2^2) + phi_2^2 x2 dx1 - phi_1^1 x1 dx2.
  StructureTensor to_structure() const {
    Mat3 q;
    q(0, 0) = phi(0, 1);
    q(1, 1) = -phi(1, 0);
    q(1, 0) = phi(1, 1);
    q(0, 1) = -phi(0, 0);
    return StructureTensor(q);
  }
};

inline SolvableNormalForm to_solvable_form(const StructureTensor& q) {
  const BianchiType type = classify(q);
  switch (type.kind) {
    case BianchiKind::A0:
    case BianchiKind::A3minus:
    case BianchiKind::A3plus:
      throw UnsupportedForm(type.name() + " is not of the form X_phi ^ d/dx3");
    default: break;
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (!q(i, 2).is_zero() || !q(2, i).is_zero())
      throw UnsupportedForm("structure is not in solvable normal-form coordinates (x3 must be the axis)");
  SolvableNormalForm out;
  out.phi(0, 1) = q(0, 0);
  out.phi(1, 0) = -q(1, 1);
  out.phi(1, 1) = q(1, 0);
  out.phi(0, 0) = -q(0, 1);
  return out;
}

/// P_f = -i_{df} P.
inline exalg::PolyMultiVector hamiltonian_field(const StructureTensor& q, const exalg::Poly3& f) {
  require_lie(q);
  return -exalg::interior(exalg::differential(f), to_bivector(q));
}

using Mat2d = std::array<std::array<double, 2>, 2>;

/// The matrix J of x' = J x for the field X_phi.
inline Mat2d flow_matrix(const Mat2& phi) {
  return {{{phi(0, 0).to_double(), phi(1, 0).to_double()}, {phi(0, 1).to_double(), phi(1, 1).to_double()}}};
}

struct TrajectorySample {
  double t, x1, x2, x3;
};

struct Trajectory {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  std::array<double, 2> start{};
  std::vector<TrajectorySample> samples;
};

enum class Family { B1, B2plus, B2minus };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::B1: return "B1";
    case Family::B2plus: return "B2plus";
    case Family::B2minus: return "B2minus";
  }
  return "?";
}

/// phi of a family member: B1 -> [[-l, 1], [0, -l]], B2+- -> [[-1, 1], [-+mu, -1]].
inline Mat2d family_phi(Family f, double param) {
  switch (f) {
    case Family::B1: return {{{-param, 1.0}, {0.0, -param}}};
    case Family::B2plus: return {{{-1.0, 1.0}, {-param, -1.0}}};
    case Family::B2minus: return {{{-1.0, 1.0}, {param, -1.0}}};
  }
  return {};
}

inline Mat2d transpose(const Mat2d& m) { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

namespace detail {
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace detail

/// Closed-form leaf projections. For B2plus the phase uses atan2, which agrees
/// with arctan(sqrt(mu) x2/x1) for x1 > 0 and stays on the right branch for x1 < 0.
/// x3 is x1(t) - x1(0), the lift along the Hamiltonian field of x3 - x1.
inline Trajectory closed_form_trajectory(Family family, double param, std::array<double, 2> start,
                                         const std::vector<double>& ts) {
  const double x10 = start[0], x20 = start[1];
  Trajectory out{to_string(family), {{family == Family::B1 ? "lambda" : "mu", param}}, start, {}};
  if (family != Family::B1 && !(param > 0))
    throw DomainError(to_string(family) + " needs mu > 0, got " + detail::fmt(param));
  if (family == Family::B2plus && x10 == 0) throw DomainError("B2plus closed form needs x1(0) != 0");
  const double s = std::sqrt(param);
  for (double t : ts) {
    double x1 = 0, x2 = 0;
    switch (family) {
      case Family::B1:
        x1 = x10 * std::exp(-param * t);
        x2 = (x10 * t + x20) * std::exp(-param * t);
        break;
      case Family::B2plus: {
        const double r = std::sqrt(x10 * x10 + param * x20 * x20);
        const double theta = std::atan2(s * x20, x10) + s * t;
        x1 = std::exp(-t) * r * std::cos(theta);
        x2 = std::exp(-t) * (r / s) * std::sin(theta);
        break;
      }
      case Family::B2minus: {
        const double a = (x10 + s * x20) / 2, b = (x10 - s * x20) / 2;
        const double grow = std::exp((s - 1) * t), decay = std::exp(-(s + 1) * t);
        x1 = a * grow + b * decay;
        x2 = (a * grow - b * decay) / s;
        break;
      }
    }
    out.samples.push_back({t, x1, x2, x1 - x10});
  }
  return out;
}

/// Step count and step size used for a run to t_end: dt is rounded so that an
/// integer number of steps ends exactly at t_end.
inline std::pair<long long, double> step_plan(double t_end, double dt) {
  if (!(dt > 0) || !std::isfinite(dt)) throw DomainError("dt must be positive, got " + detail::fmt(dt));
  if (!(t_end > 0) || !std::isfinite(t_end)) throw DomainError("t_end must be positive, got " + detail::fmt(t_end));
  const long long steps = std::max(1LL, std::llround(t_end / dt));
  return {steps, t_end / static_cast<double>(steps)};
}

inline std::vector<double> uniform_times(double t_end, double dt) {
  const auto [steps, h] = step_plan(t_end, dt);
  std::vector<double> out;
  for (long long n = 0; n <= steps; ++n) out.push_back(static_cast<double>(n) * h);
  return out;
}

/// Fixed-step RK4 for x' = J x, with x3' = (J x)_1 carried along.
inline Trajectory integrate_trajectory(const Mat2d& j, std::array<double, 2> start, double t_end, double dt) {
  const auto [steps, h] = step_plan(t_end, dt);
  using State = std::array<double, 3>;
  auto rhs = [&j](const State& s) {
    const double d1 = j[0][0] * s[0] + j[0][1] * s[1];
    const double d2 = j[1][0] * s[0] + j[1][1] * s[1];
    return State{d1, d2, d1};
  };
  auto axpy = [](const State& s, double a, const State& k) {
    return State{s[0] + a * k[0], s[1] + a * k[1], s[2] + a * k[2]};
  };
  Trajectory out{"phi", {{"J11", j[0][0]}, {"J12", j[0][1]}, {"J21", j[1][0]}, {"J22", j[1][1]}}, start, {}};
  out.samples.reserve(static_cast<std::size_t>(steps) + 1);
  State s{start[0], start[1], 0.0};
  out.samples.push_back({0.0, s[0], s[1], s[2]});
  for (long long n = 1; n <= steps; ++n) {
    const State k1 = rhs(s), k2 = rhs(axpy(s, h / 2, k1)), k3 = rhs(axpy(s, h / 2, k2)), k4 = rhs(axpy(s, h, k3));
    for (std::size_t i = 0; i < 3; ++i) s[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    const double t = static_cast<double>(n) * h;
    if (!std::isfinite(s[0]) || !std::isfinite(s[1]))
      throw DomainError("integration produced a non-finite value at step " + std::to_string(n) + " (t = " +
                        detail::fmt(t) + ")");
    out.samples.push_back({t, s[0], s[1], s[2]});
  }
  return out;
}

/// Vertices of the regular hexagon of radius 1 starting on the positive x1 axis.
inline std::vector<std::array<double, 2>> hexagon_starts() {
  std::vector<std::array<double, 2>> out;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 6; ++k) out.push_back({std::cos(k * pi / 3), std::sin(k * pi / 3)});
  return out;
}

/// Sup-norm distance between two trajectories sampled at the same times.
inline double sup_distance(const Trajectory& a, const Trajectory& b) {
  if (a.samples.size() != b.samples.size()) throw DomainError("trajectories have different sample counts");
  double d = 0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    d = std::max(d, std::abs(a.samples[i].x1 - b.samples[i].x1));
    d = std::max(d, std::abs(a.samples[i].x2 - b.samples[i].x2));
  }
  return d;
}

inline std::vector<double> sample_times(const Trajectory& t) {
  std::vector<double> out;
  out.reserve(t.samples.size());
  for (const auto& s : t.samples) out.push_back(s.t);
  return out;
}

inline void write_csv(std::ostream& os, const Trajectory& t, bool full = false) {
  os << (full ? "t,x1,x2,x3\n" : "t,x1,x2\n");
  for (const auto& s : t.samples) {
    os << detail::fmt(s.t) << ',' << detail::fmt(s.x1) << ',' << detail::fmt(s.x2);
    if (full) os << ',' << detail::fmt(s.x3);
    os << '\n';
  }
}

}  // namespace bianchi
