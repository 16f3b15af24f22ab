#pragma once

// Seeded end-to-end property checks shared by the acceptance runner and the
// `selftest` subcommand.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bianchi/dynamics.hpp"
#include "bianchi/sampling.hpp"
#include "bianchi/tables.hpp"
#include "bianchi/variety.hpp"

namespace bianchi::checks {

struct Result {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means untimed
};

namespace detail {

inline Result timed(std::string name, double limit, const std::function<void(Result&)>& body) {
  Result r;
  r.name = std::move(name);
  r.limit_seconds = limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && r.seconds >= limit) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("too slow");
  }
  return r;
}

inline void fail(Result& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

}  // namespace detail

inline Result tables() {
  return detail::timed("table reproduction", 1.0, [](Result& r) {
    const auto diff = diff_tables(expected_tables(), compute_tables());
    if (!diff.empty()) detail::fail(r, diff.front() + " (" + std::to_string(diff.size()) + " cells differ)");
    else r.detail = "10 rows match";
  });
}

inline Result jacobi_equivalence(std::uint64_t seed, int n = 1000) {
  return detail::timed("three-way Jacobi equivalence", 30.0, [=](Result& r) {
    sampling::Engine rng(seed);
    int lie = 0;
    for (int i = 0; i < n; ++i) {
      const StructureTensor q = sampling::random_candidate(rng);
      const bool a = jacobi_structure_constants(q), b = jacobi_form(q), c = jacobi_schouten(q);
      const Disassembling d = disassemble(q);
      if (a != b || a != c) {
        std::ostringstream os;
        os << q.q();
        detail::fail(r, "oracles disagree on q = " + os.str());
      }
      if (a != is_zero(d.S * d.a)) detail::fail(r, "Jacobi differs from S a = 0");
      lie += a;
    }
    if (r.pass) r.detail = std::to_string(n) + " samples, " + std::to_string(lie) + " Lie";
  });
}

inline Result gl_invariance(std::uint64_t seed, int n = 500) {
  return detail::timed("GL-invariance of classify", 0, [=](Result& r) {
    sampling::Engine rng(seed);
    int b2 = 0;
    for (int i = 0; i < n; ++i) {
      const StructureTensor q = sampling::random_lie(rng);
      const GLTransform psi = sampling::random_gl(rng);
      const BianchiType t = classify(q);
      if (!(classify(act(psi, q)) == t)) detail::fail(r, "type changed for " + t.name());
      b2 += t.kind == BianchiKind::B2;
    }
    if (r.pass) r.detail = std::to_string(n) + " pairs, " + std::to_string(b2) + " of type B2";
  });
}

inline Result complex_property(std::uint64_t seed, int n = 100) {
  return detail::timed("coboundaries are cocycles", 0, [=](Result& r) {
    sampling::Engine rng(seed);
    for (int i = 0; i < n; ++i) {
      const StructureTensor q = sampling::random_lie(rng);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          if (!is_zero(compat_pairing(q, coboundary(q, elementary(a, b)))))
            detail::fail(r, "nonzero pairing for a basis endomorphism");
    }
    if (r.pass) r.detail = std::to_string(n) + " structures x 9 endomorphisms";
  });
}

inline Result dimension_laws(std::uint64_t seed, int n = 200) {
  return detail::timed("dimension laws", 0, [=](Result& r) {
    sampling::Engine rng(seed);
    std::array<int, 4> by_rank{};
    for (int i = 0; i < n; ++i) {
      // mix full random and low-rank symmetric forms so every rank occurs
      const Mat3 s = i % 2 ? sampling::random_symmetric(rng)
                           : sampling::random_symmetric_rank(rng, static_cast<int>(rng() % 4));
      const std::size_t rank = static_cast<std::size_t>(sampling::rank_by_minors(s));
      ++by_rank[rank];
      if (cohomology_report(StructureTensor(s)).dim_Z2 != 9 - rank) detail::fail(r, "dim Z^2(c_F) != 9 - rank");
      if (zeta_fiber_basis(s).size() != 3 - rank) detail::fail(r, "zeta fiber size != 3 - rank");
    }
    for (int i = 0; i < n; ++i)
      if (cohomology_report(sampling::random_non_unimodular_lie(rng)).dim_Z2 != 6)
        detail::fail(r, "non-unimodular dim Z^2 != 6");
    if (r.pass)
      r.detail = "ranks 0..3 seen " + std::to_string(by_rank[0]) + "/" + std::to_string(by_rank[1]) + "/" +
                 std::to_string(by_rank[2]) + "/" + std::to_string(by_rank[3]) + ", " + std::to_string(n) +
                 " non-unimodular";
  });
}

/// Lie(V, c) for c of type A2 is Lie_0(V) u span(s^2, alpha_3).
inline Result a2_variety(std::uint64_t seed, int n = 200) {
  return detail::timed("A2 compatibility variety", 0, [=](Result& r) {
    sampling::Engine rng(seed);
    const Mat3 a3 = charge(2).q();
    std::vector<linalg::RowVector> lie0, plane;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        Mat3 m;
        m(i, j) = m(j, i) = 1;
        lie0.push_back(StructureTensor(m).coords());
        if (i < 2 && j < 2) plane.push_back(StructureTensor(m).coords());
      }
    plane.push_back(StructureTensor(a3).coords());
    auto both = lie0;
    both.insert(both.end(), plane.begin(), plane.end());
    const std::size_t inter = lie0.size() + plane.size() - linalg::rank(linalg::DenseMatrix::from_rows(both, 9));
    if (lie0.size() != 6 || plane.size() != 4 || inter != 3) detail::fail(r, "subspace dimensions are not 6, 4, 3");

    int members = 0;
    for (const int sign : {1, -1}) {
      Mat3 base;
      base(0, 0) = 1;
      base(1, 1) = sign;
      const CompatibilityVariety var(StructureTensor{base});
      for (int i = 0; i < n; ++i) {
        Mat3 m;
        switch (i % 4) {
          case 0: m = sampling::random_symmetric(rng); break;
          case 1: {
            m = sampling::random_symmetric(rng);
            for (std::size_t k = 0; k < 3; ++k) m(k, 2) = m(2, k) = 0;
            m += a3 * sampling::random_entry(rng);
            break;
          }
          case 2: m = sampling::random_symmetric(rng) + a3 * sampling::random_entry(rng); break;
          default: m = sampling::random_matrix(rng); break;
        }
        const StructureTensor q(m);
        const bool predicted = linalg::in_span(lie0, q.coords(), 9) || linalg::in_span(plane, q.coords(), 9);
        const bool member = var.member(q);
        members += member;
        if (member != predicted) detail::fail(r, "membership disagrees with the union description");
      }
    }
    if (r.pass) r.detail = std::to_string(2 * n) + " samples, " + std::to_string(members) + " members";
  });
}

inline Result trajectories(std::uint64_t seed, int n = 20) {
  return detail::timed("trajectory agreement", 10.0, [=](Result& r) {
    sampling::Engine rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), lam(0.0, 2.0), mu(0.1, 2.0);
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const Family f = static_cast<Family>(i % 3);
      const double p = f == Family::B1 ? lam(rng) : mu(rng);
      std::array<double, 2> start{unit(rng), unit(rng)};
      if (std::abs(start[0]) < 1e-3) start[0] = 0.5;
      const Trajectory num = integrate_trajectory(transpose(family_phi(f, p)), start, 3.0, 1e-3);
      const Trajectory exact = closed_form_trajectory(f, p, start, sample_times(num));
      worst = std::max(worst, sup_distance(num, exact));
    }
    if (worst > 1e-6) detail::fail(r, "closed form vs RK4 discrepancy " + std::to_string(worst));

    double limit_gap = 0;
    std::vector<double> ts;
    for (int k = 0; k <= 300; ++k) ts.push_back(k * 0.01);
    for (const auto& s : hexagon_starts()) {
      const Trajectory lim = closed_form_trajectory(Family::B1, 1.0, s, ts);
      for (const Family f : {Family::B2plus, Family::B2minus})
        limit_gap = std::max(limit_gap, sup_distance(closed_form_trajectory(f, 1e-6, s, ts), lim));
    }
    if (limit_gap > 1e-3) detail::fail(r, "mu -> 0 limit gap " + std::to_string(limit_gap));
    char buf[160];
    std::snprintf(buf, sizeof buf, "max RK4 gap %.2e, mu=1e-6 limit gap %.2e", worst, limit_gap);
    if (r.pass) r.detail = buf;
  });
}

inline Result contractions() {
  return detail::timed("contraction detection", 0, [](Result& r) {
    const Mat3 a3 = charge(2).q();
    const std::vector<Rational> ts{0, Rational(Integer(1), Integer(4)), Rational(Integer(1), Integer(2)),
                                   Rational(Integer(3), Integer(4)), 1};
    Mat3 e11;
    e11(0, 0) = 1;
    const DeformationPath b1 = deform(StructureTensor(e11), StructureTensor(e11 + a3), ts);
    if (contraction_verdict(b1) != ContractionVerdict::contraction || b1.samples.front().type.name() != "A1" ||
        b1.samples.back().type.name() != "B1")
      detail::fail(r, "B1 -> A1 family not flagged as a contraction onto A1");
    for (const int sign : {1, -1}) {
      Mat3 c0 = e11;
      c0(1, 1) = sign;
      const DeformationPath b2 = deform(StructureTensor(c0), StructureTensor(c0 + a3), ts);
      if (contraction_verdict(b2) != ContractionVerdict::stratum_crossing)
        detail::fail(r, "B2 family not flagged as stratum-crossing");
    }
    if (r.pass) r.detail = "B1 -> A1: contraction; B2+- families: stratum-crossing";
  });
}

inline std::vector<Result> run_all(std::uint64_t seed) {
  return {tables(),           jacobi_equivalence(seed), gl_invariance(seed), complex_property(seed),
          dimension_laws(seed), a2_variety(seed),       trajectories(seed),  contractions()};
}

}  // namespace bianchi::checks
