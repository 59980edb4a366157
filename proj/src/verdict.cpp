#include "capgeo/verdict.hpp"

#include "capgeo/convex.hpp"
#include "capgeo/reach.hpp"

#include <algorithm>
#include <cmath>

namespace capgeo {

const char* to_string(Status s) {
  switch (s) {
    case Status::Exists: return "exists";
    case Status::Nonexistence: return "nonexistence";
    case Status::Unresolved: return "unresolved";
  }
  return "unresolved";
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::ConvexIff: return "convex_iff";
    case Criterion::StrictRollingBall: return "strict_rolling_ball";
    case Criterion::NoNeckIff: return "no_neck_iff";
    case Criterion::WitnessViolation: return "witness_violation";
    case Criterion::CheegerGap: return "cheeger_gap";
    case Criterion::GammaReduction: return "gamma_reduction";
    case Criterion::GammaTrivial: return "gamma_trivial";
  }
  return "?";
}

double necessary_quotient(const Domain& omega, const Domain& e, double gamma,
                          const Tolerance& tol) {
  tol.check();
  require_valid(omega, tol);
  require_valid(e, tol);
  const double eA = area(e);
  if (eA < tol.eps_area)
    throw std::invalid_argument("necessary_quotient: subset area below eps_area");

  const auto omega_edges = edges_of(omega);
  const auto e_edges = edges_of(e);

  // Containment within tolerance: every sampled boundary point of E must not
  // stick out of Omega.
  const double stick_tol = 10.0 * tol.eps_geom;
  for (const Vec2& p : sample_boundary(e_edges, 256)) {
    if (!contains(omega_edges, p) && boundary_distance(omega_edges, p) > stick_tol)
      throw std::invalid_argument("necessary_quotient: subset not contained in omega");
  }

  // Split the perimeter of E into the part glued onto the outer boundary and
  // the interior part. Whole pieces classify by a three-point probe; mixed
  // pieces fall back to fine sampling.
  double shared = 0.0, interior = 0.0;
  for (const Edge& ed : e_edges) {
    const double len = ed.length();
    const bool on_a = boundary_distance(omega_edges, ed.a) <= tol.eps_geom;
    const bool on_m = boundary_distance(omega_edges, ed.midpoint()) <= tol.eps_geom;
    const bool on_b = boundary_distance(omega_edges, ed.b) <= tol.eps_geom;
    if (on_a && on_m && on_b) {
      shared += len;
    } else if (!on_a && !on_m && !on_b) {
      interior += len;
    } else {
      const int k = 64;
      for (int i = 0; i < k; ++i) {
        const Vec2 q = ed.point((i + 0.5) / k);
        if (boundary_distance(omega_edges, q) <= tol.eps_geom)
          shared += len / k;
        else
          interior += len / k;
      }
    }
  }
  return (interior + std::cos(gamma) * shared) / eA;
}

namespace {

struct WitnessSearch {
  std::optional<SubsetWitness> found;
};

// Sound-but-incomplete refuter: dilations of erosion components across a
// geometric grid of levels. Any emitted subset is re-checked through the
// weighted quotient, so a hit is a genuine certificate.
std::optional<SubsetWitness> search_witness(const Domain& omega, double q_omega,
                                            const Tolerance& tol) {
  const double inr = inradius(omega, tol);
  if (inr <= 0.0) return std::nullopt;
  const double A = area(omega);
  const int levels = 32;
  const double top = 0.98, bottom = 1.0 / 64.0;
  for (int k = 0; k < levels; ++k) {
    const double frac = top * std::pow(bottom / top, double(k) / (levels - 1));
    const double rho = inr * frac;
    const Region eroded = erode(omega, rho, tol);
    for (const Domain& comp : eroded.components) {
      const Region e_reg = dilate(Region{{comp}}, rho, tol);
      for (const Domain& e : e_reg.components) {
        const double eA = area(e);
        if (eA < tol.eps_area) continue;
        if (eA > A - std::max(4.0 * tol.eps_area, 1e-9 * A)) continue;  // proper only
        double q_e;
        try {
          q_e = necessary_quotient(omega, e, 0.0, tol);
        } catch (const std::exception&) {
          continue;
        }
        if (q_e <= q_omega + tol.eps_root) {
          SubsetWitness w;
          w.subset = e;
          w.quotient_subset = q_e;
          w.quotient_domain = q_omega;
          w.rho = rho;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

Verdict decide_gamma0(const Domain& omega, const Tolerance& tol, bool allow_convex) {
  Verdict v;
  v.gamma = 0.0;
  const double A = area(omega);
  const double P = perimeter(omega);
  v.r_phys = A / P;
  const double q_omega = P / A;

  if (allow_convex && is_convex(omega, tol)) {
    v.criterion_path.push_back(Criterion::ConvexIff);
    v.status = giusti_criterion(omega, tol) ? Status::Exists : Status::Nonexistence;
    if (v.status == Status::Nonexistence)
      v.notes.push_back("curvature supremum exceeds P/|Omega| on a convex domain");
    return v;
  }

  const ReachReport rep = reach_report(omega, v.r_phys, tol);
  if (rep.rolling && rep.strict) {
    v.criterion_path.push_back(Criterion::StrictRollingBall);
    v.status = Status::Exists;
    if (rep.near_miss)
      v.notes.push_back("antipodal near-miss within 10*eps_geom; strictness is an open condition");
    return v;
  }

  if (has_no_neck(omega, v.r_phys, tol)) {
    v.criterion_path.push_back(Criterion::NoNeckIff);
    v.status = Status::Nonexistence;
    v.notes.push_back(rep.rolling
                          ? "no necks at r_phys and the strict rolling ball fails"
                          : "no necks at r_phys and the rolling ball fails");
    return v;
  }

  if (auto w = search_witness(omega, q_omega, tol)) {
    v.criterion_path.push_back(Criterion::WitnessViolation);
    v.status = Status::Nonexistence;
    v.witness = std::move(w);
    return v;
  }

  // Cheeger candidate gap, certified only by an explicit subset.
  const double r_star = inner_cheeger_radius(omega, tol);
  const double h_candidate = 1.0 / r_star;
  if (h_candidate < q_omega - tol.eps_root) {
    const Region eroded = erode(omega, r_star, tol);
    for (const Domain& comp : eroded.components) {
      const Region e_reg = dilate(Region{{comp}}, r_star, tol);
      for (const Domain& e : e_reg.components) {
        const double eA = area(e);
        if (eA < tol.eps_area || eA > A - std::max(4.0 * tol.eps_area, 1e-9 * A))
          continue;
        double q_e;
        try {
          q_e = necessary_quotient(omega, e, 0.0, tol);
        } catch (const std::exception&) {
          continue;
        }
        if (q_e <= q_omega - tol.eps_root) {
          SubsetWitness w;
          w.subset = e;
          w.quotient_subset = q_e;
          w.quotient_domain = q_omega;
          w.rho = r_star;
          v.criterion_path.push_back(Criterion::CheegerGap);
          v.status = Status::Nonexistence;
          v.witness = std::move(w);
          return v;
        }
      }
    }
    v.notes.push_back("cheeger candidate below the quotient but no certified subset");
  }

  v.status = Status::Unresolved;
  v.notes.push_back("no criterion certified existence and no witness refuted it");
  return v;
}

}  // namespace

namespace detail {

Verdict decide_rolling_pipeline(const Domain& omega, const Tolerance& tol) {
  tol.check();
  require_valid(omega, tol);
  return decide_gamma0(omega, tol, /*allow_convex=*/false);
}

}  // namespace detail

Verdict decide(const Domain& omega, double gamma, const Tolerance& tol) {
  tol.check();
  require_valid(omega, tol);
  if (gamma < 0.0 || gamma > 0.5 * kPi + 1e-12)
    throw std::invalid_argument("decide: gamma must lie in [0, pi/2]");

  if (std::abs(gamma - 0.5 * kPi) <= 1e-12) {
    Verdict v;
    v.gamma = gamma;
    v.status = Status::Exists;
    v.criterion_path.push_back(Criterion::GammaTrivial);
    v.r_phys = area(omega) / perimeter(omega);
    v.notes.push_back("cos(gamma) = 0: the weighted necessary condition is trivial");
    return v;
  }

  Verdict v = decide_gamma0(omega, tol, /*allow_convex=*/true);
  if (gamma > 0.0) {
    v.gamma = gamma;
    if (v.status == Status::Exists) {
      v.criterion_path.push_back(Criterion::GammaReduction);
      v.notes.push_back("existence at gamma = 0 lifts to every gamma in [0, pi/2]");
    } else {
      if (v.status == Status::Nonexistence)
        v.notes.push_back(
            "nonexistence at gamma = 0 does not transfer to positive angles; "
            "status downgraded to unresolved");
      v.status = Status::Unresolved;
      v.witness.reset();
    }
  }
  return v;
}

}  // namespace capgeo
