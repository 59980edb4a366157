#pragma once

#include "capgeo/cheeger.hpp"
#include "capgeo/geometry.hpp"
#include "capgeo/morphology.hpp"

#include <optional>

namespace capgeo {

enum class Status { Exists, Nonexistence, Unresolved };

enum class Criterion {
  ConvexIff,
  StrictRollingBall,
  NoNeckIff,
  WitnessViolation,
  CheegerGap,
  GammaReduction,
  GammaTrivial,
};

const char* to_string(Status s);
const char* to_string(Criterion c);

/// A proper subset whose weighted isoperimetric quotient fails to dominate
/// the domain's: a certificate of nonexistence at gamma = 0.
struct SubsetWitness {
  Domain subset;
  double quotient_subset = 0.0;
  double quotient_domain = 0.0;
  double rho = 0.0;  // erosion level the witness was built from
};

struct Verdict {
  double gamma = 0.0;
  Status status = Status::Unresolved;
  std::vector<Criterion> criterion_path;
  double r_phys = 0.0;
  std::optional<SubsetWitness> witness;
  std::vector<std::string> notes;
};

/// (P(E; Omega) + cos(gamma) P(E; boundary)) / |E| for a subset E of Omega.
/// The shared part of the boundary is classified piecewise by distance to
/// the outer boundary against eps_geom.
double necessary_quotient(const Domain& omega, const Domain& e, double gamma,
                          const Tolerance& tol);

/// Existence decision for the capillary problem on the tube over omega at
/// contact angle gamma in [0, pi/2]. Nonexistence is only ever certified at
/// gamma = 0; a vertical-contact certificate lifts to every larger angle but
/// a refutation does not.
Verdict decide(const Domain& omega, double gamma, const Tolerance& tol);

namespace detail {

/// The non-convex pipeline (strict rolling ball, no-neck, witness search)
/// forced even on convex inputs; the coherence tests compare it against the
/// convex criterion.
Verdict decide_rolling_pipeline(const Domain& omega, const Tolerance& tol);

}  // namespace detail

}  // namespace capgeo
