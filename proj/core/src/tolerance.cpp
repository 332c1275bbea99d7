#include "logres/tolerance.hpp"

#include "logres/error.hpp"

namespace logres {

Tolerances Tolerances::default_profile() { return Tolerances{}; }

Tolerances Tolerances::strict_profile() {
  Tolerances t;
  t.profile = "strict";
  t.merge = 1e-10;
  t.residual = 1e-11;
  t.root_convergence = 1e-15;
  t.newton_target = 1e-13;
  t.candidate_filter = 1e-7;
  t.degeneracy = 1e-7;
  t.on_divisor = 1e-10;
  t.snap_distance = 1e-11;
  return t;
}

Tolerances Tolerances::from_profile(std::string_view name) {
  if (name.empty() || name == "default") return default_profile();
  if (name == "strict") return strict_profile();
  throw PreconditionError("unknown tolerance profile '" + std::string(name) + "'");
}

}  // namespace logres
