#pragma once

#include <string>
#include <string_view>

namespace logres {

// Every numeric threshold the P^2 solver uses. Verdicts record which field decided them.
struct Tolerances {
  std::string profile = "default";
  double merge = 1e-8;             // projective distance under which two points coincide
  double residual = 1e-9;          // scaled residual a refined point must reach
  double root_convergence = 1e-14; // relative Aberth correction at convergence
  double newton_target = 1e-12;    // relative Newton step at which refinement stops
  double candidate_filter = 1e-6;  // scaled residual for keeping a root pair before refinement
  double degeneracy = 1e-9;        // |det J| / (|row1| |row2|) below this is degenerate
  double on_divisor = 1e-8;        // |F(p)| / |F|(|p|) below this puts p on F
  double snap_distance = 1e-9;     // rational snapping acceptance distance
  long snap_height = 1'000'000;    // largest denominator tried when snapping
  int max_root_iterations = 200;
  int max_newton_iterations = 60;

  static Tolerances default_profile();
  static Tolerances strict_profile();
  // "default" or "strict"; throws PreconditionError otherwise.
  static Tolerances from_profile(std::string_view name);
};

}  // namespace logres
