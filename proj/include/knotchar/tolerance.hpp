#pragma once

namespace knotchar {

// Absolute tolerances on complex modulus, threaded through every module.
struct Tolerances {
  // |det - 1| accepted when wrapping a matrix as unimodular.
  double construct = 1e-9;
  // |trace^2 - 4| at or below this means a repeated eigenvalue.
  double degenerate = 1e-12;
  // max |A^m - B^n| entry for a pair to count as a representation.
  double relation = 1e-8;
  // CharPoint distance for curve membership.
  double membership = 1e-9;
  // Entrywise matrix comparisons (M ~ +-Id, shared eigenlines).
  double entry = 1e-9;
  // Merging reducible solutions under t -> 1/t, compared on s.
  double dedup = 1e-9;
};

}  // namespace knotchar
