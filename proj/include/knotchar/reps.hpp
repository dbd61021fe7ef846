#pragma once

// Representations of <x, y | x^m = y^n> into SL(2,C) as matrix pairs (A, B).

#include <random>
#include <string_view>
#include <vector>

#include "knotchar/linalg.hpp"
#include "knotchar/modular.hpp"
#include "knotchar/tolerance.hpp"

namespace knotchar {

/// A = rho(x), B = rho(y). Pairs produced by the builders satisfy
/// A^m = B^n up to roundoff; relation_defect measures it for arbitrary input.
struct RepPair {
  UniMat A;
  UniMat B;
  KnotType kt;
};

/// Point (component, r) on an irreducible line.
struct IrredParam {
  ComponentId component;
  Complex r;
};

/// exp(i pi k / m) and exp(i pi k' / n) for an Irr component.
Complex irr_lambda(const KnotType& kt, const ComponentId& c);
Complex irr_mu(const KnotType& kt, const ComponentId& c);

/// A = diag(t^n, t^-n), B = diag(t^m, t^-m). Throws Error(ZeroParameter).
RepPair build_reducible(const KnotType& kt, Complex t);

/// A = diag(lambda, 1/lambda); B has eigenvectors (1, 1) for mu and
/// (r - 1, r) for 1/mu. Any r is accepted; r = 0, 1 give the closure points.
RepPair build_irreducible(const KnotType& kt, const IrredParam& p);

/// max |(A^m - B^n)_ij|.
double relation_defect(const RepPair& p);

/// relation_defect / max(1, |A|^m, |B|^n) with |.| the largest entry
/// modulus; roundoff in the powers grows with that scale.
double scaled_relation_defect(const RepPair& p);

/// Conjugates both matrices by P.
RepPair conjugate_pair(const RepPair& p, const UniMat& P);

enum class ReducibleReason {
  SharedEigenvectorGeneric,
  CaseA_PowerNotCentral,
  CaseB_CentralGenerator,
  CaseC_NonDiagonalizable,
};

std::string_view to_string(ReducibleReason reason);

struct ReducibilityVerdict {
  bool reducible = false;
  ReducibleReason reason = ReducibleReason::SharedEigenvectorGeneric;
  Vec2 common_line;  // meaningful only when reducible
};

/// Decision procedure, most degenerate case first: a central generator, a
/// non-diagonalizable generator, A^m not central, then a shared eigenvector.
/// Throws Error(RelationViolated) if scaled_relation_defect exceeds tol.relation.
ReducibilityVerdict classify_reducibility(const RepPair& p, const Tolerances& tol = {});

/// s = t + 1/t of the split representation with the same character.
/// Throws Error(NotReducible).
Complex semisimplify(const RepPair& p, const Tolerances& tol = {});

/// Cross-ratio coordinate of four points of P^1 in the normalization where
/// e1 -> infinity, e2 -> 0, f1 -> 1; equals r for f1 = (1, 1), f2 = (r - 1, r).
Complex cross_ratio_r(const Vec2& e1, const Vec2& e2, const Vec2& f1, const Vec2& f2);

/// Moves (lambda, mu, r) to the representative with both eigenvalue
/// arguments in (0, pi). Every flip of lambda or mu sends r to 1 - r.
/// Throws Error(EigenvalueNotRootOfUnity) when lambda^m or mu^n is not +-1
/// within tol, or the recovered indices do not name a component.
IrredParam canonicalize(const KnotType& kt, Complex lambda, Complex mu, Complex r, double tol);

/// Recovers the canonical (k, k', r) of an irreducible pair.
/// Throws Error(NotIrreducible).
IrredParam double_ratio(const RepPair& p, const Tolerances& tol = {});

enum class Letter { X, XInv, Y, YInv };
using Word = std::vector<Letter>;

/// Letters x, X (= x^-1), y, Y (= y^-1). Throws Error(InvalidInput).
Word parse_word(std::string_view text);

/// tr rho(w); the empty word gives 2.
Complex character_eval(const RepPair& p, const Word& w);

}  // namespace knotchar
