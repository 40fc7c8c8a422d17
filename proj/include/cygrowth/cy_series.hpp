#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cygrowth/growth.hpp"
#include "cygrowth/quiver.hpp"

namespace cygrowth {

/// q(t) for the supported homological dimensions:
///   d=1: q = I - N
///   d=2: q = I - N + P t^L
///   d=3: q = I - N + P t^L N(1/t)^T - P t^L
struct CYSeriesModel {
  WeightedQuiver quiver;
  CYDatum cy;
  MatPoly N;
  MatPoly PtL;
  MatPoly q;
};

/// Assembles q(t) and enforces the structural data identities:
///   d=1: N = P t^L (disjoint directed cycles matching the datum)
///   d=2: N = P t^L N(1/t)^T
///   d=3: [N, P t^L] = 0 and q free of negative t-powers
/// plus det q(0) = +-1. Weight-0 arrows are rejected.
CYSeriesModel build_q(const WeightedQuiver& quiver, const CYDatum& cy);

struct FunctionalEquationReport {
  bool holds = false;     // q(t) == (-1)^d P t^L q(1/t)^T
  bool commutes = false;  // q(t) P t^L == P t^L q(t)
  std::optional<std::pair<int, int>> mismatch;  // 1-based witness entry
  std::string witness;
};

FunctionalEquationReport verify_functional_equation(const CYSeriesModel& model);

/// Same check against an arbitrary datum (lets callers probe a wrong mu/ell).
FunctionalEquationReport functional_equation_holds(const MatPoly& q, const CYDatum& cy);

enum class CriterionVerdict { Pass, Fail, Inapplicable };

struct SpectralReport {
  CriterionVerdict verdict = CriterionVerdict::Inapplicable;
  std::string reason;
  std::string caveat;
  double spectral_radius = 0.0;
  std::vector<std::complex<double>> eigenvalues;
  /// Joint (delta, zeta) pairs of (M, P) in the dimension-3 normal case.
  std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
  bool is_normal = false;
  std::optional<std::vector<Int>> perron_vector;
  std::optional<long> expected_gk;
  std::optional<double> expected_rho;
  bool agrees_with_exact = true;

  std::string verdict_str() const;
};

/// rho(M) = 2 test for weight-1 dimension-2 models (exact eigenvector side,
/// numeric bound side, cross-checked against the cyclotomic classifier).
SpectralReport dim2_spectral_criterion(const CYSeriesModel& model, double tol = 1e-8);

/// Membership of a in the rotated deltoid (k=3) or rotated half-astroid (k=4)
/// section attached to the root-of-unity zeta. Closed regions: boundary points
/// are members.
bool hypocycloid_contains(std::complex<double> a, int k, std::complex<double> zeta,
                          double tol = 1e-9);

/// Eigenvalue-region test for weight-1 dimension-3 models with normal M and
/// commuting P. ell >= 5 fails outright; ell in {3,4} tests every joint
/// eigenpair. The exact cyclotomic classifier stays authoritative.
SpectralReport dim3_normal_criterion(const CYSeriesModel& model, double tol = 1e-8);

/// Boundary curve (k-1)e^{i theta} + e^{-i(k-1) theta} sampled uniformly.
std::vector<std::complex<double>> hypocycloid_boundary(int k, int samples);

/// Joint eigenpairs (delta_i, zeta_i) of a normal integer matrix M and a
/// commuting vertex permutation; residual-checked.
std::vector<std::pair<std::complex<double>, std::complex<double>>> joint_eigenpairs(
    const QMat& M, const std::vector<int>& mu, double tol = 1e-8);

/// Exact positive integer eigenvector of M for integer eigenvalue lambda, if any.
std::optional<std::vector<Int>> positive_integer_eigenvector(const QMat& M, long lambda);

}  // namespace cygrowth
