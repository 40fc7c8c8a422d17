#include "cygrowth/cy_series.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cygrowth/error.hpp"

namespace cygrowth {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::optional<std::pair<int, int>> first_mismatch(const MatPoly& a, const MatPoly& b) {
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (a.at(i, j) != b.at(i, j)) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

}  // namespace

CYSeriesModel build_q(const WeightedQuiver& quiver, const CYDatum& cy) {
  auto diags = validate_quiver(quiver);
  if (!diags.empty()) throw Error(Errc::InvalidQuiver, diags.front());
  auto cy_diags = validate_cy_datum(quiver, cy);
  if (!cy_diags.empty()) throw Error(Errc::IncompatibleDatum, cy_diags.front());
  for (auto& a : quiver.arrows)
    if (a.weight == 0)
      throw Error(Errc::IncompatibleDatum,
                  "arrow " + a.id + " has weight 0; the construction needs J(A_0) = 0");

  CYSeriesModel m;
  m.quiver = quiver;
  m.cy = cy;
  m.N = incidence(quiver).N;
  m.PtL = p_t_l(cy);
  int n = quiver.n_vertices;
  MatPoly I = MatPoly::identity(n);

  switch (cy.dimension) {
    case 1: {
      if (m.N != m.PtL) {
        auto w = first_mismatch(m.N, m.PtL);
        std::ostringstream os;
        os << "dimension-1 data must be disjoint directed cycles matching (mu, ell); "
           << "entry (" << w->first << "," << w->second << "): N = "
           << m.N.at(w->first - 1, w->second - 1).str() << " vs P t^L = "
           << m.PtL.at(w->first - 1, w->second - 1).str();
        throw Error(Errc::InvalidDimOneQuiver, os.str());
      }
      m.q = I - m.N;
      break;
    }
    case 2: {
      MatPoly rhs = m.PtL * transpose(substitute_inverse_t(m.N));
      if (m.N != rhs) {
        auto w = first_mismatch(m.N, rhs);
        std::ostringstream os;
        os << "mesh compatibility N = P t^L N(1/t)^T fails at entry (" << w->first << ","
           << w->second << "): " << m.N.at(w->first - 1, w->second - 1).str() << " vs "
           << rhs.at(w->first - 1, w->second - 1).str();
        throw Error(Errc::IncompatibleDatum, os.str());
      }
      m.q = I - m.N + m.PtL;
      break;
    }
    case 3: {
      MatPoly lhs = m.N * m.PtL, rhs = m.PtL * m.N;
      if (lhs != rhs) {
        auto w = first_mismatch(lhs, rhs);
        std::ostringstream os;
        os << "N must commute with P t^L; entry (" << w->first << "," << w->second
           << "): " << lhs.at(w->first - 1, w->second - 1).str() << " vs "
           << rhs.at(w->first - 1, w->second - 1).str();
        throw Error(Errc::IncompatibleDatum, os.str());
      }
      m.q = I - m.N + m.PtL * transpose(substitute_inverse_t(m.N)) - m.PtL;
      break;
    }
    default:
      throw Error(Errc::IncompatibleDatum, "dimension must be 1, 2 or 3");
  }

  if (m.q.min_exponent() < 0)
    throw Error(Errc::IncompatibleDatum,
                "q(t) has negative t-powers; check the AS-index against the arrow weights");
  QMat q0 = m.q.eval(Rat(0));
  Rat d0 = q0.det();
  if (d0 != 1 && d0 != -1)
    throw Error(Errc::NonUnimodular, "det q(0) = " + rat_str(d0) + ", expected +-1");
  return m;
}

FunctionalEquationReport functional_equation_holds(const MatPoly& q, const CYDatum& cy) {
  FunctionalEquationReport rep;
  MatPoly PtL = p_t_l(cy);
  MatPoly rhs = PtL * transpose(substitute_inverse_t(q));
  if (cy.dimension % 2 == 1) rhs = -rhs;
  rep.holds = (q == rhs);
  if (!rep.holds) {
    auto w = first_mismatch(q, rhs);
    rep.mismatch = w;
    std::ostringstream os;
    os << "entry (" << w->first << "," << w->second << "): q = "
       << q.at(w->first - 1, w->second - 1).str() << " vs (-1)^d P t^L q(1/t)^T = "
       << rhs.at(w->first - 1, w->second - 1).str();
    rep.witness = os.str();
  }
  rep.commutes = (q * PtL == PtL * q);
  return rep;
}

FunctionalEquationReport verify_functional_equation(const CYSeriesModel& model) {
  return functional_equation_holds(model.q, model.cy);
}

std::string SpectralReport::verdict_str() const {
  switch (verdict) {
    case CriterionVerdict::Pass: return "Pass";
    case CriterionVerdict::Fail: return "Fail";
    case CriterionVerdict::Inapplicable: return "Inapplicable(" + reason + ")";
  }
  return "?";
}

namespace {

Eigen::MatrixXd to_eigen(const QMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m.at(i, j));
  return out;
}

bool all_weight_one(const WeightedQuiver& q) {
  for (auto& a : q.arrows)
    if (a.weight != 1) return false;
  return true;
}

bool exact_normal(const QMat& M) { return M * M.transpose() == M.transpose() * M; }

}  // namespace

std::optional<std::vector<Int>> positive_integer_eigenvector(const QMat& M, long lambda) {
  int n = M.rows();
  QMat shifted = M;
  for (int i = 0; i < n; ++i) shifted.at(i, i) -= Rat(lambda);
  auto basis = shifted.kernel();
  for (auto& v : basis) {
    // Flip sign so the first nonzero entry is positive, then demand positivity.
    Rat first(0);
    for (auto& x : v)
      if (x != 0) {
        first = x;
        break;
      }
    if (first == 0) continue;
    bool pos = true;
    std::vector<Rat> w = v;
    for (auto& x : w) {
      if (first < 0) x = -x;
      if (x <= 0) pos = false;
    }
    if (!pos) continue;
    Int lcm(1);
    for (auto& x : w) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> iv;
    Int g(0);
    for (auto& x : w) {
      Rat scaled = x * Rat(lcm);
      iv.push_back(scaled.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv.back().get_mpz_t());
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    return iv;
  }
  return std::nullopt;
}

SpectralReport dim2_spectral_criterion(const CYSeriesModel& model, double tol) {
  SpectralReport rep;
  if (model.cy.dimension != 2) {
    rep.reason = "criterion applies to dimension-2 models only";
    return rep;
  }
  if (!all_weight_one(model.quiver)) {
    rep.reason = "criterion needs all arrows of weight 1";
    return rep;
  }
  if (!is_connected(model.quiver)) {
    rep.reason = "criterion needs a connected quiver";
    return rep;
  }
  QMat M = incidence(model.quiver).M;
  rep.is_normal = exact_normal(M);
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(M), false);
  double rho = 0.0;
  for (int i = 0; i < M.rows(); ++i) {
    std::complex<double> ev = es.eigenvalues()(i);
    rep.eigenvalues.push_back(ev);
    rho = std::max(rho, std::abs(ev));
  }
  rep.spectral_radius = rho;
  rep.perron_vector = positive_integer_eigenvector(M, 2);
  bool bounded = rho <= 2.0 + tol;
  if (rep.perron_vector && bounded) {
    rep.verdict = CriterionVerdict::Pass;
    rep.expected_gk = 2;
    rep.expected_rho = 2.0;
  } else {
    rep.verdict = CriterionVerdict::Fail;
    std::ostringstream os;
    os << "rho(M) = " << rho << (bounded ? " but 2 lacks a positive integer eigenvector"
                                          : " > 2, so the algebra grows exponentially");
    rep.reason = os.str();
  }
  GrowthReport exact = classify_algebra(model.q);
  bool exact_finite = exact.growth_class == GrowthClass::FiniteGK;
  rep.agrees_with_exact = (exact_finite == (rep.verdict == CriterionVerdict::Pass));
  return rep;
}

bool hypocycloid_contains(std::complex<double> a, int k, std::complex<double> zeta, double tol) {
  if (k != 3 && k != 4)
    throw Error(Errc::DimensionMismatch, "hypocycloid test supports k = 3 or 4");
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
    throw Error(Errc::DimensionMismatch, "zeta must lie on the unit circle");
  // Rotate into the standard section; any k-th root works since the regions
  // have k-fold symmetry.
  std::complex<double> root = std::polar(1.0, std::arg(zeta) / static_cast<double>(k));
  std::complex<double> ap = a * std::conj(root);
  double x = ap.real(), y = ap.imag();
  if (k == 3) {
    // Deltoid with cusps at radius 3: |a|^4 - 8 Re(a^3) + 18|a|^2 - 27 <= 0.
    double r2 = x * x + y * y;
    double re3 = x * x * x - 3.0 * x * y * y;
    double f = r2 * r2 - 8.0 * re3 + 18.0 * r2 - 27.0;
    return f <= tol * 27.0;
  }
  // Half astroid: cusps at radius 2, |x|^{2/3} + |y|^{2/3} <= 2^{2/3}.
  double f = std::cbrt(x * x) + std::cbrt(y * y) - std::cbrt(4.0);
  return f <= tol;
}

std::vector<std::pair<std::complex<double>, std::complex<double>>> joint_eigenpairs(
    const QMat& M, const std::vector<int>& mu, double tol) {
  int n = M.rows();
  using Cd = std::complex<double>;
  Eigen::MatrixXcd Mc = to_eigen(M).cast<Cd>();
  std::vector<std::pair<Cd, Cd>> pairs;

  // Cycle decomposition of the vertex permutation; P acts by (Px)_i = x_{mu(i)}.
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cycles;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> cyc;
    int u = v;
    while (!seen[u]) {
      seen[u] = true;
      cyc.push_back(u);
      u = mu[u] - 1;
    }
    cycles.push_back(cyc);
  }

  // Group P-eigenvectors by eigenvalue; each cycle of length c contributes one
  // vector per c-th root of unity.
  std::vector<std::pair<double, Eigen::VectorXcd>> eigvecs;  // (angle of zeta, vector)
  for (auto& cyc : cycles) {
    int c = static_cast<int>(cyc.size());
    for (int j = 0; j < c; ++j) {
      double angle = 2.0 * kPi * j / c;
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
      // (Pv)_i = v_{mu(i)}, so v_{cyc[s]} = zeta^s makes v a zeta-eigenvector.
      for (int s = 0; s < c; ++s) v(cyc[s]) = std::polar(1.0 / std::sqrt(double(c)), angle * s);
      eigvecs.push_back({angle, v});
    }
  }
  std::sort(eigvecs.begin(), eigvecs.end(),
            [](auto& a, auto& b) { return a.first < b.first; });

  size_t idx = 0;
  while (idx < eigvecs.size()) {
    size_t end = idx;
    while (end < eigvecs.size() && std::abs(eigvecs[end].first - eigvecs[idx].first) < 1e-12)
      ++end;
    int dim = static_cast<int>(end - idx);
    Eigen::MatrixXcd B(n, dim);
    for (int c = 0; c < dim; ++c) B.col(c) = eigvecs[idx + c].second;
    Cd zeta = std::polar(1.0, eigvecs[idx].first);
    // M preserves this eigenspace since M and P commute; restrict and diagonalize.
    Eigen::MatrixXcd R = B.adjoint() * Mc * B;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(R, true);
    for (int c = 0; c < dim; ++c) {
      Cd delta = es.eigenvalues()(c);
      Eigen::VectorXcd w = B * es.eigenvectors().col(c);
      double residual = (Mc * w - delta * w).norm();
      if (residual > tol)
        throw Error(Errc::Internal, "joint eigenpair residual too large; M and P incompatible");
      pairs.push_back({delta, zeta});
    }
    idx = end;
  }
  return pairs;
}

SpectralReport dim3_normal_criterion(const CYSeriesModel& model, double tol) {
  SpectralReport rep;
  if (model.cy.dimension != 3) {
    rep.reason = "criterion applies to dimension-3 models only";
    return rep;
  }
  if (!all_weight_one(model.quiver)) {
    rep.reason = "criterion needs all arrows of weight 1";
    return rep;
  }
  for (long l : model.cy.ell)
    if (l != model.cy.ell[0]) {
      rep.reason = "criterion needs a uniform AS-index";
      return rep;
    }
  long ell = model.cy.ell.empty() ? 0 : model.cy.ell[0];
  rep.caveat = "verdict presumes GK-dimension >= 3 for the algebra in question";
  QMat M = incidence(model.quiver).M;
  rep.is_normal = exact_normal(M);
  if (!rep.is_normal) {
    rep.reason = "NotNormal: M does not commute with its transpose";
    return rep;
  }
  QMat P = permutation_matrix(model.cy.mu);
  if (!(P * M == M * P)) {
    rep.reason = "NonCommuting: P does not commute with M";
    return rep;
  }
  if (ell < 3) {
    rep.reason = "AS-index below 3 does not arise from a degree-l semipotential";
    return rep;
  }

  rep.pairs = joint_eigenpairs(M, model.cy.mu, tol);
  double rho = 0.0;
  for (auto& [delta, zeta] : rep.pairs) {
    rep.eigenvalues.push_back(delta);
    rho = std::max(rho, std::abs(delta));
  }
  rep.spectral_radius = rho;

  if (ell >= 5) {
    // Unconditional: no dimension-3 datum with GK >= 3 survives ell >= 5. The
    // series classifier answers a different question (it may see a small-GK
    // series), so it only annotates this branch instead of overriding it.
    rep.verdict = CriterionVerdict::Fail;
    rep.reason = "AS-index >= 5 forces infinite GK-dimension";
    GrowthReport exact = classify_algebra(model.q);
    rep.agrees_with_exact = exact.growth_class == GrowthClass::Exponential;
    if (!rep.agrees_with_exact)
      rep.reason += "; det q is cyclotomic, so the GK >= 3 presumption fails here";
    return rep;
  }
  {
    bool all_in = true;
    for (auto& [delta, zeta] : rep.pairs)
      if (!hypocycloid_contains(delta, static_cast<int>(ell), zeta)) {
        all_in = false;
        std::ostringstream os;
        os << "eigenvalue " << delta.real();
        if (std::abs(delta.imag()) > 1e-12) os << (delta.imag() < 0 ? "" : "+") << delta.imag() << "i";
        os << " lies outside the dimension-3 region for ell = " << ell;
        rep.reason = os.str();
        break;
      }
    if (all_in) {
      rep.verdict = CriterionVerdict::Pass;
      rep.expected_gk = 3;
      rep.expected_rho = 6.0 - static_cast<double>(ell);
      rep.perron_vector = positive_integer_eigenvector(M, 6 - ell);
    } else {
      rep.verdict = CriterionVerdict::Fail;
    }
  }

  GrowthReport exact = classify_algebra(model.q);
  bool exact_finite = exact.growth_class == GrowthClass::FiniteGK;
  rep.agrees_with_exact = (exact_finite == (rep.verdict == CriterionVerdict::Pass));
  if (!rep.agrees_with_exact) {
    // The exact classifier decides; the numeric side only explains.
    rep.verdict = exact_finite ? CriterionVerdict::Pass : CriterionVerdict::Fail;
    rep.reason += (rep.reason.empty() ? "" : "; ");
    rep.reason += "overridden by the exact cyclotomic classification of det q";
  }
  return rep;
}

std::vector<std::complex<double>> hypocycloid_boundary(int k, int samples) {
  if (samples < 3) throw Error(Errc::BoundsTooLarge, "need at least 3 samples");
  if (k < 3) throw Error(Errc::BoundsTooLarge, "hypocycloid needs k >= 3");
  std::vector<std::complex<double>> pts;
  pts.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    double theta = 2.0 * kPi * s / samples;
    std::complex<double> z =
        static_cast<double>(k - 1) * std::polar(1.0, theta) + std::polar(1.0, -(k - 1) * theta);
    pts.push_back(z);
  }
  return pts;
}

}  // namespace cygrowth
