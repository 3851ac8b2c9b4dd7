#include "quadcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace quadcert {

FloatMatrix FloatMatrix::from_exact(const SymMatrix& A) {
  FloatMatrix m(A.n());
  for (std::size_t i = 0; i < A.n(); ++i)
    for (std::size_t j = 0; j < A.n(); ++j)
      m.at(i, j) = 0.5 * (A.at(i, j).to_double() + A.at(j, i).to_double());
  return m;
}

double FloatMatrix::max_abs() const {
  double m = 0.0;
  for (double v : e_) m = std::max(m, std::fabs(v));
  return m;
}

double FloatMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) s += at(i, j) * at(i, j);
  return std::sqrt(s);
}

std::vector<double> jacobi_eigenvalues(FloatMatrix M, double sweep_tol) {
  if (!(sweep_tol > 0.0)) throw Error("sweep tolerance must be positive");
  const std::size_t n = M.n();
  constexpr int kMaxSweeps = 50;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (M.off_diagonal_norm() < sweep_tol) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = M.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (M.at(q, q) - M.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = M.at(p, p), aqq = M.at(q, q);
        M.at(p, p) = app - t * apq;
        M.at(q, q) = aqq + t * apq;
        M.at(p, q) = 0.0;
        M.at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = M.at(r, p), arq = M.at(r, q);
          M.at(r, p) = arp - s * (arq + tau * arp);
          M.at(p, r) = M.at(r, p);
          M.at(r, q) = arq + s * (arp - tau * arq);
          M.at(q, r) = M.at(r, q);
        }
      }
    }
  }
  if (M.off_diagonal_norm() >= sweep_tol)
    throw NonConvergence("jacobi sweeps did not reduce the off-diagonal norm");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = M.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double default_zero_threshold(const SymMatrix& A) {
  return 1e-9 * std::max(1.0, FloatMatrix::from_exact(A).max_abs());
}

SpectrumReport spectrum_classify(const SymMatrix& A, double zero_threshold) {
  if (!(zero_threshold > 0.0)) throw Error("zero threshold must be positive");
  SpectrumReport report;
  report.zero_threshold = zero_threshold;

  FloatMatrix M = FloatMatrix::from_exact(A);
  double frob = 0.0;
  for (std::size_t i = 0; i < M.n(); ++i)
    for (std::size_t j = 0; j < M.n(); ++j) frob += M.at(i, j) * M.at(i, j);
  const double sweep_tol = 1e-13 * std::max(1.0, std::sqrt(frob));

  try {
    report.eigenvalues = jacobi_eigenvalues(M, sweep_tol);
  } catch (const NonConvergence&) {
    report.converged = false;
    return report;  // Unresolved
  }

  bool any_pos = false, any_neg = false, any_near_zero = false;
  for (double v : report.eigenvalues) {
    if (v > zero_threshold)
      any_pos = true;
    else if (v < -zero_threshold)
      any_neg = true;
    else
      any_near_zero = true;
  }
  if (any_pos && any_neg)
    report.verdict = DefinitenessClass::Indefinite;
  else if (!any_near_zero && any_pos)
    report.verdict = DefinitenessClass::PositiveDefinite;
  else if (!any_near_zero && any_neg)
    report.verdict = DefinitenessClass::NegativeDefinite;
  // else: near-zero eigenvalues, the float oracle abstains
  return report;
}

SpectrumReport spectrum_classify(const SymMatrix& A) {
  return spectrum_classify(A, default_zero_threshold(A));
}

std::optional<Witness> sampling_refute(const SymMatrix& A, std::size_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw Error("sampling requires at least one trial");
  std::mt19937_64 rng(seed);
  // Modulo keeps the draw sequence identical across standard libraries.
  const auto draw = [&rng]() -> long {
    return static_cast<long>(rng() % 7) - 3;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    RVector x(A.n());
    for (std::size_t i = 0; i < A.n(); ++i) x[i] = Rational(draw());
    Rational value = evaluate_form(A, x);
    if (value.sign() < 0)
      return Witness{std::move(x), std::move(value), SignClaim::Negative};
  }
  return std::nullopt;
}

}  // namespace quadcert
