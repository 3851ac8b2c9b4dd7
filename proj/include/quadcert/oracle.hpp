#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadcert/certificates.hpp"
#include "quadcert/classifier.hpp"
#include "quadcert/matrix.hpp"

namespace quadcert {

// Double-precision mirror of a SymMatrix, produced only by exact-to-float
// conversion and symmetrized as (M + M^T)/2.
class FloatMatrix {
 public:
  static FloatMatrix from_exact(const SymMatrix& A);

  std::size_t n() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  double max_abs() const;
  double off_diagonal_norm() const;

 private:
  explicit FloatMatrix(std::size_t n) : n_(n), e_(n * n, 0.0) {}

  std::size_t n_;
  std::vector<double> e_;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// sweep_tol; ascending diagonal. Throws NonConvergence after 50 sweeps.
std::vector<double> jacobi_eigenvalues(FloatMatrix M, double sweep_tol);

struct SpectrumReport {
  std::vector<double> eigenvalues;   // ascending; empty if not converged
  double zero_threshold;
  std::optional<DefinitenessClass> verdict;  // nullopt = Unresolved
  bool converged = true;
};

// 1e-9 * max(1, largest absolute entry): the abstention region scales with
// the matrix so near-zero eigenvalues are never adjudicated by floats.
double default_zero_threshold(const SymMatrix& A);

SpectrumReport spectrum_classify(const SymMatrix& A, double zero_threshold);
SpectrumReport spectrum_classify(const SymMatrix& A);

// Evaluates Q exactly at seeded pseudo-random vectors with entries in
// {-3,...,3}; any returned witness is exact, absence proves nothing.
std::optional<Witness> sampling_refute(const SymMatrix& A, std::size_t trials,
                                       std::uint64_t seed);

}  // namespace quadcert
