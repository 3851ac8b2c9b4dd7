#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "quadcert/matrix.hpp"

namespace quadcert {

enum class SosClaim { Nonnegative, Zero };

// One weighted square: weight * (form . x)^2.
struct SosTerm {
  Rational weight;
  RVector form;
};

// A sum-of-squares identity Q(x) = sum_i weight_i (form_i . x)^2, stored
// pre-normalized: any minor-product scaling from the avatar identities has
// been divided out exactly. Verification is a symbolic coefficient check,
// never sampling.
class SosCertificate {
 public:
  SosCertificate(std::size_t n, std::vector<SosTerm> terms, SosClaim claim);

  std::size_t n() const { return n_; }
  const std::vector<SosTerm>& terms() const { return terms_; }
  SosClaim claim() const { return claim_; }

  bool weights_nonnegative() const;
  bool weights_positive() const;

 private:
  std::size_t n_;
  std::vector<SosTerm> terms_;
  SosClaim claim_;
};

// Unit upper-triangular substitution y_i = x_i + sum_{j>i} b_ij x_j.
class TriangularSubstitution {
 public:
  explicit TriangularSubstitution(std::size_t n);

  std::size_t n() const { return n_; }

  // 0-based; coeff(i,i) = 1 and coeff(i,j) = 0 for j < i.
  const Rational& coeff(std::size_t i, std::size_t j) const;
  void set_coeff(std::size_t i, std::size_t j, const Rational& v);  // j > i

  // The linear form computing y_i, as a length-n coefficient vector.
  RVector row(std::size_t i) const;

  // y = T x.
  RVector apply(const RVector& x) const;

  // The unique x with T x = y (back substitution; T is unit triangular).
  RVector solve(const RVector& y) const;

 private:
  std::size_t n_;
  std::vector<Rational> b_;  // row-major; diagonal implicit 1, lower 0
  static const Rational kOne;
  static const Rational kZero;
};

enum class SignClaim { Negative, Positive };

// A nonzero rational vector together with the exact value Q(x), proving
// that the form takes a value of the claimed sign.
struct Witness {
  RVector x;
  Rational value;
  SignClaim sign_claim;
};

// Reported when some leading minor D_k with k < n vanishes, so the
// decomposition hypothesis fails; k is 1-based and names the first such.
struct DegeneratePivot {
  std::size_t k;
};

struct LbDecomposition {
  TriangularSubstitution substitution;
  std::vector<Rational> weights;  // weights[i] = D_{i+1} / D_i, exact

  // Weighted squares through the substitution rows; zero weights dropped.
  SosCertificate to_certificate() const;
};

using LbResult = std::variant<LbDecomposition, DegeneratePivot>;

// Q(x) = sum_i (D_i / D_{i-1}) y_i^2 with a unit-triangular substitution,
// valid when D_1 ... D_{n-1} are all nonzero. Weights are cross-checked
// against the minors module.
LbResult lb_decompose(const SymMatrix& A);

// One of the six scaled identities scale * Q(x,y,z) = sum of three weighted
// squares, for a nested pair (1x1 minor, 2x2 principal minor containing it).
struct AvatarIdentity {
  std::size_t diag_index;       // 1-based index of the 1x1 minor
  IndexSet block;               // index set of the 2x2 principal minor
  Rational scale;               // product of the two nested minors
  std::vector<SosTerm> terms;   // scale * Q == sum of terms, verified exactly
};

// Six slots in fixed nested-pair order:
//   (a; ac-b2), (a; ar-p2), (c; ac-b2), (c; cr-q2), (r; ar-p2), (r; cr-q2).
// A slot is empty (not applicable) when its minor product vanishes.
std::vector<std::optional<AvatarIdentity>> avatar_identities_ternary(
    const SymMatrix& A);

using PsdOutcome = std::variant<SosCertificate, Witness>;

// Total: either a verified sum-of-squares certificate proving Q >= 0
// (claim Zero iff A is the zero matrix), or a witness vector with exact
// negative value. Symmetric pivoted congruence elimination; pivots are the
// first positive remaining diagonal entry in index order.
PsdOutcome psd_certificate(const SymMatrix& A);

// Tries the finite substitution family from the ternary case analysis,
// in order: coordinate vectors, the (b,-a)-style pairs for each 2x2
// principal block, then the three cyclic determinant vectors. Returns the
// first strictly negative evaluation; nullopt means the family does not
// certify indefiniteness (callers fall back to psd_certificate).
std::optional<Witness> negative_witness_ternary(const SymMatrix& A);

// True iff sum_i w_i (f_i . x)^2 and x A x^T have identical coefficient
// arrays on all monomials x_j x_k. Exact, no sampling.
bool verify_certificate(const SymMatrix& A, const SosCertificate& c);

// chain must be strictly nested S_1 c S_2 c ... c S_n with |S_k| = k and
// S_n = {1,...,n}. True iff every chain minor is strictly positive.
bool nested_minor_check(const SymMatrix& A, const std::vector<IndexSet>& chain);

// Coefficient matrix of sum_i w_i (f_i . x)^2 as a quadratic form.
SymMatrix sos_expansion(std::size_t n, const std::vector<SosTerm>& terms);

}  // namespace quadcert
