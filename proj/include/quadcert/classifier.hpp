#pragma once

#include <optional>
#include <string_view>

#include "quadcert/certificates.hpp"
#include "quadcert/matrix.hpp"

namespace quadcert {

// Six labels partitioning all symmetric matrices. PositiveSemidefinite is
// the exclusive convention: nonnegative definite but not positive definite.
// The zero matrix gets its own label since it is both nonnegative and
// nonpositive definite.
enum class DefinitenessClass {
  PositiveDefinite,
  PositiveSemidefinite,
  NegativeDefinite,
  NegativeSemidefinite,
  Indefinite,
  Zero,
};

std::string_view to_string(DefinitenessClass c);

// PD <-> ND, PSD <-> NSD; Indefinite and Zero are fixed.
DefinitenessClass mirror(DefinitenessClass c);

// Leading-minor test for positive definiteness, the full principal-minor
// scan for nonnegative definiteness, and the same tests on -A for the
// negative side; Indefinite otherwise.
DefinitenessClass classify(const SymMatrix& A);

// Class plus verified evidence: a certificate for A (positive side), a
// certificate for -A (negative side), a sign-witness pair (indefinite),
// or the empty zero certificate.
struct ClassificationEvidence {
  DefinitenessClass cls;
  std::optional<SosCertificate> certificate;  // positive side, negated side, or zero
  bool certificate_is_for_negation = false;
  std::optional<Witness> positive_witness;    // indefinite only
  std::optional<Witness> negative_witness;    // indefinite only
};

ClassificationEvidence classify_with_evidence(const SymMatrix& A);

enum class CriticalPointVerdict { LocalMin, LocalMax, Saddle, Inconclusive };

std::string_view to_string(CriticalPointVerdict v);

// The discriminant test: H is the Hessian at a critical point.
// PD -> LocalMin, ND -> LocalMax, Indefinite -> Saddle, else Inconclusive.
CriticalPointVerdict classify_critical_point(const SymMatrix& H);

}  // namespace quadcert
