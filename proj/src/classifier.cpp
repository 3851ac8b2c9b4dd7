#include "quadcert/classifier.hpp"

#include "quadcert/minors.hpp"

namespace quadcert {

namespace {

bool all_leading_positive(const SymMatrix& A) {
  for (std::size_t k = 1; k <= A.n(); ++k)
    if (det(principal_submatrix(A, IndexSet::leading(k))).sign() <= 0)
      return false;
  return true;
}

// Principal minors in increasing subset size, failing fast on the first
// negative one; the size-1 pass catches negative diagonals cheaply.
bool all_principal_nonneg(const SymMatrix& A) {
  const std::size_t n = A.n();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      if (det(principal_submatrix(A, IndexSet(idx))).sign() < 0) return false;
      // next k-combination of {1..n}
      std::size_t i = k;
      while (i-- > 0) {
        if (idx[i] < n - (k - 1 - i)) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) return true;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(DefinitenessClass c) {
  switch (c) {
    case DefinitenessClass::PositiveDefinite: return "PositiveDefinite";
    case DefinitenessClass::PositiveSemidefinite: return "PositiveSemidefinite";
    case DefinitenessClass::NegativeDefinite: return "NegativeDefinite";
    case DefinitenessClass::NegativeSemidefinite: return "NegativeSemidefinite";
    case DefinitenessClass::Indefinite: return "Indefinite";
    case DefinitenessClass::Zero: return "Zero";
  }
  return "?";
}

DefinitenessClass mirror(DefinitenessClass c) {
  switch (c) {
    case DefinitenessClass::PositiveDefinite: return DefinitenessClass::NegativeDefinite;
    case DefinitenessClass::NegativeDefinite: return DefinitenessClass::PositiveDefinite;
    case DefinitenessClass::PositiveSemidefinite: return DefinitenessClass::NegativeSemidefinite;
    case DefinitenessClass::NegativeSemidefinite: return DefinitenessClass::PositiveSemidefinite;
    default: return c;
  }
}

DefinitenessClass classify(const SymMatrix& A) {
  if (A.is_zero()) return DefinitenessClass::Zero;
  if (all_leading_positive(A)) return DefinitenessClass::PositiveDefinite;
  if (all_principal_nonneg(A)) return DefinitenessClass::PositiveSemidefinite;
  const SymMatrix N = A.negated();
  if (all_leading_positive(N)) return DefinitenessClass::NegativeDefinite;
  if (all_principal_nonneg(N)) return DefinitenessClass::NegativeSemidefinite;
  return DefinitenessClass::Indefinite;
}

ClassificationEvidence classify_with_evidence(const SymMatrix& A) {
  ClassificationEvidence ev;
  ev.cls = classify(A);
  switch (ev.cls) {
    case DefinitenessClass::Zero:
    case DefinitenessClass::PositiveDefinite:
    case DefinitenessClass::PositiveSemidefinite: {
      auto outcome = psd_certificate(A);
      if (!std::holds_alternative<SosCertificate>(outcome))
        throw VerificationFailure("classification says nonnegative but no certificate exists");
      ev.certificate = std::get<SosCertificate>(std::move(outcome));
      break;
    }
    case DefinitenessClass::NegativeDefinite:
    case DefinitenessClass::NegativeSemidefinite: {
      auto outcome = psd_certificate(A.negated());
      if (!std::holds_alternative<SosCertificate>(outcome))
        throw VerificationFailure("classification says nonpositive but no certificate exists");
      ev.certificate = std::get<SosCertificate>(std::move(outcome));
      ev.certificate_is_for_negation = true;
      break;
    }
    case DefinitenessClass::Indefinite: {
      auto down = psd_certificate(A);
      auto up = psd_certificate(A.negated());
      if (!std::holds_alternative<Witness>(down) ||
          !std::holds_alternative<Witness>(up))
        throw VerificationFailure("indefinite classification lacks a witness pair");
      ev.negative_witness = std::get<Witness>(std::move(down));
      Witness w = std::get<Witness>(std::move(up));
      ev.positive_witness = Witness{std::move(w.x), -w.value, SignClaim::Positive};
      break;
    }
  }
  return ev;
}

std::string_view to_string(CriticalPointVerdict v) {
  switch (v) {
    case CriticalPointVerdict::LocalMin: return "LocalMin";
    case CriticalPointVerdict::LocalMax: return "LocalMax";
    case CriticalPointVerdict::Saddle: return "Saddle";
    case CriticalPointVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

CriticalPointVerdict classify_critical_point(const SymMatrix& H) {
  switch (classify(H)) {
    case DefinitenessClass::PositiveDefinite: return CriticalPointVerdict::LocalMin;
    case DefinitenessClass::NegativeDefinite: return CriticalPointVerdict::LocalMax;
    case DefinitenessClass::Indefinite: return CriticalPointVerdict::Saddle;
    default: return CriticalPointVerdict::Inconclusive;
  }
}

}  // namespace quadcert
