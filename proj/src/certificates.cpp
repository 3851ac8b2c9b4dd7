#include "quadcert/certificates.hpp"

#include <algorithm>

#include "quadcert/minors.hpp"

namespace quadcert {

SosCertificate::SosCertificate(std::size_t n, std::vector<SosTerm> terms,
                               SosClaim claim)
    : n_(n), terms_(std::move(terms)), claim_(claim) {
  if (terms_.size() > n_)
    throw Error("certificate has more than n terms");
  for (const auto& t : terms_)
    if (t.form.size() != n_)
      throw DimensionMismatch("certificate form length does not match n");
}

bool SosCertificate::weights_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const SosTerm& t) { return t.weight.sign() >= 0; });
}

bool SosCertificate::weights_positive() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const SosTerm& t) { return t.weight.sign() > 0; });
}

const Rational TriangularSubstitution::kOne(1);
const Rational TriangularSubstitution::kZero(0);

TriangularSubstitution::TriangularSubstitution(std::size_t n)
    : n_(n), b_(n * n) {}

const Rational& TriangularSubstitution::coeff(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw IndexOutOfBounds("substitution coefficient out of range");
  if (i == j) return kOne;
  if (j < i) return kZero;
  return b_[i * n_ + j];
}

void TriangularSubstitution::set_coeff(std::size_t i, std::size_t j,
                                       const Rational& v) {
  if (i >= n_ || j >= n_ || j <= i)
    throw IndexOutOfBounds("substitution coefficients live strictly above the diagonal");
  b_[i * n_ + j] = v;
}

RVector TriangularSubstitution::row(std::size_t i) const {
  RVector r(n_);
  for (std::size_t j = 0; j < n_; ++j) r[j] = coeff(i, j);
  return r;
}

RVector TriangularSubstitution::apply(const RVector& x) const {
  if (x.size() != n_) throw DimensionMismatch("substitution applied to wrong length");
  RVector y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational acc = x[i];
    for (std::size_t j = i + 1; j < n_; ++j) acc += coeff(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

RVector TriangularSubstitution::solve(const RVector& y) const {
  if (y.size() != n_) throw DimensionMismatch("substitution solved with wrong length");
  RVector x(n_);
  for (std::size_t ii = n_; ii-- > 0;) {
    Rational acc = y[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) acc -= coeff(ii, j) * x[j];
    x[ii] = acc;
  }
  return x;
}

SosCertificate LbDecomposition::to_certificate() const {
  const std::size_t n = substitution.n();
  std::vector<SosTerm> terms;
  for (std::size_t i = 0; i < n; ++i)
    if (!weights[i].is_zero()) terms.push_back({weights[i], substitution.row(i)});
  const SosClaim claim = terms.empty() ? SosClaim::Zero : SosClaim::Nonnegative;
  return SosCertificate(n, std::move(terms), claim);
}

LbResult lb_decompose(const SymMatrix& A) {
  const std::size_t n = A.n();
  // Gaussian elimination on the form: at step i the pivot is the Schur
  // complement diagonal entry, which equals D_{i+1}/D_i.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = A.at(i, j);

  TriangularSubstitution subst(n);
  std::vector<Rational> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = m[i][i];
    if (d.is_zero() && i + 1 < n) return DegeneratePivot{i + 1};
    weights[i] = d;
    if (d.is_zero()) break;  // last pivot; D_n = 0 is allowed
    for (std::size_t j = i + 1; j < n; ++j) subst.set_coeff(i, j, m[i][j] / d);
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Rational upd = m[j][k] - m[i][j] * m[i][k] / d;
        m[j][k] = upd;
        m[k][j] = upd;
      }
  }

  // Coefficient law of the identity: weight_i * D_i = D_{i+1}, checked
  // against the independently computed leading minors.
  const LeadingMinorSequence lm = leading_minors(A);
  for (std::size_t i = 0; i < n; ++i)
    if (weights[i] * lm.values[i] != lm.values[i + 1])
      throw VerificationFailure("decomposition weight disagrees with minor ratio");

  return LbDecomposition{std::move(subst), std::move(weights)};
}

SymMatrix sos_expansion(std::size_t n, const std::vector<SosTerm>& terms) {
  SymMatrix b(n);
  for (const auto& t : terms) {
    if (t.form.size() != n) throw DimensionMismatch("term form length does not match n");
    for (std::size_t i = 0; i < n; ++i) {
      if (t.form[i].is_zero()) continue;
      for (std::size_t j = i; j < n; ++j)
        b.set(i, j, b.at(i, j) + t.weight * t.form[i] * t.form[j]);
    }
  }
  return b;
}

bool verify_certificate(const SymMatrix& A, const SosCertificate& c) {
  if (c.n() != A.n())
    throw DimensionMismatch("certificate dimension does not match matrix");
  return sos_expansion(A.n(), c.terms()) == A;
}

std::vector<std::optional<AvatarIdentity>> avatar_identities_ternary(
    const SymMatrix& A) {
  if (A.n() != 3)
    throw DimensionMismatch("avatar identities require a 3x3 matrix");

  const Rational delta = det(A);

  // Nested pairs (1x1 diagonal minor; 2x2 principal minor containing it),
  // as (0-based pivot i, 0-based second index j).
  constexpr struct { std::size_t i, j; } kPairs[6] = {
      {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

  std::vector<std::optional<AvatarIdentity>> slots;
  slots.reserve(6);
  for (const auto& [i, j] : kPairs) {
    const std::size_t k = 3 - i - j;
    const Rational m1 = A.at(i, i);
    const Rational m2 = A.at(i, i) * A.at(j, j) - A.at(i, j) * A.at(i, j);
    const Rational scale = m1 * m2;
    if (scale.is_zero()) {
      slots.emplace_back(std::nullopt);
      continue;
    }
    // m1 m2 Q = m2 (row_i . x)^2 + (m2 x_j + beta x_k)^2 + m1 delta x_k^2
    // with beta = a_ii a_jk - a_ij a_ik.
    const Rational beta = A.at(i, i) * A.at(j, k) - A.at(i, j) * A.at(i, k);
    RVector row(3);
    for (std::size_t t = 0; t < 3; ++t) row[t] = A.at(i, t);
    RVector mid(3);
    mid[j] = m2;
    mid[k] = beta;
    std::vector<SosTerm> terms{{m2, row},
                               {Rational(1), mid},
                               {m1 * delta, RVector::unit(3, k)}};
    if (sos_expansion(3, terms) != A.scaled(scale))
      throw VerificationFailure("avatar identity failed exact expansion");
    std::vector<std::size_t> block{i + 1, j + 1};
    std::sort(block.begin(), block.end());
    slots.emplace_back(AvatarIdentity{i + 1, IndexSet(std::move(block)), scale,
                                      std::move(terms)});
  }
  return slots;
}

namespace {

// Express a remainder-coordinate vector in original coordinates by zeroing
// every emitted square: pivot coordinates are filled by back substitution
// in reverse elimination order (each form is unit in its own pivot).
RVector map_back(RVector x, const std::vector<SosTerm>& emitted,
                 const std::vector<std::size_t>& pivots) {
  for (std::size_t t = emitted.size(); t-- > 0;) {
    const std::size_t k = pivots[t];
    const RVector& f = emitted[t].form;
    Rational acc;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != k) acc += f[j] * x[j];
    x[k] = -acc;
  }
  return x;
}

Witness checked_negative_witness(const SymMatrix& A, RVector x,
                                 const Rational& expected) {
  if (x.is_zero()) throw VerificationFailure("witness vector is zero");
  const Rational value = evaluate_form(A, x);
  if (value != expected || value.sign() >= 0)
    throw VerificationFailure("witness value disagrees with its construction");
  return Witness{std::move(x), value, SignClaim::Negative};
}

}  // namespace

PsdOutcome psd_certificate(const SymMatrix& A) {
  const std::size_t n = A.n();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = A.at(i, j);

  std::vector<bool> active(n, true);
  std::vector<SosTerm> emitted;
  std::vector<std::size_t> pivots;

  while (true) {
    // First positive remaining diagonal entry, in index order.
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && m[i][i].sign() > 0) {
        pivot = i;
        break;
      }

    if (pivot < n) {
      const Rational d = m[pivot][pivot];
      RVector form(n);
      for (std::size_t j = 0; j < n; ++j)
        if (active[j]) form[j] = m[pivot][j] / d;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || i == pivot) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!active[j] || j == pivot) continue;
          m[i][j] -= m[i][pivot] * m[pivot][j] / d;
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        m[pivot][j] = 0;
        m[j][pivot] = 0;
      }
      active[pivot] = false;
      emitted.push_back({d, std::move(form)});
      pivots.push_back(pivot);
      continue;
    }

    bool all_diag_zero = true;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && !m[i][i].is_zero()) all_diag_zero = false;

    if (all_diag_zero) {
      // A zero diagonal with a nonzero off-diagonal entry refutes
      // nonnegativity exactly: Q(e_i - sign(a_ij) e_j) = -2|a_ij|.
      std::size_t wi = n, wj = n;
      for (std::size_t i = 0; i < n && wi == n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (active[j] && !m[i][j].is_zero()) {
            wi = i;
            wj = j;
            break;
          }
      }
      if (wi == n) break;  // remainder is the zero form
      RVector v(n);
      v[wi] = 1;
      v[wj] = m[wi][wj].sign() > 0 ? Rational(-1) : Rational(1);
      const Rational expected = Rational(-2) * m[wi][wj].abs();
      return checked_negative_witness(A, map_back(std::move(v), emitted, pivots),
                                      expected);
    }

    // No positive, not all zero: some remaining diagonal entry is negative.
    std::size_t neg = n;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && m[i][i].sign() < 0) {
        neg = i;
        break;
      }
    return checked_negative_witness(
        A, map_back(RVector::unit(n, neg), emitted, pivots), m[neg][neg]);
  }

  const SosClaim claim = emitted.empty() ? SosClaim::Zero : SosClaim::Nonnegative;
  if ((claim == SosClaim::Zero) != A.is_zero())
    throw VerificationFailure("empty certificate for a nonzero matrix");
  SosCertificate cert(n, std::move(emitted), claim);
  if (!verify_certificate(A, cert) || !cert.weights_nonnegative())
    throw VerificationFailure("congruence certificate failed its own check");
  return cert;
}

std::optional<Witness> negative_witness_ternary(const SymMatrix& A) {
  if (A.n() != 3)
    throw DimensionMismatch("ternary witness search requires a 3x3 matrix");

  std::vector<RVector> candidates;
  // Coordinate vectors probe the diagonal entries.
  for (std::size_t i = 0; i < 3; ++i) candidates.push_back(RVector::unit(3, i));
  // (b,-a)-style pairs for each 2x2 principal block: the evaluations are
  // a_ii * minor and a_jj * minor.
  constexpr struct { std::size_t i, j; } kBlocks[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& [i, j] : kBlocks) {
    RVector v1(3);
    v1[i] = A.at(i, j);
    v1[j] = -A.at(i, i);
    candidates.push_back(std::move(v1));
    RVector v2(3);
    v2[i] = A.at(j, j);
    v2[j] = -A.at(i, j);
    candidates.push_back(std::move(v2));
  }
  // The three cyclic determinant vectors: Q evaluates to (2x2 minor) * det.
  const Rational a = A.at(0, 0), b = A.at(0, 1), p = A.at(0, 2);
  const Rational c = A.at(1, 1), q = A.at(1, 2), r = A.at(2, 2);
  candidates.push_back(RVector({b * q - c * p, b * p - a * q, a * c - b * b}));
  candidates.push_back(RVector({c * r - q * q, p * q - b * r, b * q - c * p}));
  candidates.push_back(RVector({p * q - b * r, a * r - p * p, b * p - a * q}));

  for (auto& v : candidates) {
    if (v.is_zero()) continue;
    Rational value = evaluate_form(A, v);
    if (value.sign() < 0)
      return Witness{std::move(v), std::move(value), SignClaim::Negative};
  }
  return std::nullopt;
}

bool nested_minor_check(const SymMatrix& A, const std::vector<IndexSet>& chain) {
  const std::size_t n = A.n();
  if (chain.size() != n)
    throw MalformedChain("chain must have exactly n index sets");
  for (std::size_t k = 0; k < n; ++k) {
    if (chain[k].size() != k + 1)
      throw MalformedChain("chain set " + std::to_string(k + 1) + " must have " +
                           std::to_string(k + 1) + " indices");
    if (k > 0 && !chain[k - 1].subset_of(chain[k]))
      throw MalformedChain("chain sets must be nested");
  }
  if (chain.back() != IndexSet::leading(n))
    throw MalformedChain("chain must end with the full index set");
  for (const auto& S : chain)
    if (det(principal_submatrix(A, S)).sign() <= 0) return false;
  return true;
}

}  // namespace quadcert
