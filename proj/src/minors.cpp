#include "quadcert/minors.hpp"

#include <algorithm>

namespace quadcert {

namespace {

// Bareiss elimination on an integer grid. All divisions are exact.
Integer bareiss_det(std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return Integer(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace

Rational det(const SymMatrix& A) {
  const std::size_t n = A.n();
  // Clear denominators row by row; det(A) = bareiss(B) / prod(row lcms).
  std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n));
  Integer scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm(1);
    for (std::size_t j = 0; j < n; ++j)
      row_lcm = lcm(row_lcm, A.at(i, j).denominator());
    scale *= row_lcm;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = A.at(i, j);
      b[i][j] = e.numerator() * (row_lcm / e.denominator());
    }
  }
  return Rational(bareiss_det(b), scale);
}

LeadingMinorSequence leading_minors(const SymMatrix& A) {
  LeadingMinorSequence seq;
  seq.values.reserve(A.n() + 1);
  seq.values.push_back(Rational(1));
  for (std::size_t k = 1; k <= A.n(); ++k)
    seq.values.push_back(det(principal_submatrix(A, IndexSet::leading(k))));
  return seq;
}

std::vector<IndexSet> lexicographic_subsets(std::size_t n) {
  std::vector<IndexSet> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur{1};
  out.emplace_back(cur);
  while (true) {
    if (cur.back() < n) {
      cur.push_back(cur.back() + 1);
    } else {
      cur.pop_back();
      if (cur.empty()) break;
      ++cur.back();
    }
    out.emplace_back(cur);
  }
  return out;
}

PrincipalMinorTable::PrincipalMinorTable(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (!(entries_[i - 1].first < entries_[i].first))
      throw Error("principal minor table entries must be in lexicographic order");
}

const Rational& PrincipalMinorTable::at(const IndexSet& S) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), S,
      [](const Entry& e, const IndexSet& s) { return e.first < s; });
  if (it == entries_.end() || it->first != S)
    throw IndexOutOfBounds("no principal minor entry for " + S.to_string());
  return it->second;
}

PrincipalMinorTable all_principal_minors(const SymMatrix& A) {
  std::vector<PrincipalMinorTable::Entry> entries;
  entries.reserve((std::size_t(1) << A.n()) - 1);
  for (const auto& S : lexicographic_subsets(A.n()))
    entries.emplace_back(S, det(principal_submatrix(A, S)));
  return PrincipalMinorTable(std::move(entries));
}

std::vector<Rational> char_poly_sums(const SymMatrix& A) {
  std::vector<Rational> sums(A.n());
  for (const auto& [S, minor] : all_principal_minors(A).entries())
    sums[S.size() - 1] += minor;
  return sums;
}

}  // namespace quadcert
