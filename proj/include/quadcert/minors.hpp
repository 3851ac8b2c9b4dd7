#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quadcert/matrix.hpp"

namespace quadcert {

// [1, D1, ..., Dn]: Dk is the determinant of the top-left k x k block,
// with D0 = 1 by convention.
struct LeadingMinorSequence {
  std::vector<Rational> values;

  std::size_t order() const { return values.size() - 1; }
};

// All 2^n - 1 principal minors, keyed by index set and stored in
// lexicographic order of the sorted index lists.
class PrincipalMinorTable {
 public:
  using Entry = std::pair<IndexSet, Rational>;

  explicit PrincipalMinorTable(std::vector<Entry> entries);

  const Rational& at(const IndexSet& S) const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
};

// Exact determinant via fraction-free Bareiss elimination on the
// integer matrix obtained by clearing row denominators.
Rational det(const SymMatrix& A);

LeadingMinorSequence leading_minors(const SymMatrix& A);

PrincipalMinorTable all_principal_minors(const SymMatrix& A);

// [c1, ..., cn] with ck = sum of all k x k principal minors; these are the
// elementary symmetric functions of the eigenvalues.
std::vector<Rational> char_poly_sums(const SymMatrix& A);

// Every nonempty subset of {1,...,n} in lexicographic order of the sorted
// index lists: {1}, {1,2}, ..., {1,2,...,n}, {1,2,...,n-2,n}, ..., {n}.
std::vector<IndexSet> lexicographic_subsets(std::size_t n);

}  // namespace quadcert
