#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadcert/errors.hpp"
#include "quadcert/rational.hpp"

namespace quadcert {

// Vector of exact rationals.
class RVector {
 public:
  explicit RVector(std::size_t n) : c_(n) {}
  explicit RVector(std::vector<Rational> components) : c_(std::move(components)) {}

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  RVector negated() const {
    RVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -c_[i];
    return r;
  }

  RVector scaled(const Rational& s) const {
    RVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = s * c_[i];
    return r;
  }

  Rational dot(const RVector& other) const {
    if (other.size() != size()) throw DimensionMismatch("vector lengths differ");
    Rational acc;
    for (std::size_t i = 0; i < size(); ++i) acc += c_[i] * other[i];
    return acc;
  }

  // i is 0-based
  static RVector unit(std::size_t n, std::size_t i) {
    RVector r(n);
    r[i] = 1;
    return r;
  }

  friend bool operator==(const RVector& a, const RVector& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RVector& a, const RVector& b) {
    return !(a == b);
  }

 private:
  std::vector<Rational> c_;
};

// Nonempty strictly increasing set of 1-based row/column indices.
class IndexSet {
 public:
  explicit IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    if (idx_.empty()) throw Error("index set must be nonempty");
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (idx_[i] == 0) throw IndexOutOfBounds("index sets are 1-based");
      if (i > 0 && idx_[i] <= idx_[i - 1])
        throw Error("index set must be strictly increasing");
    }
  }

  // {1, 2, ..., k}
  static IndexSet leading(std::size_t k) {
    std::vector<std::size_t> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = i + 1;
    return IndexSet(std::move(v));
  }

  static IndexSet single(std::size_t i) { return IndexSet({i}); }

  const std::vector<std::size_t>& values() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  std::size_t max() const { return idx_.back(); }

  bool contains(std::size_t i) const {
    for (auto v : idx_)
      if (v == i) return true;
    return false;
  }

  bool subset_of(const IndexSet& other) const {
    std::size_t j = 0;
    for (auto v : idx_) {
      while (j < other.idx_.size() && other.idx_[j] < v) ++j;
      if (j == other.idx_.size() || other.idx_[j] != v) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(idx_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.idx_ == b.idx_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) {
    return !(a == b);
  }
  // Lexicographic on the sorted index lists; this is the report order.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return a.idx_ < b.idx_;
  }

 private:
  std::vector<std::size_t> idx_;
};

// Symmetric n x n matrix of exact rationals. Immutable in normal use;
// set() exists for builders and keeps the matrix symmetric by writing
// both mirror entries.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0) throw NotSquare("matrix dimension must be at least 1");
  }

  // Validates squareness and symmetry; the error names the first
  // offending entry pair (1-based).
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw NotSquare("matrix must have at least one row");
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].size() != n)
        throw NotSquare("row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.e_[i * n + j] = rows[i][j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m.e_[i * n + j] != m.e_[j * n + i]) throw NotSymmetric(i + 1, j + 1);
    return m;
  }

  static SymMatrix identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
    return m;
  }

  static SymMatrix zero(std::size_t n) { return SymMatrix(n); }

  std::size_t n() const { return n_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfBounds("matrix entry out of range");
    return e_[i * n_ + j];
  }

  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= n_ || j >= n_) throw IndexOutOfBounds("matrix entry out of range");
    e_[i * n_ + j] = v;
    e_[j * n_ + i] = v;
  }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  SymMatrix negated() const {
    SymMatrix m(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
  }

  SymMatrix scaled(const Rational& s) const {
    SymMatrix m(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = s * e_[i];
    return m;
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const SymMatrix& a, const SymMatrix& b) {
    return !(a == b);
  }

 private:
  std::size_t n_;
  std::vector<Rational> e_;
};

// Q(x) = x A x^T, exact.
inline Rational evaluate_form(const SymMatrix& A, const RVector& x) {
  if (x.size() != A.n())
    throw DimensionMismatch("vector length " + std::to_string(x.size()) +
                            " does not match matrix dimension " +
                            std::to_string(A.n()));
  Rational acc;
  for (std::size_t i = 0; i < A.n(); ++i) {
    acc += A.at(i, i) * x[i] * x[i];
    for (std::size_t j = i + 1; j < A.n(); ++j)
      acc += Rational(2) * A.at(i, j) * x[i] * x[j];
  }
  return acc;
}

// Rows and columns S of A, as a |S| x |S| symmetric matrix. S is 1-based.
inline SymMatrix principal_submatrix(const SymMatrix& A, const IndexSet& S) {
  if (S.max() > A.n())
    throw IndexOutOfBounds("index " + std::to_string(S.max()) +
                           " exceeds matrix dimension " + std::to_string(A.n()));
  const auto& idx = S.values();
  SymMatrix m(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j)
      m.set(i, j, A.at(idx[i] - 1, idx[j] - 1));
  return m;
}

inline SymMatrix negate(const SymMatrix& A) { return A.negated(); }

}  // namespace quadcert
