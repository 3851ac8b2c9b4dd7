#pragma once

// Shared test helpers: deterministic generators and independent oracles.
// Everything here stays independent of the implementation paths it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "quadcert/matrix.hpp"

namespace quadcert::testing {

// Modulo keeps draw sequences identical across standard libraries.
inline long draw_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 6,
                                long den_bound = 4) {
  return Rational(draw_in(rng, -num_bound, num_bound), draw_in(rng, 1, den_bound));
}

inline SymMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t n,
                                        long num_bound = 6, long den_bound = 4) {
  SymMatrix A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      A.set(i, j, random_rational(rng, num_bound, den_bound));
  return A;
}

inline SymMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t n,
                                       long bound) {
  SymMatrix A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      A.set(i, j, Rational(draw_in(rng, -bound, bound)));
  return A;
}

inline RVector random_rational_vector(std::mt19937_64& rng, std::size_t n,
                                      long num_bound = 6, long den_bound = 4) {
  RVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = random_rational(rng, num_bound, den_bound);
  return x;
}

// Independent determinant oracle: naive Laplace cofactor expansion along
// the first row, entirely in Rational arithmetic.
inline Rational cofactor_det(const SymMatrix& A) {
  struct Grid {
    std::vector<std::vector<Rational>> e;

    Rational det() const {
      const std::size_t n = e.size();
      if (n == 1) return e[0][0];
      Rational acc;
      for (std::size_t j = 0; j < n; ++j) {
        if (e[0][j].is_zero()) continue;
        Grid sub;
        sub.e.resize(n - 1);
        for (std::size_t i = 1; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub.e[i - 1].push_back(e[i][k]);
        const Rational term = e[0][j] * sub.det();
        acc += (j % 2 == 0) ? term : -term;
      }
      return acc;
    }
  };
  Grid g;
  g.e.resize(A.n());
  for (std::size_t i = 0; i < A.n(); ++i)
    for (std::size_t j = 0; j < A.n(); ++j) g.e[i].push_back(A.at(i, j));
  return g.det();
}

}  // namespace quadcert::testing
