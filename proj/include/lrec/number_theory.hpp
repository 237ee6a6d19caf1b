#ifndef LREC_NUMBER_THEORY_HPP
#define LREC_NUMBER_THEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lrec/rational.hpp"

namespace lrec {

/// Trial-division factorization; (prime, multiplicity) pairs, ascending.
/// Inputs stay small here (bounded by b1^2/threshold), so this is enough.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Number of prime factors with multiplicity; big_omega(1) == 0.
unsigned big_omega(std::uint64_t n);

/// Liouville lambda(n) = (-1)^Omega(n).
int liouville(std::uint64_t n);

/// Moebius mu(n) in {-1, 0, 1}.
int mobius(std::uint64_t n);

/// Thue-Morse sign at rank n (1-indexed): +1 when the word letter is 0.
/// t(1)=0 t(2)=1 t(3)=1 t(4)=0 over 0110100110010110...
int thue_morse_sign(std::uint64_t n);

/// Generalized harmonic number H_n^(k) = sum_{m<=n} m^{-k}, exact; H_0 = 0.
Rational harmonic_number(unsigned n, unsigned k = 1);

/// Exact Bernoulli numbers B_0..B_upto (B_1 = -1/2) via the defining recurrence.
std::vector<Rational> bernoulli_numbers(unsigned upto);

}  // namespace lrec

#endif
