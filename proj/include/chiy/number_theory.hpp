#pragma once

#include <vector>

namespace chiy {

/// Integer-coefficient polynomial in theta, lowest degree first.
using IntPolynomial = std::vector<long long>;

/// Positive divisors of n in increasing order (n >= 1).
std::vector<long> divisors(long n);

/// Moebius function: 0 if a square divides n, else (-1)^(number of primes).
int mobius(long n);

long euler_totient(long n);

/// Coefficients of the k-th cyclotomic polynomial, obtained by exact division
/// of theta^k - 1 by every Phi_d with d | k, d < k. Results are memoized in a
/// process-wide table guarded by a shared mutex.
const IntPolynomial& cyclotomic_coefficients(long k);

}  // namespace chiy
