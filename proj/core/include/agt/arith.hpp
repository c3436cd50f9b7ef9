#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace agt {

bool is_prime(long long n);
long long smallest_prime_factor(long long n);  // n >= 2
long long next_prime_after(long long n);

// Prime factorization (p, multiplicity), p ascending. n >= 1.
std::vector<std::pair<long long, int>> factorize(long long n);

std::vector<long long> divisors(long long n);  // ascending
long long euler_phi(long long n);
long long sigma1(long long n);  // sum of divisors

// Overflow-checked pow/mul for small bounds; returns false on overflow of `cap`.
bool checked_pow(long long base, int exp, long long cap, long long& out);

}  // namespace agt
