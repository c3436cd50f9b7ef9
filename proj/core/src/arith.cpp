#include "agt/arith.hpp"

#include <algorithm>

#include "agt/error.hpp"

namespace agt {

namespace {

using u128 = unsigned __int128;

long long mulmod(long long a, long long b, long long m) {
  return (long long)((u128)a * (u128)b % (u128)m);
}

long long powmod(long long a, long long e, long long m) {
  long long r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

long long smallest_prime_factor(long long n) {
  internal_check(n >= 2, "smallest_prime_factor: n >= 2 required");
  if (n % 2 == 0) return 2;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

long long next_prime_after(long long n) {
  long long c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  internal_check(n >= 1, "factorize: n >= 1 required");
  std::vector<std::pair<long long, int>> out;
  while (n > 1) {
    long long p = smallest_prime_factor(n);
    int k = 0;
    while (n % p == 0) n /= p, ++k;
    out.emplace_back(p, k);
  }
  return out;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out{1};
  for (auto [p, k] : factorize(n)) {
    std::size_t base = out.size();
    long long q = 1;
    for (int i = 1; i <= k; ++i) {
      q *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long euler_phi(long long n) {
  long long r = n;
  for (auto [p, k] : factorize(n)) r -= r / p;
  return r;
}

long long sigma1(long long n) {
  long long r = 1;
  for (auto [p, k] : factorize(n)) {
    long long term = 1, q = 1;
    for (int i = 0; i < k; ++i) q *= p, term += q;
    r *= term;
  }
  return r;
}

bool checked_pow(long long base, int exp, long long cap, long long& out) {
  out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / base) return false;
    out *= base;
  }
  return true;
}

}  // namespace agt
