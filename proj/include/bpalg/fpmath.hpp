#ifndef BPALG_FPMATH_HPP
#define BPALG_FPMATH_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace bpalg {

// Residues are kept in 0..p-1 throughout.
inline int fp_norm(long long a, int p)
{
    long long r = a % p;
    return int(r < 0 ? r + p : r);
}

inline int fp_add(int a, int b, int p) { return (a + b) % p; }
inline int fp_sub(int a, int b, int p) { return ((a - b) % p + p) % p; }
inline int fp_mul(int a, int b, int p) { return int((long long)a * b % p); }
inline int fp_neg(int a, int p) { return a == 0 ? 0 : p - a; }

inline int fp_pow(int a, long long e, int p)
{
    assert(e >= 0);
    long long r = 1, x = a % p;
    while (e) {
        if (e & 1)
            r = r * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return int(r);
}

inline int fp_inv(int a, int p)
{
    if (a % p == 0)
        throw std::domain_error("fp_inv: zero is not invertible");
    return fp_pow(fp_norm(a, p), p - 2, p);
}

inline bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

inline int factorial_mod_p(int n, int p)
{
    int r = 1;
    for (int k = 2; k <= n; ++k)
        r = fp_mul(r, k % p, p);
    return r;
}

// Binomial coefficient of single p-adic digits, n,k < p.
inline int binom_digit(int n, int k, int p)
{
    if (k < 0 || k > n)
        return 0;
    int num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num = fp_mul(num, (n + 1 - i) % p, p);
        den = fp_mul(den, i % p, p);
    }
    return fp_mul(num, fp_inv(den, p), p);
}

// C(n,k) mod p by Lucas' theorem.
inline int binom_mod_p(long long n, long long k, int p)
{
    if (k < 0 || k > n)
        return 0;
    int r = 1;
    while (n > 0 || k > 0) {
        int nd = int(n % p), kd = int(k % p);
        if (kd > nd)
            return 0;
        r = fp_mul(r, binom_digit(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    return r;
}

}  // namespace bpalg

#endif
