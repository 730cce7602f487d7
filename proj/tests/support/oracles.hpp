#pragma once

// Brute-force reference computations used only by the tests. Each one uses a
// different algorithm from the library code it checks.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::int64_t sigma1(std::int64_t n)
{
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += d;
        }
    }
    return s;
}

// Number of set partitions of {1..n} into exactly j blocks, by enumerating
// restricted growth strings.
inline std::int64_t set_partitions(int n, int j)
{
    std::int64_t count = 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int blocks) {
        if (pos == n) {
            count += blocks == j ? 1 : 0;
            return;
        }
        for (int b = 0; b <= blocks && b < j; ++b) {
            rgs[static_cast<std::size_t>(pos)] = b;
            rec(pos + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) {
        return j == 0 ? 1 : 0;
    }
    rec(0, 0);
    return count;
}

inline std::int64_t bell(int n)
{
    std::int64_t s = 0;
    for (int j = 0; j <= n; ++j) {
        s += set_partitions(n, j);
    }
    return s;
}

// Dense integer polynomial truncated at degree N.
using Coeffs = std::vector<mpz_class>;

inline Coeffs multiply(const Coeffs& a, const Coeffs& b, std::size_t N)
{
    Coeffs out(N + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// prod (1 - q^e) over the listed exponents, truncated at N.
inline Coeffs product_of_binomials(const std::vector<std::int64_t>& exponents, std::size_t N)
{
    Coeffs out(N + 1, 0);
    out[0] = 1;
    for (const auto e : exponents) {
        Coeffs f(N + 1, 0);
        f[0] = 1;
        if (static_cast<std::size_t>(e) <= N) {
            f[static_cast<std::size_t>(e)] = -1;
        }
        out = multiply(out, f, N);
    }
    return out;
}

// 1/(1 - q^a)^m by m long multiplications with the geometric series.
inline Coeffs reciprocal_power(std::size_t a, int m, std::size_t N)
{
    Coeffs geometric(N + 1, 0);
    for (std::size_t i = 0; i <= N; i += a) {
        geometric[i] = 1;
    }
    Coeffs out(N + 1, 0);
    out[0] = 1;
    for (int t = 0; t < m; ++t) {
        out = multiply(out, geometric, N);
    }
    return out;
}

inline bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// (D / p) for an odd prime p by Euler's criterion.
inline int euler_criterion(std::int64_t D, std::int64_t p)
{
    std::int64_t a = ((D % p) + p) % p;
    if (a == 0) {
        return 0;
    }
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = (p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
    }
    return result == 1 ? 1 : -1;
}

// chi_D(n) by complete multiplicativity over the prime factorization.
inline int character(std::int64_t D, std::int64_t n)
{
    int result = 1;
    for (std::int64_t p = 2; n > 1; ++p) {
        while (n % p == 0) {
            n /= p;
            if (p == 2) {
                const std::int64_t r = ((D % 8) + 8) % 8;
                result *= r % 2 == 0 ? 0 : (r == 1 || r == 7) ? 1 : -1;
            } else {
                result *= euler_criterion(D, p);
            }
        }
    }
    return result;
}

// Dirichlet's class number formula h(D) = -(w / 2|D|) sum_j chi(j) j.
inline std::int64_t class_number_dirichlet(std::int64_t D)
{
    const std::int64_t n = -D;
    const std::int64_t w = D == -3 ? 6 : D == -4 ? 4 : 2;
    std::int64_t s = 0;
    for (std::int64_t j = 1; j < n; ++j) {
        s += character(D, j) * j;
    }
    return -w * s / (2 * n);
}

} // namespace oracle
