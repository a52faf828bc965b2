// Independent reference computations on plain integers. Nothing here calls
// into the library, so agreement with it is evidence rather than tautology.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace oracles {

inline std::int64_t iabs(std::int64_t n) { return n < 0 ? -n : n; }

/// Prime factors of |n| ascending, with multiplicity.
inline std::vector<std::int64_t> trial_factor(std::int64_t n) {
    std::vector<std::int64_t> out;
    n = iabs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_prime(std::int64_t n) {
    n = iabs(n);
    if (n < 2) return false;
    for (std::int64_t d = 2; d < n && d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Positive divisors of |n| ascending, by scanning 1..|n|.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= iabs(n); ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

/// Multisets of primes (non-decreasing) multiplying to |n|, by recursion over
/// every candidate divisor; UFD means exactly one for |n| > 1.
inline void prime_multisets(std::int64_t n, std::int64_t least, std::vector<std::int64_t>& cur,
                            std::vector<std::vector<std::int64_t>>& out) {
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t d = least; d <= n; ++d) {
        if (n % d != 0 || !is_prime(d)) continue;
        cur.push_back(d);
        prime_multisets(n / d, d, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::int64_t>> prime_multisets(std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    prime_multisets(iabs(n), 2, cur, out);
    return out;
}

inline bool divides(std::int64_t a, std::int64_t b) { return b % a == 0; }

/// |hom(x, y)| in the nonzero integers, by trying every function [|y|] -> [|x|].
inline std::uint64_t hom_count(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    const std::size_t n = x.size(), m = y.size();
    if (n == 0) return m == 0 ? 1 : 0;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= n;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> fiber(n, 1);
        std::uint64_t c = code;
        for (std::size_t k = 0; k < m; ++k) {
            fiber[c % n] *= y[k];
            c /= n;
        }
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) ok = ok && divides(x[i], fiber[i]);
        count += ok;
    }
    return count;
}

/// Number of irreducible factors of n counted with multiplicity.
inline std::size_t omega(std::int64_t n) { return trial_factor(n).size(); }

}  // namespace oracles
