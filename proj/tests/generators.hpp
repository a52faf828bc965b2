// Seeded generators for property tests.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "factcat/category.hpp"
#include "oracles.hpp"

namespace gen {

using namespace factcat;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
    bool coin() { return uniform(0, 1) == 1; }

    std::int64_t nonzero(std::int64_t bound) {
        std::int64_t v = 0;
        while (v == 0) v = uniform(-bound, bound);
        return v;
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) { return xs[index(xs.size())]; }

    FactorTuple tuple(const MonoidHandle& h, const std::vector<Element>& pool, std::size_t max_len) {
        std::vector<Element> entries(static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_len))));
        for (auto& e : entries) e = pick(pool);
        return FactorTuple(h, std::move(entries));
    }

    /// A random zx morphism: random codomain entries and index function, then
    /// each domain entry a random signed divisor of its fiber product.
    Morphism zx_morphism(const MonoidHandle& h, std::int64_t entry_bound, std::size_t max_len) {
        const auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_len)));
        const auto m = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_len)));
        std::vector<std::int64_t> y(m);
        for (auto& v : y) v = nonzero(entry_bound);
        std::vector<std::size_t> f(m);
        for (auto& v : f) v = index(n);
        std::vector<Element> xs, ys(y.begin(), y.end());
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t fiber = 1;
            for (std::size_t k = 0; k < m; ++k) {
                if (f[k] == i) fiber *= y[k];
            }
            xs.emplace_back(pick(oracles::divisors(fiber)) * (coin() ? 1 : -1));
        }
        return Morphism::validated(FactorTuple(h, std::move(xs)), FactorTuple(h, std::move(ys)),
                                   IndexFunction(n, std::move(f)));
    }

    /// A morphism out of `x` into a fresh codomain, built like zx_morphism
    /// but with the domain fixed: each x_n receives a fiber whose product it divides.
    Morphism zx_extend(const FactorTuple& x, std::int64_t factor_bound, std::size_t max_len) {
        const auto& h = x.monoid_handle();
        const std::size_t n = x.size();
        const auto m = n == 0 ? std::size_t{0} : static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_len)));
        std::vector<std::size_t> f(m);
        for (auto& v : f) v = index(n);
        if (m > 0) {
            // every fiber must be non-empty unless x_n is a unit
            for (std::size_t i = 0; i < n; ++i) {
                const auto xi = std::get<Integer>(x[i]);
                if (oracles::iabs(xi) == 1) continue;
                if (std::find(f.begin(), f.end(), i) == f.end()) {
                    f.push_back(i);
                }
            }
        }
        std::vector<Element> ys(f.size());
        std::vector<bool> seeded(n, false);
        for (std::size_t k = 0; k < f.size(); ++k) {
            const auto i = f[k];
            std::int64_t v = nonzero(factor_bound);
            if (!seeded[i]) {
                v *= std::get<Integer>(x[i]);
                seeded[i] = true;
            }
            ys[k] = v;
        }
        return Morphism::validated(x, FactorTuple(h, std::move(ys)), IndexFunction(n, std::move(f)));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
