#pragma once

#include <vector>

#include "factcat/category.hpp"

namespace factcat {

/// The unique r_n with r_n x_n = prod_{f(m) = n} y_m, and r = prod r_n with
/// r prod x = prod y. For an empty codomain `per_index` is empty and
/// `total` is (prod x)^-1.
struct QuotientWitness {
    std::vector<Element> per_index;
    Element total;
};

QuotientWitness quotient_witnesses(const Morphism& m);

/// Membership in W(A): the codomain is empty or every r_n is invertible.
bool is_weak_equivalence(const Morphism& m);

/// m = phi o delta o epsilon, where epsilon drops the domain entries outside
/// Im(f), delta is the divisibility morphism (z_p) -> (a_p z_p) and phi is a
/// factorization morphism.
struct EIPDecomposition {
    Morphism epsilon;
    Morphism delta;
    Morphism phi;
    std::vector<Element> ratios;  // a_p
    Element dropped_unit;         // product of the dropped (invertible) entries
};

/// Requires non-empty domain and codomain.
EIPDecomposition decompose_eip(const Morphism& m);

enum class DeltaClass { WeakEquivalence, Proper };

/// WeakEquivalence iff every a_p of the decomposition is invertible.
DeltaClass classify_by_delta(const Morphism& m);

struct OreSquare {
    Morphism f_prime;  // (prod z) -> (z_p), in W
    Morphism g_prime;  // (prod z) -> (x_n)
};

/// Completes f: (x_n) -> (y_m) in W and g: (z_p) -> (y_m) to a commuting
/// square f o g' == g o f'.
OreSquare ore_square(const Morphism& f, const Morphism& g);

/// Given parallel f, f2 and g in W with g o f == g o f2, returns the
/// factorization morphism h: (prod x) -> (x_n), which satisfies f o h == f2 o h.
Morphism right_cancel_witness(const Morphism& f, const Morphism& f2, const Morphism& g);

}  // namespace factcat
