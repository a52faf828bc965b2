#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "factcat/category.hpp"

namespace factcat {

/// Total witnesses s (of f) and r (of g), and whether s | r.
struct WeakDivisibility {
    bool divides;
    Element s;
    Element r;
};

/// f |_w g, decided by s | r.
WeakDivisibility weak_divisibility(const Morphism& f, const Morphism& g);
bool weakly_divides(const Morphism& f, const Morphism& g);
/// The product criterion prod x * prod w | prod v * prod y for f: (v) -> (w),
/// g: (x) -> (y). Independent of the witness path; used to cross-check it.
bool weakly_divides_by_products(const Morphism& f, const Morphism& g);

/// The witness square for f |_w g with middle tuples of length one:
///
///   (a)(x)(x_n) <-mu- (a prod x) -alpha-> (b)(x)(v_i)
///        |                                    |
///   (a)(x)g                              (b)(x)f
///        v                                    v
///   (a)(x)(y_m) <-beta- (b prod w) -eta-> (b)(x)(w_j)
///
/// with a = prod v and b = prod x.
struct WeakDivDiagram {
    Element a;
    Element b;
    Morphism mu;
    Morphism alpha;
    Morphism beta;
    Morphism eta;
    Morphism left;   // (a) (x) g
    Morphism right;  // (b) (x) f
};

WeakDivDiagram weak_div_diagram(const Morphism& f, const Morphism& g);

bool weakly_associate(const Morphism& f, const Morphism& g);

bool is_weakly_irreducible(const Morphism& m);
bool is_weakly_prime(const Morphism& m);
/// Classifies the morphism (1) -> t.
bool is_weakly_irreducible_tuple(const FactorTuple& t);
bool is_weakly_prime_tuple(const FactorTuple& t);

enum class StepTag { WeakEquivalence, WeaklyIrreducible };

struct AtomicChain {
    std::vector<Morphism> steps;  // composed left to right
    std::vector<StepTag> tags;
    std::size_t irr_count = 0;
};

/// Splits m into weak equivalences and weakly irreducible divisibility steps:
/// the drop-units morphism, one step per irreducible factor of each a_p
/// (coordinates ascending, factors in canonical order), and a final weak
/// equivalence carrying the leftover units and the factorization morphism.
/// Identity steps are omitted; an identity m yields the single step m.
AtomicChain atomic_chain(const Morphism& m);

/// steps[k] o ... o steps[0].
Morphism compose_chain(std::span<const Morphism> steps);

std::size_t zeta_elt(const Monoid& monoid, const Element& a);
std::size_t zeta_mor(const Morphism& m);
std::size_t zeta_obj(const FactorTuple& t);

/// Divisors of a up to associates; positive divisors ascending for integers,
/// sub-multisets by (degree, text) for the free monoid.
std::vector<Element> divisor_classes(const Monoid& monoid, const Element& a);
/// Representatives of the weak-divisor classes of m: divisor_classes(r).
std::vector<Element> weak_divisor_classes(const Morphism& m);

/// For a chain (x_1) <- (x_2) <- ... given as chain[i]: x_{i+2} -> x_{i+1},
/// the first 1-based index from which every morphism is a weak equivalence,
/// or nullopt if the last morphism is not one.
std::optional<std::size_t> chain_stabilizes(std::span<const Morphism> chain);

struct FactorizationEnumeration {
    std::vector<std::vector<Element>> factorizations;  // canonical representatives
    bool truncated = false;
};

/// Every factorization of a into irreducibles up to units and reordering,
/// by brute-force divisor recursion. Stops after max_count results.
FactorizationEnumeration enumerate_irreducible_factorizations(const Monoid& monoid,
                                                              const Element& a,
                                                              std::size_t max_count);

/// The apex (t) with weakly irreducible legs (v) -> (t) <- (w) and (t) -> (z).
struct Wedge {
    FactorTuple apex;
    Morphism from_v;
    Morphism from_w;
    Morphism to_z;
};

/// For f: (v_i) -> (z_p) and g: (w_j) -> (z_p) out of weakly irreducible
/// tuples: a weak equivalence (v_i) -> (w_j) when the irreducible entries are
/// associates, otherwise the wedge through t = v_{i0} w_{j0}.
std::variant<Morphism, Wedge> ufd_wedge(const Morphism& f, const Morphism& g);

}  // namespace factcat
