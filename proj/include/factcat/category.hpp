#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "factcat/errors.hpp"
#include "factcat/monoid.hpp"

namespace factcat {

/// An object of the category of factorization: an ordered, possibly empty,
/// tuple of monoid elements. The empty tuple is the tensor unit.
class FactorTuple {
public:
    FactorTuple(MonoidHandle monoid, std::vector<Element> entries);
    static FactorTuple empty(MonoidHandle monoid);

    const Monoid& monoid() const noexcept { return *monoid_; }
    const MonoidHandle& monoid_handle() const noexcept { return monoid_; }
    std::span<const Element> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_empty() const noexcept { return entries_.empty(); }
    const Element& operator[](std::size_t i) const { return entries_[i]; }

    std::string to_string() const;

    friend bool operator==(const FactorTuple& a, const FactorTuple& b) {
        return (a.monoid_ == b.monoid_ || *a.monoid_ == *b.monoid_) && a.entries_ == b.entries_;
    }

private:
    MonoidHandle monoid_;
    std::vector<Element> entries_;
};

/// A total function [M] -> [N], stored 0-based. The wire format is 1-based.
class IndexFunction {
public:
    IndexFunction() = default;
    IndexFunction(std::size_t cod_size, std::vector<std::size_t> values);
    static IndexFunction identity(std::size_t n);
    static IndexFunction from_one_based(std::size_t cod_size, std::span<const std::int64_t> values);

    std::size_t dom_size() const noexcept { return values_.size(); }
    std::size_t cod_size() const noexcept { return cod_size_; }
    std::size_t operator()(std::size_t m) const { return values_[m]; }
    const std::vector<std::size_t>& values() const noexcept { return values_; }
    std::vector<std::int64_t> one_based() const;

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    /// Preimage of n, ascending.
    std::vector<std::size_t> fiber(std::size_t n) const;

    /// (*this o inner)(p) = (*this)(inner(p)).
    IndexFunction after(const IndexFunction& inner) const;

    friend bool operator==(const IndexFunction&, const IndexFunction&) = default;
    friend auto operator<=>(const IndexFunction&, const IndexFunction&) = default;

private:
    std::size_t cod_size_ = 0;
    std::vector<std::size_t> values_;
};

/// A domain tuple violates the order constraint at `index` (1-based).
class ConstraintViolation : public ValidationError {
public:
    ConstraintViolation(std::size_t index, const std::string& what)
        : ValidationError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A morphism (x_n) -> (y_m): a function f: [M] -> [N] running from codomain
/// indices to domain indices such that x_n <= prod_{f(m) = n} y_m for all n.
class Morphism {
public:
    /// Checks sizes and the order constraint; throws ConstraintViolation
    /// naming the first failing domain index.
    static Morphism validated(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn);
    /// For constructions whose order constraint holds by theory (composition,
    /// tensor, braiding). No check is performed.
    static Morphism trusted(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn);

    const FactorTuple& domain() const noexcept { return domain_; }
    const FactorTuple& codomain() const noexcept { return codomain_; }
    const IndexFunction& index_fn() const noexcept { return index_fn_; }
    const Monoid& monoid() const noexcept { return domain_.monoid(); }
    const MonoidHandle& monoid_handle() const noexcept { return domain_.monoid_handle(); }

    std::string to_string() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Morphism(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn);

    FactorTuple domain_;
    FactorTuple codomain_;
    IndexFunction index_fn_;
};

/// hom_set refuses to enumerate more than this many candidate functions.
inline constexpr std::uint64_t kHomSetGuard = 10'000'000;

/// Fiber products prod_{f(m) = n} y_m for every n.
std::vector<Element> fiber_products(const FactorTuple& domain, const FactorTuple& codomain,
                                    const IndexFunction& f);

Morphism validate_morphism(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn);
Morphism identity_morphism(const FactorTuple& t);
/// g o f. Requires f.codomain() == g.domain().
Morphism compose(const Morphism& g, const Morphism& f);

/// Signature of compose; law checks accept a replacement so that the
/// verification harness can be tested against a corrupted composition.
using ComposeFn = Morphism (*)(const Morphism& g, const Morphism& f);

/// Number of candidate functions [M] -> [N], saturating above the guard.
std::uint64_t hom_candidate_count(std::size_t domain_len, std::size_t codomain_len);
/// Every morphism domain -> codomain, lexicographic in the 1-based map.
std::vector<Morphism> hom_set(const FactorTuple& domain, const FactorTuple& codomain);

bool is_epic(const Morphism& m);
bool is_monic(const Morphism& m);
/// Units u_n with u_n x_n = y_{f^-1(n)}, or nullopt if m is not an isomorphism.
std::optional<std::vector<Element>> isomorphism_units(const Morphism& m);
bool is_isomorphism(const Morphism& m);
std::optional<Morphism> inverse(const Morphism& m);

bool is_initial(const FactorTuple& t);
/// A 1-tuple with no morphism into t.
FactorTuple refute_terminal(const FactorTuple& t);

IndexFunction underlying_function(const Morphism& m);
Element product_functor(const FactorTuple& t);
FactorTuple embed_functor(const MonoidHandle& monoid, const Element& a);

/// One of the shipped order-respecting monoid homomorphisms.
class MonoidHomomorphism {
public:
    static MonoidHomomorphism identity(MonoidHandle monoid);
    static MonoidHomomorphism naturals_to_integers();
    /// Generator i maps to images[i]; images must be nonzero integers.
    static MonoidHomomorphism free_to_integers(MonoidHandle source, std::vector<Integer> images);
    /// Generator i maps to the i-th prime (2, 3, 5, ...).
    static MonoidHomomorphism free_to_integers(MonoidHandle source);

    const MonoidHandle& source() const noexcept { return source_; }
    const MonoidHandle& target() const noexcept { return target_; }
    Element apply(const Element& a) const;
    FactorTuple apply(const FactorTuple& t) const;

private:
    enum class Kind { Identity, NaturalsToIntegers, FreeToIntegers };
    MonoidHomomorphism(Kind kind, MonoidHandle source, MonoidHandle target,
                       std::vector<Integer> images = {});

    Kind kind_;
    MonoidHandle source_;
    MonoidHandle target_;
    std::vector<Integer> images_;
};

/// F(phi) on morphisms: apply phi entry-wise and keep the index function.
Morphism map_along_hom(const MonoidHomomorphism& phi, const Morphism& m);

}  // namespace factcat
