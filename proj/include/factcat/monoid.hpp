#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace factcat {

using Integer = std::int64_t;
using Rational = boost::rational<std::int64_t>;

/// A finite multiset over a monoid's generator alphabet, stored as one
/// exponent per generator (alphabet order).
struct FreeElement {
    std::vector<std::uint32_t> exponents;

    friend bool operator==(const FreeElement&, const FreeElement&) = default;
    friend auto operator<=>(const FreeElement&, const FreeElement&) = default;
};

/// One element of a shipped monoid instance. Which alternative is active is
/// fixed by the monoid: Integer for "zx"/"nat", Rational for "interval",
/// FreeElement for "free:...".
using Element = std::variant<Integer, Rational, FreeElement>;

enum class MonoidKind { Integers, Naturals, UnitInterval, FreeCommutative };

/// Trial-division primality and factorization refuse inputs with |a| above this.
inline constexpr Integer kPrimalityBound = Integer{1} << 31;

struct Factorization {
    Element unit;
    std::vector<Element> factors;
};

/// A commutative, cancellative, pre-ordered monoid.
///
/// Four instances ship: nonzero integers ("zx"), positive integers ("nat"),
/// exact rationals in (0,1] under the numeric order ("interval"), and the free
/// commutative monoid over a finite alphabet ("free:ab" or "free:x,y,z").
/// All but the interval carry the divisibility order, and every operation that
/// needs divisibility throws CapabilityError on the interval.
class Monoid {
public:
    static Monoid integers();
    static Monoid naturals();
    static Monoid unit_interval();
    static Monoid free_commutative(std::vector<std::string> alphabet);

    MonoidKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    bool is_divisibility_monoid() const noexcept { return kind_ != MonoidKind::UnitInterval; }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }

    bool is_valid(const Element& a) const;
    void require_valid(const Element& a) const;

    Element identity() const;
    Element op(const Element& a, const Element& b) const;
    Element product(std::span<const Element> xs) const;

    bool leq(const Element& a, const Element& b) const;
    bool is_invertible(const Element& a) const;
    std::optional<Element> inverse(const Element& a) const;

    /// The unique q with op(a, q) == b, if a divides b.
    std::optional<Element> exact_divide(const Element& a, const Element& b) const;
    bool divides(const Element& a, const Element& b) const;
    bool are_associates(const Element& a, const Element& b) const;

    bool is_irreducible(const Element& a) const;
    bool is_prime(const Element& a) const;
    /// Canonical factorization: positive primes ascending with unit in {1,-1}
    /// for integers, generators in alphabet order for the free monoid.
    Factorization factor_irreducibles(const Element& a) const;

    /// The i-th generator of a free monoid.
    Element generator(std::size_t i) const;

    /// Wire text of an element: "6", "1/2", "a^2*b" ("1" for the free identity).
    std::string format(const Element& a) const;
    /// Inverse of format(); also accepts "p/q" not in lowest terms.
    Element parse(std::string_view text) const;

    void require_divisibility(std::string_view operation) const;

    friend bool operator==(const Monoid& a, const Monoid& b) {
        return a.kind_ == b.kind_ && a.alphabet_ == b.alphabet_;
    }

private:
    Monoid(MonoidKind kind, std::string name, std::vector<std::string> alphabet = {});

    MonoidKind kind_;
    std::string name_;
    std::vector<std::string> alphabet_;
};

using MonoidHandle = std::shared_ptr<const Monoid>;

/// Resolves "zx", "nat", "interval" or "free:<alphabet>". A free alphabet is
/// either comma separated ("free:x,y") or one generator per character ("free:ab").
MonoidHandle make_monoid(std::string_view name);

namespace arith {

/// Multiplication that throws RangeError instead of overflowing.
Integer checked_mul(Integer a, Integer b);
bool is_prime_number(Integer n);
/// Smallest prime strictly greater than n.
Integer next_prime(Integer n);

}  // namespace arith

}  // namespace factcat
