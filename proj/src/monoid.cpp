#include "factcat/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "factcat/errors.hpp"

namespace factcat {

namespace arith {

Integer checked_mul(Integer a, Integer b) {
    Integer out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw RangeError("integer product overflows 64 bits");
    }
    return out;
}

namespace {

Integer magnitude(Integer a) {
    if (a == std::numeric_limits<Integer>::min()) {
        throw RangeError("integer magnitude out of range");
    }
    return a < 0 ? -a : a;
}

void check_primality_bound(Integer n) {
    if (magnitude(n) > kPrimalityBound) {
        throw RangeError("|" + std::to_string(n) + "| exceeds the trial-division bound 2^31");
    }
}

}  // namespace

bool is_prime_number(Integer n) {
    check_primality_bound(n);
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Integer next_prime(Integer n) {
    Integer candidate = std::max<Integer>(n + 1, 2);
    while (!is_prime_number(candidate)) ++candidate;
    return candidate;
}

}  // namespace arith

namespace {

const Integer& as_int(const Element& a) { return std::get<Integer>(a); }
const Rational& as_rat(const Element& a) { return std::get<Rational>(a); }
const FreeElement& as_free(const Element& a) { return std::get<FreeElement>(a); }

Rational rational_mul(const Rational& a, const Rational& b) {
    // cross-reduce first so that the checked products stay small
    const Integer g1 = std::gcd(a.numerator(), b.denominator());
    const Integer g2 = std::gcd(b.numerator(), a.denominator());
    const Integer num = arith::checked_mul(a.numerator() / g1, b.numerator() / g2);
    const Integer den = arith::checked_mul(a.denominator() / g2, b.denominator() / g1);
    return Rational(num, den);
}

std::uint32_t total_degree(const FreeElement& a) {
    return std::accumulate(a.exponents.begin(), a.exponents.end(), std::uint32_t{0});
}

}  // namespace

Monoid::Monoid(MonoidKind kind, std::string name, std::vector<std::string> alphabet)
    : kind_(kind), name_(std::move(name)), alphabet_(std::move(alphabet)) {}

Monoid Monoid::integers() { return Monoid(MonoidKind::Integers, "zx"); }
Monoid Monoid::naturals() { return Monoid(MonoidKind::Naturals, "nat"); }
Monoid Monoid::unit_interval() { return Monoid(MonoidKind::UnitInterval, "interval"); }

Monoid Monoid::free_commutative(std::vector<std::string> alphabet) {
    if (alphabet.empty()) throw ValidationError("free monoid needs a non-empty alphabet");
    for (const auto& g : alphabet) {
        const bool ok = !g.empty() && std::isalpha(static_cast<unsigned char>(g[0])) &&
                        std::all_of(g.begin(), g.end(), [](char c) {
                            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                        });
        if (!ok) throw ValidationError("invalid generator name '" + g + "'");
    }
    auto sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("duplicate generator in free monoid alphabet");
    }
    std::string name = "free:";
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (i) name += ',';
        name += alphabet[i];
    }
    return Monoid(MonoidKind::FreeCommutative, std::move(name), std::move(alphabet));
}

bool Monoid::is_valid(const Element& a) const {
    switch (kind_) {
        case MonoidKind::Integers:
            return std::holds_alternative<Integer>(a) && as_int(a) != 0;
        case MonoidKind::Naturals:
            return std::holds_alternative<Integer>(a) && as_int(a) > 0;
        case MonoidKind::UnitInterval:
            return std::holds_alternative<Rational>(a) && as_rat(a) > Rational(0) && as_rat(a) <= Rational(1);
        case MonoidKind::FreeCommutative:
            return std::holds_alternative<FreeElement>(a) &&
                   as_free(a).exponents.size() == alphabet_.size();
    }
    return false;
}

void Monoid::require_valid(const Element& a) const {
    if (!is_valid(a)) throw ValidationError("element is not valid in monoid " + name_);
}

void Monoid::require_divisibility(std::string_view operation) const {
    if (!is_divisibility_monoid()) {
        throw CapabilityError(std::string(operation) + " requires a divisibility monoid; " +
                              name_ + " is not one");
    }
}

Element Monoid::identity() const {
    switch (kind_) {
        case MonoidKind::Integers:
        case MonoidKind::Naturals:
            return Integer{1};
        case MonoidKind::UnitInterval:
            return Rational(1);
        case MonoidKind::FreeCommutative:
            return FreeElement{std::vector<std::uint32_t>(alphabet_.size(), 0)};
    }
    return Integer{1};
}

Element Monoid::op(const Element& a, const Element& b) const {
    require_valid(a);
    require_valid(b);
    switch (kind_) {
        case MonoidKind::Integers:
        case MonoidKind::Naturals:
            return arith::checked_mul(as_int(a), as_int(b));
        case MonoidKind::UnitInterval:
            return rational_mul(as_rat(a), as_rat(b));
        case MonoidKind::FreeCommutative: {
            FreeElement out = as_free(a);
            const auto& rhs = as_free(b).exponents;
            for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += rhs[i];
            return out;
        }
    }
    return a;
}

Element Monoid::product(std::span<const Element> xs) const {
    Element acc = identity();
    for (const auto& x : xs) acc = op(acc, x);
    return acc;
}

bool Monoid::leq(const Element& a, const Element& b) const {
    require_valid(a);
    require_valid(b);
    if (kind_ == MonoidKind::UnitInterval) return as_rat(a) <= as_rat(b);
    return exact_divide(a, b).has_value();
}

bool Monoid::is_invertible(const Element& a) const {
    require_valid(a);
    switch (kind_) {
        case MonoidKind::Integers:
            return as_int(a) == 1 || as_int(a) == -1;
        case MonoidKind::Naturals:
            return as_int(a) == 1;
        case MonoidKind::UnitInterval:
            return as_rat(a) == Rational(1);
        case MonoidKind::FreeCommutative:
            return total_degree(as_free(a)) == 0;
    }
    return false;
}

std::optional<Element> Monoid::inverse(const Element& a) const {
    if (!is_invertible(a)) return std::nullopt;
    return a;  // every unit of the shipped instances is its own inverse
}

std::optional<Element> Monoid::exact_divide(const Element& a, const Element& b) const {
    require_divisibility("exact_divide");
    require_valid(a);
    require_valid(b);
    if (kind_ == MonoidKind::FreeCommutative) {
        FreeElement q = as_free(b);
        const auto& sub = as_free(a).exponents;
        for (std::size_t i = 0; i < sub.size(); ++i) {
            if (sub[i] > q.exponents[i]) return std::nullopt;
            q.exponents[i] -= sub[i];
        }
        return q;
    }
    const Integer x = as_int(a);
    const Integer y = as_int(b);
    if (x == -1) {
        if (y == std::numeric_limits<Integer>::min()) throw RangeError("quotient overflows");
        return -y;
    }
    if (y % x != 0) return std::nullopt;
    return y / x;
}

bool Monoid::divides(const Element& a, const Element& b) const {
    return exact_divide(a, b).has_value();
}

bool Monoid::are_associates(const Element& a, const Element& b) const {
    require_divisibility("are_associates");
    return divides(a, b) && divides(b, a);
}

bool Monoid::is_irreducible(const Element& a) const {
    require_divisibility("is_irreducible");
    require_valid(a);
    if (kind_ == MonoidKind::FreeCommutative) return total_degree(as_free(a)) == 1;
    const Integer x = as_int(a);
    return arith::is_prime_number(x < 0 ? -x : x);
}

bool Monoid::is_prime(const Element& a) const {
    require_divisibility("is_prime");
    require_valid(a);
    if (kind_ == MonoidKind::FreeCommutative) {
        // a | bc forces a | b or a | c exactly when a is a single generator
        return total_degree(as_free(a)) == 1;
    }
    // Euclid's lemma: in Z (and N) the prime elements are the +-primes
    const Integer x = as_int(a);
    return arith::is_prime_number(x < 0 ? -x : x);
}

Factorization Monoid::factor_irreducibles(const Element& a) const {
    require_divisibility("factor_irreducibles");
    require_valid(a);
    Factorization out{identity(), {}};
    if (kind_ == MonoidKind::FreeCommutative) {
        const auto& e = as_free(a).exponents;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) out.factors.push_back(generator(i));
        }
        return out;
    }
    Integer x = as_int(a);
    if (x == std::numeric_limits<Integer>::min() || (x < 0 ? -x : x) > kPrimalityBound) {
        throw RangeError("|" + std::to_string(x) + "| exceeds the trial-division bound 2^31");
    }
    if (x < 0) {
        out.unit = Integer{-1};
        x = -x;
    }
    for (Integer d = 2; d * d <= x; ++d) {
        while (x % d == 0) {
            out.factors.emplace_back(d);
            x /= d;
        }
    }
    if (x > 1) out.factors.emplace_back(x);
    return out;
}

Element Monoid::generator(std::size_t i) const {
    if (kind_ != MonoidKind::FreeCommutative || i >= alphabet_.size()) {
        throw ValidationError("generator index out of range");
    }
    FreeElement g{std::vector<std::uint32_t>(alphabet_.size(), 0)};
    g.exponents[i] = 1;
    return g;
}

std::string Monoid::format(const Element& a) const {
    require_valid(a);
    switch (kind_) {
        case MonoidKind::Integers:
        case MonoidKind::Naturals:
            return std::to_string(as_int(a));
        case MonoidKind::UnitInterval: {
            const auto& q = as_rat(a);
            if (q.denominator() == 1) return std::to_string(q.numerator());
            return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
        }
        case MonoidKind::FreeCommutative: {
            std::string out;
            const auto& e = as_free(a).exponents;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!out.empty()) out += '*';
                out += alphabet_[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
            return out.empty() ? "1" : out;
        }
    }
    return {};
}

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw ParseError("malformed integer '" + std::string(text) + "'");
        }
    }
    errno = 0;
    const std::string owned(text);
    char* end = nullptr;
    const long long v = std::strtoll(owned.c_str(), &end, 10);
    if (errno == ERANGE) throw RangeError("integer '" + owned + "' out of 64-bit range");
    return v;
}

}  // namespace

Element Monoid::parse(std::string_view text) const {
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
    Element out;
    switch (kind_) {
        case MonoidKind::Integers:
        case MonoidKind::Naturals:
            out = parse_integer(trimmed);
            break;
        case MonoidKind::UnitInterval: {
            const auto slash = trimmed.find('/');
            const Integer num = parse_integer(trimmed.substr(0, slash));
            const Integer den =
                slash == std::string_view::npos ? 1 : parse_integer(trimmed.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
            out = Rational(num, den);
            break;
        }
        case MonoidKind::FreeCommutative: {
            FreeElement e{std::vector<std::uint32_t>(alphabet_.size(), 0)};
            if (trimmed != "1") {
                std::size_t pos = 0;
                while (pos <= trimmed.size()) {
                    const auto star = trimmed.find('*', pos);
                    const auto factor = trimmed.substr(
                        pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
                    const auto caret = factor.find('^');
                    const auto gen = factor.substr(0, caret);
                    Integer power = 1;
                    if (caret != std::string_view::npos) power = parse_integer(factor.substr(caret + 1));
                    const auto it = std::find(alphabet_.begin(), alphabet_.end(), gen);
                    if (it == alphabet_.end() || power < 1 || power > 1'000'000) {
                        throw ParseError("malformed free monoid element '" + std::string(text) + "'");
                    }
                    e.exponents[static_cast<std::size_t>(it - alphabet_.begin())] +=
                        static_cast<std::uint32_t>(power);
                    if (star == std::string_view::npos) break;
                    pos = star + 1;
                }
            }
            out = std::move(e);
            break;
        }
    }
    if (!is_valid(out)) {
        throw ValidationError("'" + std::string(text) + "' is not an element of " + name_);
    }
    return out;
}

MonoidHandle make_monoid(std::string_view name) {
    if (name == "zx") return std::make_shared<const Monoid>(Monoid::integers());
    if (name == "nat") return std::make_shared<const Monoid>(Monoid::naturals());
    if (name == "interval") return std::make_shared<const Monoid>(Monoid::unit_interval());
    constexpr std::string_view prefix = "free:";
    if (name.starts_with(prefix)) {
        const std::string_view spec = name.substr(prefix.size());
        std::vector<std::string> alphabet;
        if (spec.find(',') != std::string_view::npos) {
            std::stringstream ss{std::string(spec)};
            for (std::string g; std::getline(ss, g, ',');) alphabet.push_back(g);
        } else {
            for (char c : spec) alphabet.emplace_back(1, c);
        }
        return std::make_shared<const Monoid>(Monoid::free_commutative(std::move(alphabet)));
    }
    throw ParseError("unknown monoid '" + std::string(name) + "'");
}

}  // namespace factcat
