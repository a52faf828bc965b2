#pragma once

#include <string>

#include "factcat/category.hpp"

namespace factcat {

/// Concatenation s (x) t. The empty tuple is a strict two-sided unit.
FactorTuple tensor_objects(const FactorTuple& s, const FactorTuple& t);

/// f (x) g for f: (x_n) -> (w_q) and g: (y_m) -> (z_p); the index function is
/// q |-> f(q) on [Q] and Q + p |-> N + g(p).
Morphism tensor_morphisms(const Morphism& f, const Morphism& g);

/// The symmetry s (x) t -> t (x) s.
Morphism braiding(const FactorTuple& s, const FactorTuple& t);

/// Outcome of a law check; `counterexample` is empty when the law holds.
struct LawCheck {
    bool holds = true;
    std::string counterexample;

    explicit operator bool() const noexcept { return holds; }
};

/// (h (x) k) o (f (x) g) == (h o f) (x) (k o g).
LawCheck check_bifunctoriality(const Morphism& f, const Morphism& g, const Morphism& h,
                               const Morphism& k, ComposeFn comp = &compose);
/// (a (x) b) (x) c == a (x) (b (x) c) for tuples.
LawCheck check_tensor_associativity(const FactorTuple& a, const FactorTuple& b,
                                    const FactorTuple& c);
/// Same, for morphisms.
LawCheck check_tensor_associativity(const Morphism& f, const Morphism& g, const Morphism& h);
/// braiding(t, s) o braiding(s, t) == id.
LawCheck check_braiding_involution(const FactorTuple& s, const FactorTuple& t,
                                   ComposeFn comp = &compose);
/// B_{x, y(x)z} == (id_y (x) B_{x,z}) o (B_{x,y} (x) id_z).
LawCheck check_hexagon(const FactorTuple& x, const FactorTuple& y, const FactorTuple& z,
                       ComposeFn comp = &compose);
/// B_{w,z} o (f (x) g) == (g (x) f) o B_{x,y} for f: x -> w, g: y -> z.
LawCheck check_braiding_naturality(const Morphism& f, const Morphism& g,
                                   ComposeFn comp = &compose);

}  // namespace factcat
