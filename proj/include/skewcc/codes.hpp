#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewcc/skewpoly.hpp"

namespace skewcc {

/// Closure class of a code under symbol shifts: with r = gcd(n, order of
/// the automorphism), the code is invariant under the r-fold twisted shift,
/// which makes it (quasi-)cyclic when alpha = 1 and (quasi-)twisted
/// otherwise. index = n / r is the block count of the quasi kinds.
struct ShiftClass {
    enum class Kind { cyclic, constacyclic, quasi_cyclic, quasi_twisted };

    Kind kind = Kind::cyclic;
    std::size_t index = 1;

    friend bool operator==(const ShiftClass&, const ShiftClass&) = default;
};

std::string to_string(const ShiftClass& c);

/// One CRT component of a code: the F_q code generated by gen inside
/// F_q[x, theta] / (x^n - alpha).
struct ComponentCode {
    std::size_t i = 0;  // f-root index, zero-based
    std::size_t j = 0;  // g-root index, zero-based
    FieldElement alpha;
    FieldPoly gen;
    std::size_t dim = 0;
};

/// Linear code of length n over the ring, generated as a left module by a
/// single skew polynomial modulo x^n - alpha.
///
/// For componentwise automorphisms (identity, theta) the code splits into
/// k*l component codes over F_q whose monic generators are the CRT slices
/// of the generator; construction enforces that every slice right-divides
/// x^n - alpha_ij. The psi twist mixes components, so psi codes keep only
/// the ring-level generator (slices remain available as raw data).
class Code {
  public:
    static Code from_components(Ring ring, std::size_t n, Autom autom,
                                std::vector<FieldElement> alphas, std::vector<FieldPoly> gens);
    static Code from_generator(Ring ring, std::size_t n, Autom autom, RingElement alpha,
                               SkewPoly gen);

    const Ring& ring() const { return ring_; }
    std::size_t length() const { return n_; }
    const Autom& autom() const { return autom_; }
    const RingElement& alpha() const { return alpha_; }
    const SkewPoly& gen() const { return gen_; }

    /// Component table in (i outer, j inner) order.
    const std::vector<ComponentCode>& components() const { return comps_; }

    /// Cardinality as (q, exponent): |C| = q^(k l n - sum deg gen_ij).
    std::pair<std::uint64_t, std::int64_t> size() const;

    ShiftClass classify() const;

    /// Dual code from the transposed-twisted cofactor of every component.
    /// Requires a componentwise automorphism whose order divides n.
    Code dual() const;

    /// Idempotent generator; requires gcd(n, q) = 1 and gcd(n, order) = 1.
    /// Computed through the commutative component codes and then verified
    /// idempotent under the skew product.
    SkewPoly idempotent_generator() const;

    bool is_selfdual() const;

    bool contains(const std::vector<RingElement>& word) const;

  private:
    Code() = default;

    Ring ring_;
    std::size_t n_ = 0;
    Autom autom_;
    RingElement alpha_;
    SkewPoly gen_;
    std::vector<ComponentCode> comps_;
};

/// Generator of the dual of the component code <gen> in
/// F_q[x, theta] / (x^n - alpha): with x^n - alpha = h * gen, returns the
/// monic normalization of
///   h^perp = h_{n-r} + theta(h_{n-r-1}) x + ... + theta^{n-r}(h_0) x^{n-r}.
/// Requires the automorphism order to divide n.
FieldPoly dual_component_generator(const FieldPoly& gen, std::size_t n, const FieldElement& alpha);

/// Recovers the monic minimal-degree generator of an explicitly listed
/// codeword set (flattened field indices,
/// one symbol = comps() consecutive entries). Errors when no minimal-degree
/// codeword has a unit leading coefficient or the set is not generated by
/// its minimal-degree codeword.
SkewPoly minimal_degree_generator(const Ring& ring, Autom autom, std::size_t n,
                                  const RingElement& alpha,
                                  const std::vector<std::vector<std::uint16_t>>& words);

FieldPoly minimal_degree_generator(const Field& field, Autom autom, std::size_t n,
                                   const FieldElement& alpha,
                                   const std::vector<std::vector<std::uint16_t>>& words);

// Conversions between length-n words over the ring, their polynomial form
// and the flattened index layout used by the enumeration routines.
SkewPoly word_to_poly(Autom autom, const std::vector<RingElement>& word);
std::vector<RingElement> poly_to_word(const Ring& ring, std::size_t n, const SkewPoly& f);
std::vector<RingElement> flat_to_word(const Ring& ring, std::size_t n,
                                      const std::vector<std::uint16_t>& flat);
std::vector<std::uint16_t> word_to_flat(const std::vector<RingElement>& word);

}  // namespace skewcc
