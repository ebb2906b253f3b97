#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "skewcc/gf.hpp"

namespace skewcc {

/// Ring automorphism selector. Three choices exist:
///   - identity,
///   - psi: cyclic rotation of the second CRT index (order l, the identity
///     when l = 1),
///   - theta(t): componentwise Frobenius x -> x^(p^t), which requires t to
///     divide the extension degree s and then has order s/t.
///
/// The tag is part of every skew polynomial value; operands with different
/// tags never mix implicitly.
struct Autom {
    enum class Kind { identity, psi, theta };

    Kind kind = Kind::identity;
    std::uint32_t t = 0;

    static Autom id() { return {Kind::identity, 0}; }
    static Autom make_psi() { return {Kind::psi, 0}; }
    static Autom make_theta(std::uint32_t t) { return {Kind::theta, t}; }

    friend bool operator==(const Autom&, const Autom&) = default;

    bool is_identity() const { return kind == Kind::identity; }
    bool is_psi() const { return kind == Kind::psi; }
    bool is_theta() const { return kind == Kind::theta; }

    /// Componentwise automorphisms are the ones compatible with the CRT
    /// component decomposition of codes.
    bool is_componentwise() const { return kind != Kind::psi; }

    /// Validates the tag against a coefficient field; theta(t) needs
    /// 1 <= t <= s with t dividing s.
    void validate(const Field& field) const {
        if (kind != Kind::theta) return;
        std::uint32_t s = field.extension_degree();
        if (t < 1 || t > s) throw std::invalid_argument("frobenius power out of range");
        if (s % t != 0) throw std::invalid_argument("frobenius power must divide the extension degree");
    }

    /// Multiplicative order given the field degree s and the v-root count l.
    std::size_t order(std::uint32_t s, std::size_t l) const {
        switch (kind) {
            case Kind::identity: return 1;
            case Kind::psi: return l;
            case Kind::theta:
                if (t == 0 || s % t != 0) throw std::invalid_argument("invalid frobenius power");
                return s / t;
        }
        return 1;
    }

    std::string name() const {
        switch (kind) {
            case Kind::identity: return "id";
            case Kind::psi: return "psi";
            case Kind::theta: return "theta_" + std::to_string(t);
        }
        return "";
    }
};

/// Action on plain field elements: psi fixes the base field pointwise, so
/// only identity and theta are meaningful here.
inline FieldElement apply_autom(const Autom& a, const FieldElement& e, std::size_t power = 1) {
    switch (a.kind) {
        case Autom::Kind::identity: return e;
        case Autom::Kind::psi:
            throw std::invalid_argument("psi does not act on plain field elements");
        case Autom::Kind::theta: {
            std::uint32_t s = e.field().extension_degree();
            std::size_t shift = (static_cast<std::size_t>(a.t) * power) % s;
            return shift == 0 ? e : e.frobenius(static_cast<std::uint32_t>(shift));
        }
    }
    return e;
}

}  // namespace skewcc
