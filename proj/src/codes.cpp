#include "skewcc/codes.hpp"

#include <algorithm>
#include <numeric>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

std::string comp_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

struct ExtGcd {
    FieldPoly g, a, b;  // g = a * x + b * y, g monic
};

// Commutative extended Euclid; inputs must carry the identity tag.
ExtGcd ext_gcd(const FieldPoly& x, const FieldPoly& y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    const Field& F = (x.is_zero() ? y : x).coeffs().front().field();
    Autom id = Autom::id();
    FieldPoly r0 = x, r1 = y;
    FieldPoly s0(id, {F.one()}), s1 = FieldPoly::zero(id);
    FieldPoly t0 = FieldPoly::zero(id), t1(id, {F.one()});
    while (!r1.is_zero()) {
        auto [q, r] = right_divrem(r0, r1);
        FieldPoly s2 = s0 - q * s1;
        FieldPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    FieldElement c = r0.leading().inverse();
    return {r0.left_scaled(c), s0.left_scaled(c), t0.left_scaled(c)};
}

}  // namespace

std::string to_string(const ShiftClass& c) {
    switch (c.kind) {
        case ShiftClass::Kind::cyclic: return "cyclic";
        case ShiftClass::Kind::constacyclic: return "constacyclic";
        case ShiftClass::Kind::quasi_cyclic: return "quasi-cyclic of index " + std::to_string(c.index);
        case ShiftClass::Kind::quasi_twisted:
            return "quasi-twisted of index " + std::to_string(c.index);
    }
    return "";
}

Code Code::from_components(Ring ring, std::size_t n, Autom autom,
                           std::vector<FieldElement> alphas, std::vector<FieldPoly> gens) {
    if (!ring.valid()) throw std::invalid_argument("ring handle is empty");
    if (n == 0) throw std::invalid_argument("length must be positive");
    const Field& F = ring.field();
    autom.validate(F);
    if (!autom.is_componentwise())
        throw std::invalid_argument("component construction needs a componentwise automorphism");
    std::size_t m = ring.comps();
    std::size_t l = ring.l();
    if (alphas.size() != m || gens.size() != m)
        throw std::invalid_argument("component table must have one entry per CRT coordinate");

    Code code;
    std::vector<std::uint32_t> alpha_crt(m);
    int max_deg = 0;
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t i = c / l, j = c % l;
        if (!F.same_as(alphas[c].field()))
            throw std::invalid_argument("component " + comp_name(i, j) + ": alpha from a different field");
        if (!alphas[c].is_unit())
            throw std::invalid_argument("component " + comp_name(i, j) + ": alpha must be nonzero");
        if (!(apply_autom(autom, alphas[c]) == alphas[c]))
            throw std::invalid_argument("component " + comp_name(i, j) +
                                        ": alpha is not fixed by the automorphism");
        if (gens[c].autom() != autom)
            throw std::invalid_argument("component " + comp_name(i, j) +
                                        ": generator carries a different automorphism tag");
        if (gens[c].is_zero() || !gens[c].is_monic())
            throw std::invalid_argument("component " + comp_name(i, j) + ": generator must be monic");
        if (gens[c].degree() > static_cast<int>(n))
            throw std::invalid_argument("component " + comp_name(i, j) +
                                        ": generator degree exceeds the length");
        if (!F.same_as(gens[c].coeffs().front().field()))
            throw std::invalid_argument("component " + comp_name(i, j) +
                                        ": generator over a different field");
        if (!is_right_divisor(gens[c], x_pow_minus(F, autom, n, alphas[c])))
            throw std::domain_error("component " + comp_name(i, j) +
                                    " does not right-divide x^n - alpha");
        alpha_crt[c] = alphas[c].index();
        max_deg = std::max(max_deg, gens[c].degree());
        code.comps_.push_back(
            {i, j, alphas[c], gens[c], n - static_cast<std::size_t>(gens[c].degree())});
    }

    std::vector<RingElement> gcoeffs;
    gcoeffs.reserve(static_cast<std::size_t>(max_deg) + 1);
    for (int d = 0; d <= max_deg; ++d) {
        std::vector<std::uint32_t> crt(m, 0);
        for (std::size_t c = 0; c < m; ++c)
            if (d <= gens[c].degree()) crt[c] = gens[c].coeffs()[static_cast<std::size_t>(d)].index();
        gcoeffs.push_back(ring.element(std::move(crt)));
    }

    code.ring_ = ring;
    code.n_ = n;
    code.autom_ = autom;
    code.alpha_ = ring.element(std::move(alpha_crt));
    code.gen_ = SkewPoly(autom, std::move(gcoeffs));
    return code;
}

Code Code::from_generator(Ring ring, std::size_t n, Autom autom, RingElement alpha, SkewPoly gen) {
    if (!ring.valid()) throw std::invalid_argument("ring handle is empty");
    if (n == 0) throw std::invalid_argument("length must be positive");
    const Field& F = ring.field();
    autom.validate(F);
    if (!ring.same_as(alpha.ring())) throw std::invalid_argument("alpha from a different ring");
    if (!alpha.is_unit()) throw std::invalid_argument("alpha must be a unit");
    if (!(apply_autom(autom, alpha) == alpha))
        throw std::invalid_argument("alpha is not fixed by the automorphism");
    if (gen.autom() != autom)
        throw std::invalid_argument("generator carries a different automorphism tag");
    if (gen.is_zero()) throw std::invalid_argument("generator must be nonzero");
    if (!ring.same_as(gen.coeffs().front().ring()))
        throw std::invalid_argument("generator over a different ring");
    if (gen.degree() > static_cast<int>(n))
        throw std::invalid_argument("generator degree exceeds the length");

    bool unit_lead = gen.leading().is_unit();
    if (unit_lead) {
        if (!is_right_divisor(gen, x_pow_minus(ring, autom, n, alpha)))
            throw std::domain_error("generator does not right-divide x^n - alpha");
    } else if (!autom.is_componentwise()) {
        throw std::domain_error(
            "a psi-twisted generator needs a unit leading coefficient for division");
    }

    Code code;
    std::size_t m = ring.comps();
    std::size_t l = ring.l();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t i = c / l, j = c % l;
        std::vector<FieldElement> slice;
        slice.reserve(gen.coeffs().size());
        for (const RingElement& coeff : gen.coeffs()) slice.push_back(coeff.comp(c));
        FieldPoly comp_gen(autom, std::move(slice));
        FieldElement a_c = alpha.comp(c);
        if (autom.is_componentwise()) {
            if (comp_gen.is_zero()) {
                comp_gen = x_pow_minus(F, autom, n, a_c);
            } else {
                comp_gen = comp_gen.monic();
                if (!is_right_divisor(comp_gen, x_pow_minus(F, autom, n, a_c)))
                    throw std::domain_error("component " + comp_name(i, j) +
                                            " does not right-divide x^n - alpha");
            }
        }
        code.comps_.push_back(
            {i, j, a_c, comp_gen, n - static_cast<std::size_t>(comp_gen.degree())});
    }

    code.ring_ = std::move(ring);
    code.n_ = n;
    code.autom_ = autom;
    code.alpha_ = std::move(alpha);
    code.gen_ = std::move(gen);
    return code;
}

std::pair<std::uint64_t, std::int64_t> Code::size() const {
    std::int64_t e = static_cast<std::int64_t>(ring_.comps()) * static_cast<std::int64_t>(n_);
    for (const ComponentCode& cc : comps_) e -= cc.gen.degree();
    return {ring_.field().size(), e};
}

ShiftClass Code::classify() const {
    std::size_t order = autom_.order(ring_.field().extension_degree(), ring_.l());
    std::size_t r = std::gcd(n_, order);
    ShiftClass out;
    out.index = n_ / r;
    bool one = alpha_.is_one();
    if (r == 1)
        out.kind = one ? ShiftClass::Kind::cyclic : ShiftClass::Kind::constacyclic;
    else
        out.kind = one ? ShiftClass::Kind::quasi_cyclic : ShiftClass::Kind::quasi_twisted;
    return out;
}

Code Code::dual() const {
    if (!autom_.is_componentwise())
        throw std::domain_error(
            "dual of a psi-twisted code is available only through the enumeration oracle");
    std::vector<FieldElement> alphas;
    std::vector<FieldPoly> gens;
    alphas.reserve(comps_.size());
    gens.reserve(comps_.size());
    for (const ComponentCode& cc : comps_) {
        alphas.push_back(cc.alpha.inverse());
        gens.push_back(dual_component_generator(cc.gen, n_, cc.alpha));
    }
    return from_components(ring_, n_, autom_, std::move(alphas), std::move(gens));
}

SkewPoly Code::idempotent_generator() const {
    if (!autom_.is_componentwise())
        throw std::domain_error(
            "idempotent generators of psi-twisted codes are available only through the oracle");
    const Field& F = ring_.field();
    std::size_t order = autom_.order(F.extension_degree(), ring_.l());
    if (std::gcd(n_, static_cast<std::size_t>(F.size())) != 1)
        throw std::domain_error("idempotent generator requires gcd(n, q) = 1");
    if (std::gcd(n_, order) != 1)
        throw std::domain_error("idempotent generator requires gcd(n, automorphism order) = 1");

    Autom id = Autom::id();
    std::size_t m = ring_.comps();
    std::vector<FieldPoly> es(m, FieldPoly::zero(id));
    for (const ComponentCode& cc : comps_) {
        std::size_t c = cc.i * ring_.l() + cc.j;
        // The component code is also plain constacyclic, with the same
        // monic minimal-degree generator, so the idempotent comes from the
        // commutative Bezout identity a*g + b*h = 1.
        FieldPoly g(id, cc.gen.coeffs());
        FieldPoly X = x_pow_minus(F, id, n_, cc.alpha);
        auto [h, rem] = right_divrem(X, g);
        if (!rem.is_zero())
            throw std::domain_error("component " + comp_name(cc.i, cc.j) +
                                    " is not commutatively constacyclic");
        if (g.degree() == 0) { es[c] = FieldPoly(id, {F.one()}); continue; }
        if (h.degree() == 0) { continue; }  // zero component: e = 0
        ExtGcd bez = ext_gcd(g, h);
        if (bez.g.degree() != 0)
            throw std::domain_error("component " + comp_name(cc.i, cc.j) +
                                    ": x^n - alpha is not separable");
        es[c] = right_divrem(bez.a * g, X).second;
    }

    std::vector<RingElement> coeffs;
    coeffs.reserve(n_);
    for (std::size_t d = 0; d < n_; ++d) {
        std::vector<std::uint32_t> crt(m, 0);
        for (std::size_t c = 0; c < m; ++c)
            if (static_cast<int>(d) <= es[c].degree())
                crt[c] = es[c].coeffs()[d].index();
        coeffs.push_back(ring_.element(std::move(crt)));
    }
    SkewPoly e(autom_, std::move(coeffs));

    SkewPoly reduced = right_divrem(e * e, x_pow_minus(ring_, autom_, n_, alpha_)).second;
    if (!(reduced == e))
        throw verification_error("idempotent self-check failed under the skew product");
    return e;
}

bool Code::is_selfdual() const {
    if (!autom_.is_componentwise())
        throw std::domain_error(
            "self-duality of psi-twisted codes is available only through the enumeration oracle");
    for (const ComponentCode& cc : comps_)
        if (!(cc.alpha * cc.alpha).is_one()) return false;  // necessary sign condition
    Code d = dual();
    for (std::size_t c = 0; c < comps_.size(); ++c)
        if (!(d.comps_[c].gen == comps_[c].gen)) return false;
    return true;
}

bool Code::contains(const std::vector<RingElement>& word) const {
    if (word.size() != n_) throw std::invalid_argument("word length does not match the code");
    for (const RingElement& sym : word)
        if (!ring_.same_as(sym.ring())) throw std::invalid_argument("word symbol from a different ring");

    if (autom_.is_componentwise()) {
        for (const ComponentCode& cc : comps_) {
            std::size_t c = cc.i * ring_.l() + cc.j;
            std::vector<FieldElement> wc;
            wc.reserve(n_);
            for (const RingElement& sym : word) wc.push_back(sym.comp(c));
            FieldPoly w(autom_, std::move(wc));
            if (w.is_zero()) continue;
            if (!right_divrem(w, cc.gen).second.is_zero()) return false;
        }
        return true;
    }
    SkewPoly w = word_to_poly(autom_, word);
    if (w.is_zero()) return true;
    return right_divrem(w, gen_).second.is_zero();
}

FieldPoly dual_component_generator(const FieldPoly& gen, std::size_t n, const FieldElement& alpha) {
    const Autom& autom = gen.autom();
    if (autom.is_psi()) throw std::invalid_argument("component polynomials never carry psi");
    const Field& F = alpha.field();
    autom.validate(F);
    if (!alpha.is_unit()) throw std::invalid_argument("alpha must be a unit");
    std::size_t order = autom.order(F.extension_degree(), 1);
    if (n % order != 0)
        throw std::domain_error("dual formula requires the automorphism order to divide n");
    if (gen.is_zero() || !gen.is_monic())
        throw std::invalid_argument("component generator must be monic");

    auto [h, rem] = right_divrem(x_pow_minus(F, autom, n, alpha), gen);
    if (!rem.is_zero()) throw std::domain_error("generator does not right-divide x^n - alpha");
    std::size_t dr = static_cast<std::size_t>(h.degree());
    std::vector<FieldElement> out;
    out.reserve(dr + 1);
    for (std::size_t d = 0; d <= dr; ++d)
        out.push_back(apply_autom(autom, h.coeffs()[dr - d], d));
    return FieldPoly(autom, std::move(out)).monic();
}

namespace {

template <class Elem, class WordToPolyFn>
SkewPolynomial<Elem> minimal_generator_impl(Autom autom, std::size_t n,
                                            const SkewPolynomial<Elem>& modulus,
                                            std::size_t symbol_width,
                                            const std::vector<std::vector<std::uint16_t>>& words,
                                            WordToPolyFn to_poly) {
    int best = -1;
    for (const auto& w : words) {
        if (w.size() != n * symbol_width)
            throw std::invalid_argument("codeword has the wrong flattened length");
        for (std::size_t s = n; s-- > 0;) {
            bool nonzero = false;
            for (std::size_t c = 0; c < symbol_width; ++c)
                if (w[s * symbol_width + c] != 0) nonzero = true;
            if (nonzero) {
                if (best < 0 || static_cast<int>(s) < best) best = static_cast<int>(s);
                break;
            }
        }
    }
    if (best < 0) throw std::domain_error("the zero code has no minimal-degree generator");

    SkewPolynomial<Elem> found = SkewPolynomial<Elem>::zero(autom);
    for (const auto& w : words) {
        SkewPolynomial<Elem> p = to_poly(w);
        if (p.degree() != best) continue;
        if (!p.leading().is_unit()) continue;
        found = p.monic();
        break;
    }
    if (found.is_zero())
        throw std::domain_error("no minimal-degree codeword has a unit leading coefficient");
    if (!is_right_divisor(found, modulus))
        throw std::domain_error("minimal-degree codeword does not right-divide x^n - alpha");
    for (const auto& w : words) {
        SkewPolynomial<Elem> p = to_poly(w);
        if (p.is_zero()) continue;
        if (!right_divrem(p, found).second.is_zero())
            throw std::domain_error("set is not generated by its minimal-degree codeword");
    }
    return found;
}

}  // namespace

SkewPoly minimal_degree_generator(const Ring& ring, Autom autom, std::size_t n,
                                  const RingElement& alpha,
                                  const std::vector<std::vector<std::uint16_t>>& words) {
    autom.validate(ring.field());
    if (!ring.same_as(alpha.ring())) throw std::invalid_argument("alpha from a different ring");
    if (!alpha.is_unit()) throw std::invalid_argument("alpha must be a unit");
    SkewPoly modulus = x_pow_minus(ring, autom, n, alpha);
    auto to_poly = [&](const std::vector<std::uint16_t>& flat) {
        return word_to_poly(autom, flat_to_word(ring, n, flat));
    };
    return minimal_generator_impl<RingElement>(autom, n, modulus, ring.comps(), words, to_poly);
}

FieldPoly minimal_degree_generator(const Field& field, Autom autom, std::size_t n,
                                   const FieldElement& alpha,
                                   const std::vector<std::vector<std::uint16_t>>& words) {
    autom.validate(field);
    if (!field.same_as(alpha.field())) throw std::invalid_argument("alpha from a different field");
    if (!alpha.is_unit()) throw std::invalid_argument("alpha must be a unit");
    FieldPoly modulus = x_pow_minus(field, autom, n, alpha);
    auto to_poly = [&](const std::vector<std::uint16_t>& flat) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(flat.size());
        for (std::uint16_t ix : flat) coeffs.push_back(field.element(ix));
        return FieldPoly(autom, std::move(coeffs));
    };
    return minimal_generator_impl<FieldElement>(autom, n, modulus, 1, words, to_poly);
}

SkewPoly word_to_poly(Autom autom, const std::vector<RingElement>& word) {
    return SkewPoly(autom, word);
}

std::vector<RingElement> poly_to_word(const Ring& ring, std::size_t n, const SkewPoly& f) {
    if (f.degree() >= static_cast<int>(n))
        throw std::invalid_argument("polynomial degree exceeds the word length");
    std::vector<RingElement> out(n, ring.zero());
    for (std::size_t d = 0; d < f.coeffs().size(); ++d) out[d] = f.coeffs()[d];
    return out;
}

std::vector<RingElement> flat_to_word(const Ring& ring, std::size_t n,
                                      const std::vector<std::uint16_t>& flat) {
    std::size_t m = ring.comps();
    if (flat.size() != n * m) throw std::invalid_argument("flattened word has the wrong length");
    std::vector<RingElement> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> crt(flat.begin() + static_cast<std::ptrdiff_t>(s * m),
                                       flat.begin() + static_cast<std::ptrdiff_t>((s + 1) * m));
        out.push_back(ring.element(std::move(crt)));
    }
    return out;
}

std::vector<std::uint16_t> word_to_flat(const std::vector<RingElement>& word) {
    std::vector<std::uint16_t> out;
    for (const RingElement& sym : word)
        for (std::uint32_t c : sym.crt()) out.push_back(static_cast<std::uint16_t>(c));
    return out;
}

}  // namespace skewcc
