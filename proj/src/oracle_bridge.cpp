#include "skewcc/oracle_bridge.hpp"

namespace skewcc {

oracle::Layout oracle_layout(const Code& code) {
    return {code.length(), code.ring().k(), code.ring().l()};
}

oracle::Twist oracle_twist(const Autom& autom) {
    switch (autom.kind) {
        case Autom::Kind::identity: return oracle::Twist::identity;
        case Autom::Kind::psi: return oracle::Twist::rotate;
        case Autom::Kind::theta: return oracle::Twist::frobenius;
    }
    return oracle::Twist::identity;
}

oracle::ShiftSpec oracle_step(const Code& code) {
    oracle::ShiftSpec op;
    op.kind = oracle::ShiftSpec::Kind::constacyclic;
    op.twist = oracle_twist(code.autom());
    op.t = code.autom().t;
    op.blocks = 1;
    op.alpha.reserve(code.ring().comps());
    for (std::uint32_t c : code.alpha().crt()) op.alpha.push_back(static_cast<std::uint16_t>(c));
    return op;
}

namespace {

oracle::Word seed_from(const Code& code, const SkewPoly& f) {
    const Ring& ring = code.ring();
    SkewPoly modulus = x_pow_minus(ring, code.autom(), code.length(), code.alpha());
    SkewPoly reduced = right_divrem(f, modulus).second;
    return word_to_flat(poly_to_word(ring, code.length(), reduced));
}

}  // namespace

oracle::Word oracle_seed(const Code& code) { return seed_from(code, code.gen()); }

oracle::CodewordSet enumerate_code_words(const Code& code) {
    return oracle::enumerate_code(code.ring().field(), oracle_layout(code), oracle_step(code),
                                  {oracle_seed(code)});
}

oracle::CodewordSet enumerate_generated_words(const Code& code, const SkewPoly& f) {
    if (f.autom() != code.autom())
        throw std::invalid_argument("polynomial carries a different automorphism tag");
    return oracle::enumerate_code(code.ring().field(), oracle_layout(code), oracle_step(code),
                                  {seed_from(code, f)});
}

oracle::CodewordSet enumerate_component_words(const Code& code, std::size_t i, std::size_t j) {
    if (!code.autom().is_componentwise())
        throw std::domain_error("components are standalone codes only for componentwise automorphisms");
    const Ring& ring = code.ring();
    std::size_t c = i * ring.l() + j;
    const ComponentCode& cc = code.components().at(c);
    std::size_t n = code.length();

    oracle::ShiftSpec op;
    op.kind = oracle::ShiftSpec::Kind::constacyclic;
    op.twist = oracle_twist(code.autom());
    op.t = code.autom().t;
    op.alpha = {static_cast<std::uint16_t>(cc.alpha.index())};

    FieldPoly reduced =
        right_divrem(cc.gen, x_pow_minus(ring.field(), code.autom(), n, cc.alpha)).second;
    oracle::Word seed(n, 0);
    for (std::size_t d = 0; d < reduced.coeffs().size(); ++d)
        seed[d] = static_cast<std::uint16_t>(reduced.coeffs()[d].index());

    return oracle::enumerate_code(ring.field(), {n, 1, 1}, op, {seed});
}

}  // namespace skewcc
