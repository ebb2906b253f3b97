#include "skewcc/gray.hpp"

#include <numeric>

#include "skewcc/errors.hpp"

namespace skewcc {

namespace {

constexpr std::uint64_t kEnumCap = 1u << 20;

void check_symbols(const Ring& ring, const std::vector<RingElement>& v) {
    for (const RingElement& sym : v)
        if (!ring.same_as(sym.ring())) throw std::invalid_argument("symbol from a different ring");
}

}  // namespace

GrayVector phi(const Ring& ring, const std::vector<RingElement>& v) {
    check_symbols(ring, v);
    std::size_t m = ring.comps();
    GrayVector out;
    out.reserve(v.size() * m);
    for (const RingElement& sym : v)
        for (std::size_t c = 0; c < m; ++c) out.push_back(sym.comp(c));
    return out;
}

GrayVector phi_pi(const Ring& ring, const std::vector<RingElement>& v) {
    check_symbols(ring, v);
    std::size_t m = ring.comps();
    GrayVector out;
    out.reserve(v.size() * m);
    for (std::size_t c = 0; c < m; ++c)
        for (const RingElement& sym : v) out.push_back(sym.comp(c));
    return out;
}

std::vector<RingElement> phi_inverse(const Ring& ring, const GrayVector& w) {
    std::size_t m = ring.comps();
    if (w.size() % m != 0) throw std::invalid_argument("gray vector length is not a symbol multiple");
    std::size_t n = w.size() / m;
    std::vector<RingElement> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> crt(m);
        for (std::size_t c = 0; c < m; ++c) crt[c] = w[s * m + c].index();
        out.push_back(ring.element(std::move(crt)));
    }
    return out;
}

std::vector<RingElement> phi_pi_inverse(const Ring& ring, const GrayVector& w) {
    std::size_t m = ring.comps();
    if (w.size() % m != 0) throw std::invalid_argument("gray vector length is not a symbol multiple");
    std::size_t n = w.size() / m;
    std::vector<RingElement> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> crt(m);
        for (std::size_t c = 0; c < m; ++c) crt[c] = w[c * n + s].index();
        out.push_back(ring.element(std::move(crt)));
    }
    return out;
}

std::size_t hamming_weight(const GrayVector& w) {
    std::size_t count = 0;
    for (const FieldElement& e : w)
        if (!e.is_zero()) ++count;
    return count;
}

std::size_t gray_weight(const Ring& ring, const std::vector<RingElement>& v) {
    return hamming_weight(phi(ring, v));
}

GrayVector rho_shift_blocks(const Autom& autom, const std::vector<FieldElement>& alphas,
                            const GrayVector& v) {
    std::size_t m = alphas.size();
    if (m == 0 || v.size() % m != 0)
        throw std::invalid_argument("block count must divide the vector length");
    std::size_t r = v.size() / m;
    GrayVector out;
    out.reserve(v.size());
    for (std::size_t b = 0; b < m; ++b) {
        GrayVector block(v.begin() + static_cast<std::ptrdiff_t>(b * r),
                         v.begin() + static_cast<std::ptrdiff_t>((b + 1) * r));
        for (FieldElement& e : vartheta_shift(autom, alphas[b], block)) out.push_back(std::move(e));
    }
    return out;
}

GrayVector apply_shift(const ShiftOp& op, const GrayVector& v) {
    auto uniform_alpha = [&]() -> const FieldElement& {
        if (op.alphas.size() != 1)
            throw std::invalid_argument("this shift kind takes exactly one scale");
        return op.alphas.front();
    };
    switch (op.kind) {
        case ShiftOp::Kind::sigma:
            if (!op.alphas.empty()) throw std::invalid_argument("cyclic shift takes no scale");
            return sigma_shift(op.autom, v);
        case ShiftOp::Kind::tau:
            if (!op.alphas.empty()) throw std::invalid_argument("quasi-cyclic shift takes no scale");
            return tau_shift(op.autom, op.m, v);
        case ShiftOp::Kind::vartheta:
            return vartheta_shift(op.autom, uniform_alpha(), v);
        case ShiftOp::Kind::varrho:
            return varrho_shift(op.autom, uniform_alpha(), op.m, v);
        case ShiftOp::Kind::rho:
            if (op.alphas.size() == op.m) return rho_shift_blocks(op.autom, op.alphas, v);
            return rho_shift(op.autom, uniform_alpha(), op.m, v);
    }
    throw std::invalid_argument("unknown shift kind");
}

bool gray_blocked_constacyclic_commutes(const Ring& ring, const Autom& autom,
                                        const RingElement& alpha,
                                        const std::vector<RingElement>& v) {
    if (!autom.is_componentwise())
        throw std::invalid_argument("the blocked commuting identity needs a componentwise automorphism");
    autom.validate(ring.field());
    if (!ring.same_as(alpha.ring())) throw std::invalid_argument("alpha from a different ring");
    GrayVector lhs = phi_pi(ring, vartheta_shift(autom, alpha, v));
    std::vector<FieldElement> alphas;
    alphas.reserve(ring.comps());
    for (std::size_t c = 0; c < ring.comps(); ++c) alphas.push_back(alpha.comp(c));
    GrayVector rhs = rho_shift_blocks(autom, alphas, phi_pi(ring, v));
    return lhs == rhs;
}

bool gray_flat_cyclic_commutes(const Ring& ring, const Autom& autom,
                               const std::vector<RingElement>& v) {
    if (!autom.is_componentwise())
        throw std::invalid_argument("the flat commuting identity needs a componentwise automorphism");
    autom.validate(ring.field());
    std::size_t m = ring.comps();
    std::size_t order = autom.order(ring.field().extension_degree(), ring.l());
    if (m % order != 1 % order)
        throw std::domain_error("identity requires k*l = 1 modulo the automorphism order");
    GrayVector lhs = phi(ring, sigma_shift(autom, v));
    GrayVector rhs = phi(ring, v);
    for (std::size_t step = 0; step < m; ++step) rhs = sigma_shift(autom, rhs);
    return lhs == rhs;
}

std::vector<std::optional<std::size_t>> component_hamming_distances(const Code& code) {
    const Autom& autom = code.autom();
    if (!autom.is_componentwise())
        throw std::domain_error("component distances need a componentwise automorphism");
    const Field& F = code.ring().field();
    std::uint64_t q = F.size();

    std::vector<std::optional<std::size_t>> out;
    out.reserve(code.components().size());
    for (const ComponentCode& cc : code.components()) {
        if (cc.dim == 0) {
            out.emplace_back();
            continue;
        }
        std::uint64_t total = 1;
        for (std::size_t d = 0; d < cc.dim; ++d) {
            total *= q;
            if (total > kEnumCap)
                throw enumeration_limit_error("component enumeration exceeds 2^20 words");
        }
        // Message polynomials of degree < dim hit each codeword exactly
        // once: the products m * gen stay below degree n, no reduction.
        std::optional<std::size_t> best;
        std::vector<std::uint32_t> digits(cc.dim, 0);
        for (std::uint64_t w = 1; w < total; ++w) {
            std::size_t pos = 0;
            while (true) {
                if (++digits[pos] < q) break;
                digits[pos++] = 0;
            }
            std::vector<FieldElement> msg;
            msg.reserve(cc.dim);
            for (std::uint32_t ix : digits) msg.push_back(F.element(ix));
            FieldPoly word = FieldPoly(autom, std::move(msg)) * cc.gen;
            std::size_t weight = 0;
            for (const FieldElement& e : word.coeffs())
                if (!e.is_zero()) ++weight;
            if (!best || weight < *best) best = weight;
        }
        out.push_back(best);
    }
    return out;
}

GrayParams gray_image_params(const Code& code, std::mt19937_64& rng, std::size_t samples) {
    const Autom& autom = code.autom();
    if (!autom.is_componentwise())
        throw std::domain_error("gray image parameters need a componentwise automorphism");
    const Ring& ring = code.ring();
    const Field& F = ring.field();
    std::size_t n = code.length();
    std::uint64_t q = F.size();

    GrayParams out;
    out.n = ring.comps() * n;
    std::optional<std::size_t> best;
    std::vector<std::optional<std::size_t>> dists = component_hamming_distances(code);
    for (const ComponentCode& cc : code.components()) out.k_dim += cc.dim;
    for (const std::optional<std::size_t>& d : dists)
        if (d && (!best || *d < *best)) best = *d;
    out.d = best;

    std::vector<FieldElement> alphas;
    alphas.reserve(ring.comps());
    for (std::size_t c = 0; c < ring.comps(); ++c) alphas.push_back(code.alpha().comp(c));
    SkewPoly modulus = x_pow_minus(ring, autom, n, code.alpha());
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(q - 1));
    for (std::size_t trial = 0; trial < samples; ++trial) {
        std::vector<RingElement> msg;
        msg.reserve(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::uint32_t> crt(ring.comps());
            for (std::uint32_t& ix : crt) ix = dist(rng);
            msg.push_back(ring.element(std::move(crt)));
        }
        SkewPoly cw = right_divrem(SkewPoly(autom, std::move(msg)) * code.gen(), modulus).second;
        std::vector<RingElement> word = poly_to_word(ring, n, cw);
        std::vector<RingElement> back =
            phi_pi_inverse(ring, rho_shift_blocks(autom, alphas, phi_pi(ring, word)));
        if (!code.contains(back))
            throw verification_error(
                "blocked gray image is not closed under the in-block quasi-twisted shift");
    }
    return out;
}

}  // namespace skewcc
