#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "skewcc/codes.hpp"

namespace skewcc {

/// Image of a length-n ring vector under a Gray map: a length k*l*n vector
/// over F_q.
using GrayVector = std::vector<FieldElement>;

/// Symbol-major Gray map: every ring symbol expands into its k*l CRT
/// coordinates in place, so entry s*kl + (i*l + j) is coordinate (i,j) of
/// symbol s. F_q-linear and bijective.
GrayVector phi(const Ring& ring, const std::vector<RingElement>& v);

/// Block-major Gray map: coordinates are grouped per CRT component first,
/// so entry (i*l + j)*n + s is coordinate (i,j) of symbol s. A fixed
/// coordinate permutation of phi.
GrayVector phi_pi(const Ring& ring, const std::vector<RingElement>& v);

std::vector<RingElement> phi_inverse(const Ring& ring, const GrayVector& w);
std::vector<RingElement> phi_pi_inverse(const Ring& ring, const GrayVector& w);

std::size_t hamming_weight(const GrayVector& w);

/// Gray weight of a ring vector = Hamming weight of its phi image.
std::size_t gray_weight(const Ring& ring, const std::vector<RingElement>& v);

/// Skew cyclic shift: (c_0, ..., c_{n-1}) -> (s(c_{n-1}), s(c_0), ..., s(c_{n-2})).
template <class Elem>
std::vector<Elem> sigma_shift(const Autom& autom, const std::vector<Elem>& v) {
    if (v.empty()) return v;
    std::vector<Elem> out;
    out.reserve(v.size());
    out.push_back(apply_autom(autom, v.back()));
    for (std::size_t s = 0; s + 1 < v.size(); ++s) out.push_back(apply_autom(autom, v[s]));
    return out;
}

/// Skew constacyclic shift: the wrapped symbol is scaled by alpha,
/// (c_0, ..., c_{n-1}) -> (alpha s(c_{n-1}), s(c_0), ..., s(c_{n-2})).
template <class Elem>
std::vector<Elem> vartheta_shift(const Autom& autom, const Elem& alpha, const std::vector<Elem>& v) {
    std::vector<Elem> out = sigma_shift(autom, v);
    if (!out.empty()) out.front() = alpha * out.front();
    return out;
}

/// Skew quasi-cyclic shift of index m: the vector splits into m blocks of
/// equal length which rotate one position, with the automorphism applied
/// entrywise. m must divide the length.
template <class Elem>
std::vector<Elem> tau_shift(const Autom& autom, std::size_t m, const std::vector<Elem>& v) {
    if (m == 0 || v.size() % m != 0)
        throw std::invalid_argument("block count must divide the vector length");
    std::size_t r = v.size() / m;
    std::vector<Elem> out;
    out.reserve(v.size());
    for (std::size_t b = 0; b < m; ++b) {
        std::size_t src = (b + m - 1) % m;
        for (std::size_t s = 0; s < r; ++s) out.push_back(apply_autom(autom, v[src * r + s]));
    }
    return out;
}

/// Block-rotating skew quasi-twisted shift of index m: like tau, with the
/// wrapped block additionally scaled by alpha.
template <class Elem>
std::vector<Elem> varrho_shift(const Autom& autom, const Elem& alpha, std::size_t m,
                               const std::vector<Elem>& v) {
    std::vector<Elem> out = tau_shift(autom, m, v);
    std::size_t r = v.size() / m;
    for (std::size_t s = 0; s < r; ++s) out[s] = alpha * out[s];
    return out;
}

/// In-block skew quasi-twisted shift of index m: the constacyclic shift
/// applied inside each of the m blocks separately.
template <class Elem>
std::vector<Elem> rho_shift(const Autom& autom, const Elem& alpha, std::size_t m,
                            const std::vector<Elem>& v) {
    if (m == 0 || v.size() % m != 0)
        throw std::invalid_argument("block count must divide the vector length");
    std::size_t r = v.size() / m;
    std::vector<Elem> out;
    out.reserve(v.size());
    for (std::size_t b = 0; b < m; ++b) {
        std::vector<Elem> block(v.begin() + static_cast<std::ptrdiff_t>(b * r),
                                v.begin() + static_cast<std::ptrdiff_t>((b + 1) * r));
        for (Elem& e : vartheta_shift(autom, alpha, block)) out.push_back(std::move(e));
    }
    return out;
}

/// In-block quasi-twisted shift with one scale per block; used on Gray
/// vectors, where block (i,j) wraps with the CRT coordinate alpha_ij.
GrayVector rho_shift_blocks(const Autom& autom, const std::vector<FieldElement>& alphas,
                            const GrayVector& v);

/// Description of a shift operator on F_q vectors. alphas is empty for the
/// unscaled kinds, a single entry for vartheta/varrho/rho with a uniform
/// scale, or one entry per block for rho.
struct ShiftOp {
    enum class Kind { sigma, tau, vartheta, varrho, rho };

    Kind kind = Kind::sigma;
    Autom autom = Autom::id();
    std::size_t m = 1;
    std::vector<FieldElement> alphas;
};

GrayVector apply_shift(const ShiftOp& op, const GrayVector& v);

/// Checks on one vector that the block-major Gray map turns the ring-level
/// constacyclic shift into the in-block quasi-twisted shift of index k*l:
///   phi_pi(vartheta_alpha(v)) = rho(phi_pi(v))
/// with block (i,j) scaled by alpha_ij. Needs a componentwise automorphism.
bool gray_blocked_constacyclic_commutes(const Ring& ring, const Autom& autom,
                                        const RingElement& alpha,
                                        const std::vector<RingElement>& v);

/// Checks on one vector that the symbol-major Gray map turns one ring-level
/// skew cyclic shift into k*l flat skew cyclic shifts:
///   phi(sigma(v)) = sigma^{k*l}(phi(v)).
/// Requires k*l = 1 (mod automorphism order); errors otherwise.
bool gray_flat_cyclic_commutes(const Ring& ring, const Autom& autom,
                               const std::vector<RingElement>& v);

/// Exhaustive minimum Hamming distances of the component codes over F_q,
/// indexed by CRT component c = i*l + j; empty entries mark zero
/// components. Needs a componentwise automorphism; each component
/// enumeration is capped at 2^20 words.
std::vector<std::optional<std::size_t>> component_hamming_distances(const Code& code);

/// Parameters of the Gray image: length k*l*n, F_q dimension, minimum
/// distance. d is empty for the zero code.
struct GrayParams {
    std::size_t n = 0;
    std::size_t k_dim = 0;
    std::optional<std::size_t> d;

    friend bool operator==(const GrayParams&, const GrayParams&) = default;
};

/// Computes the Gray image parameters of a code with a componentwise
/// automorphism. The minimum distance is the least component Hamming
/// distance: component images occupy disjoint Gray coordinates, so a
/// codeword supported on one component realizes the minimum. Every
/// component is enumerated exhaustively (q^dim <= 2^20 per component).
/// Also spot-checks on sampled codewords that the block-major Gray image
/// is closed under the in-block quasi-twisted shift of index k*l, raising
/// verification_error when that fails.
GrayParams gray_image_params(const Code& code, std::mt19937_64& rng, std::size_t samples = 32);

}  // namespace skewcc
