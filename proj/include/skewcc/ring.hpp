#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewcc/autom.hpp"
#include "skewcc/gf.hpp"

namespace skewcc {

/// Specification of the ring F_q[u,v] / <f(u), g(v), uv - vu> where f and g
/// split over F_q with the listed distinct roots. Root entries are field
/// element indices; f_roots has length k >= 1 and g_roots length l >= 1.
struct RingSpec {
    FieldSpec field;
    std::vector<std::uint32_t> f_roots;
    std::vector<std::uint32_t> g_roots;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Bivariate coefficient table over F_q: table[a][b] is the coefficient of
/// u^a v^b as a field element index. Rows must have uniform length.
using UVTable = std::vector<std::vector<std::uint32_t>>;

class RingElement;

/// Immutable shared handle to the ring. Elements are stored in CRT
/// coordinates: the k*l vector of images under evaluation at the root pairs
/// (alpha_i, beta_j), laid out with the f-root index outer and the g-root
/// index inner. All arithmetic is componentwise in these coordinates.
///
/// The handle precomputes the Lagrange idempotents eps_i(u), gam_j(v) and
/// their products eta_ij = eps_i * gam_j, which form a complete orthogonal
/// family summing to 1.
class Ring {
  public:
    Ring() = default;
    explicit Ring(RingSpec spec);

    bool valid() const { return d_ != nullptr; }
    const Field& field() const;
    const RingSpec& spec() const;
    std::size_t k() const;
    std::size_t l() const;
    std::size_t comps() const;  // k * l
    FieldElement f_root(std::size_t i) const;
    FieldElement g_root(std::size_t j) const;
    bool same_as(const Ring& other) const;

    /// Idempotent polynomials in u (resp. v), ascending F_q coefficients.
    const std::vector<std::uint32_t>& eps_poly(std::size_t i) const;
    const std::vector<std::uint32_t>& gam_poly(std::size_t j) const;
    /// eta_ij as a bivariate table of size k x l.
    UVTable eta_table(std::size_t i, std::size_t j) const;

    RingElement element(std::vector<std::uint32_t> crt) const;
    RingElement zero() const;
    RingElement one() const;
    RingElement constant(const FieldElement& c) const;
    RingElement eta(std::size_t i, std::size_t j) const;

    /// Evaluation of a bivariate polynomial at all root pairs; the table may
    /// have any degrees (reduction happens implicitly through evaluation).
    RingElement from_uv(const UVTable& poly) const;
    /// Canonical reduced bivariate representative (degrees < k and < l).
    UVTable to_uv(const RingElement& e) const;

    /// The 2^(k*l) unit candidates for self-dual codes: every choice of
    /// +1/-1 per CRT coordinate; collapses to {1} in characteristic 2.
    std::vector<RingElement> selfdual_unit_candidates() const;

  private:
    struct Data;
    std::shared_ptr<const Data> d_;
    friend class RingElement;
};

/// Value-semantic ring element in CRT coordinates. Mixed-ring operands
/// throw std::invalid_argument.
class RingElement {
  public:
    RingElement() = default;
    RingElement(Ring ring, std::vector<std::uint32_t> crt);

    const Ring& ring() const { return r_; }
    const std::vector<std::uint32_t>& crt() const { return crt_; }
    FieldElement at(std::size_t i, std::size_t j) const;
    FieldElement comp(std::size_t c) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    /// True when the element lies in F_q * 1 (all CRT coordinates equal).
    bool is_constant() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const FieldElement& scalar) const;

    RingElement inverse() const;

    /// psi: within every f-root block, CRT coordinate j takes its value
    /// from coordinate j-1 (mod l), i.e. a cyclic rotation of the g-root
    /// index. Power rotates further.
    RingElement psi(std::size_t power = 1) const;
    /// Componentwise Frobenius x -> x^(p^t); t must divide s.
    RingElement theta(std::uint32_t t, std::size_t power = 1) const;

    RingElement zero_like() const { return r_.zero(); }
    RingElement one_like() const { return r_.one(); }

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

  private:
    Ring r_;
    std::vector<std::uint32_t> crt_;
};

RingElement apply_autom(const Autom& a, const RingElement& e, std::size_t power = 1);

/// Renders the reduced u,v-polynomial form, e.g. "1+3*u^2+2*u^2*v".
std::string to_pretty(const RingElement& e);

}  // namespace skewcc
