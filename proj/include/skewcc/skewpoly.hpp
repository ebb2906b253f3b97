#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewcc/autom.hpp"
#include "skewcc/ring.hpp"

namespace skewcc {

/// Skew polynomial with left coefficients and the twisted product
///   (a x^i) * (b x^j) = a sigma^i(b) x^(i+j)
/// for the automorphism sigma named by the tag. Coefficients ascend and are
/// kept trimmed; the zero polynomial has degree -1. Binary operations
/// require equal automorphism tags and never coerce between them.
template <class Elem>
class SkewPolynomial {
  public:
    SkewPolynomial() = default;

    SkewPolynomial(Autom autom, std::vector<Elem> coeffs)
        : autom_(autom), coeffs_(std::move(coeffs)) {
        trim();
    }

    static SkewPolynomial zero(Autom autom) { return SkewPolynomial(autom, {}); }

    const Autom& autom() const { return autom_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Elem& leading() const {
        if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    const Elem& operator[](std::size_t d) const {
        if (d >= coeffs_.size()) throw std::invalid_argument("coefficient index beyond degree");
        return coeffs_[d];
    }

    SkewPolynomial operator+(const SkewPolynomial& o) const {
        check_tag(o);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        std::vector<Elem> out;
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        out.reserve(n);
        Elem z = coeffs_.front().zero_like();
        for (std::size_t d = 0; d < n; ++d) {
            Elem a = d < coeffs_.size() ? coeffs_[d] : z;
            Elem b = d < o.coeffs_.size() ? o.coeffs_[d] : z;
            out.push_back(a + b);
        }
        return SkewPolynomial(autom_, std::move(out));
    }

    SkewPolynomial operator-(const SkewPolynomial& o) const { return *this + (-o); }

    SkewPolynomial operator-() const {
        std::vector<Elem> out;
        out.reserve(coeffs_.size());
        for (const Elem& c : coeffs_) out.push_back(-c);
        return SkewPolynomial(autom_, std::move(out));
    }

    SkewPolynomial operator*(const SkewPolynomial& o) const {
        check_tag(o);
        if (is_zero() || o.is_zero()) return zero(autom_);
        Elem z = coeffs_.front().zero_like();
        std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, z);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                out[i + j] = out[i + j] + coeffs_[i] * apply_autom(autom_, o.coeffs_[j], i);
            }
        }
        return SkewPolynomial(autom_, std::move(out));
    }

    /// Left scalar multiple c * f; generates the same left module when c is
    /// a unit.
    SkewPolynomial left_scaled(const Elem& c) const {
        std::vector<Elem> out;
        out.reserve(coeffs_.size());
        for (const Elem& x : coeffs_) out.push_back(c * x);
        return SkewPolynomial(autom_, std::move(out));
    }

    SkewPolynomial monic() const {
        if (is_zero()) throw std::domain_error("zero polynomial cannot be made monic");
        if (!leading().is_unit())
            throw std::domain_error("leading coefficient is not a unit");
        if (is_monic()) return *this;
        return left_scaled(leading().inverse());
    }

    bool operator==(const SkewPolynomial& o) const {
        if (autom_ != o.autom_) return false;
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (std::size_t d = 0; d < coeffs_.size(); ++d)
            if (!(coeffs_[d] == o.coeffs_[d])) return false;
        return true;
    }
    bool operator!=(const SkewPolynomial& o) const { return !(*this == o); }

  private:
    void check_tag(const SkewPolynomial& o) const {
        if (autom_ != o.autom_)
            throw std::invalid_argument("skew polynomials carry different automorphism tags");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Autom autom_ = Autom::id();
    std::vector<Elem> coeffs_;
};

using SkewPoly = SkewPolynomial<RingElement>;
using FieldPoly = SkewPolynomial<FieldElement>;

/// Right division f = q * g + r with deg r < deg g. Defined whenever the
/// leading coefficient of g is a unit; otherwise the division is undefined
/// and std::domain_error is raised.
template <class Elem>
std::pair<SkewPolynomial<Elem>, SkewPolynomial<Elem>> right_divrem(const SkewPolynomial<Elem>& f,
                                                                   const SkewPolynomial<Elem>& g) {
    if (f.autom() != g.autom())
        throw std::invalid_argument("skew polynomials carry different automorphism tags");
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!g.leading().is_unit())
        throw std::domain_error("right division needs a unit leading coefficient");
    const Autom& autom = f.autom();
    if (f.degree() < g.degree()) return {SkewPolynomial<Elem>::zero(autom), f};

    std::vector<Elem> rem = f.coeffs();
    Elem z = rem.front().zero_like();
    std::vector<Elem> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, z);
    const std::vector<Elem>& gc = g.coeffs();

    for (std::size_t top = rem.size(); top-- >= gc.size();) {
        if (rem[top].is_zero()) continue;
        std::size_t d = top - (gc.size() - 1);
        // c x^d * g has leading term c sigma^d(lead g) x^top.
        Elem c = rem[top] * apply_autom(autom, g.leading(), d).inverse();
        quot[d] = quot[d] + c;
        for (std::size_t i = 0; i < gc.size(); ++i)
            rem[d + i] = rem[d + i] - c * apply_autom(autom, gc[i], d);
    }
    rem.resize(gc.size() - 1, z);
    return {SkewPolynomial<Elem>(autom, std::move(quot)), SkewPolynomial<Elem>(autom, std::move(rem))};
}

/// True when g right-divides f, i.e. f = q * g exactly.
template <class Elem>
bool is_right_divisor(const SkewPolynomial<Elem>& g, const SkewPolynomial<Elem>& f) {
    return right_divrem(f, g).second.is_zero();
}

inline SkewPoly x_pow_minus(const Ring& ring, Autom autom, std::size_t n, const RingElement& alpha) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    std::vector<RingElement> coeffs(n + 1, ring.zero());
    coeffs[0] = -alpha;
    coeffs[n] = ring.one();
    return SkewPoly(autom, std::move(coeffs));
}

inline FieldPoly x_pow_minus(const Field& field, Autom autom, std::size_t n, const FieldElement& alpha) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    std::vector<FieldElement> coeffs(n + 1, field.zero());
    coeffs[0] = -alpha;
    coeffs[n] = field.one();
    return FieldPoly(autom, std::move(coeffs));
}

/// Center membership for the psi-twisted ring: the center is spanned by the
/// powers of x^l with coefficients from F_q * 1.
bool is_central(const SkewPoly& f);

/// Substitutes x -> alpha x. Requires alpha to be a unit with alpha^2 = 1
/// fixed by the automorphism; then x^d picks up the factor alpha^d and the
/// map sends one constacyclic module onto another.
template <class Elem>
SkewPolynomial<Elem> eval_twist(const SkewPolynomial<Elem>& f, const Elem& alpha) {
    if (!alpha.is_unit()) throw std::domain_error("twist scalar must be a unit");
    if (!(alpha * alpha).is_one()) throw std::domain_error("twist scalar must square to 1");
    if (!(apply_autom(f.autom(), alpha) == alpha))
        throw std::domain_error("twist scalar must be fixed by the automorphism");
    if (f.is_zero()) return f;
    std::vector<Elem> out = f.coeffs();
    Elem factor = alpha.one_like();
    for (std::size_t d = 0; d < out.size(); ++d) {
        if (d > 0) factor = factor * alpha;
        out[d] = out[d] * factor;
    }
    return SkewPolynomial<Elem>(f.autom(), std::move(out));
}

template <class Elem>
std::string poly_to_string(const SkewPolynomial<Elem>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t d = f.coeffs().size(); d-- > 0;) {
        const Elem& c = f.coeffs()[d];
        if (c.is_zero()) continue;
        std::string coeff = to_pretty(c);
        bool composite = coeff.find('+') != std::string::npos;
        std::string term;
        if (d == 0) {
            term = composite ? "(" + coeff + ")" : coeff;
        } else {
            if (!c.is_one()) term = (composite ? "(" + coeff + ")" : coeff) + "*";
            term += var;
            if (d > 1) term += "^" + std::to_string(d);
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

}  // namespace skewcc
