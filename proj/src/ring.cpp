#include "skewcc/ring.hpp"

#include <iostream>
#include <utility>

namespace skewcc {

namespace {

using FqPoly = std::vector<std::uint32_t>;  // ascending element indices

FqPoly fq_mul(const Field& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add_ix(c[i + j], F.mul_ix(a[i], b[j]));
    return c;
}

FqPoly fq_scale(const Field& F, const FqPoly& a, std::uint32_t c) {
    FqPoly out = a;
    for (auto& x : out) x = F.mul_ix(x, c);
    return out;
}

std::uint32_t fq_eval(const Field& F, const FqPoly& a, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = F.add_ix(F.mul_ix(acc, x), a[i]);
    return acc;
}

// Lagrange basis polynomials for the given distinct roots: basis[i]
// evaluates to 1 at roots[i] and 0 at the others. For a single root the
// basis is the constant 1.
std::vector<FqPoly> lagrange_basis(const Field& F, const std::vector<std::uint32_t>& roots) {
    std::size_t n = roots.size();
    std::vector<FqPoly> basis(n);
    if (n == 1) {
        basis[0] = {1};
        return basis;
    }
    for (std::size_t i = 0; i < n; ++i) {
        FqPoly num = {1};
        std::uint32_t denom = 1;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            num = fq_mul(F, num, {F.neg_ix(roots[r]), 1});
            denom = F.mul_ix(denom, F.sub_ix(roots[i], roots[r]));
        }
        basis[i] = fq_scale(F, num, F.inv_ix(denom));
    }
    return basis;
}

}  // namespace

struct Ring::Data {
    RingSpec spec;
    Field field;
    std::size_t k = 0, l = 0;
    std::vector<FqPoly> eps;  // k polynomials in u
    std::vector<FqPoly> gam;  // l polynomials in v
};

Ring::Ring(RingSpec spec) {
    Field field(spec.field);
    spec.field = field.spec();  // pin the searched modulus
    if (spec.f_roots.empty() || spec.g_roots.empty())
        throw std::invalid_argument("f_roots and g_roots must be nonempty");
    for (auto lists : {&spec.f_roots, &spec.g_roots}) {
        for (std::size_t a = 0; a < lists->size(); ++a) {
            if ((*lists)[a] >= field.size()) throw std::invalid_argument("root index out of range");
            for (std::size_t b = a + 1; b < lists->size(); ++b)
                if ((*lists)[a] == (*lists)[b])
                    throw std::invalid_argument("roots must be pairwise distinct");
        }
    }
    if (spec.f_roots.size() == 1 && spec.g_roots.size() == 1)
        std::cerr << "warning: ring collapses to the base field (k = l = 1)\n";

    auto d = std::make_shared<Data>();
    d->spec = std::move(spec);
    d->field = field;
    d->k = d->spec.f_roots.size();
    d->l = d->spec.g_roots.size();
    d->eps = lagrange_basis(field, d->spec.f_roots);
    d->gam = lagrange_basis(field, d->spec.g_roots);
    d_ = std::move(d);
}

namespace {
template <class Data>
const Data* need(const std::shared_ptr<const Data>& d) {
    if (!d) throw std::invalid_argument("ring handle is empty");
    return d.get();
}
}  // namespace

const Field& Ring::field() const { return need(d_)->field; }
const RingSpec& Ring::spec() const { return need(d_)->spec; }
std::size_t Ring::k() const { return need(d_)->k; }
std::size_t Ring::l() const { return need(d_)->l; }
std::size_t Ring::comps() const { return need(d_)->k * need(d_)->l; }

FieldElement Ring::f_root(std::size_t i) const {
    const Data* d = need(d_);
    if (i >= d->k) throw std::invalid_argument("f-root index out of range");
    return d->field.element(d->spec.f_roots[i]);
}

FieldElement Ring::g_root(std::size_t j) const {
    const Data* d = need(d_);
    if (j >= d->l) throw std::invalid_argument("g-root index out of range");
    return d->field.element(d->spec.g_roots[j]);
}

bool Ring::same_as(const Ring& other) const {
    if (d_ == other.d_) return d_ != nullptr;
    if (!d_ || !other.d_) return false;
    return d_->spec == other.d_->spec;
}

const std::vector<std::uint32_t>& Ring::eps_poly(std::size_t i) const {
    const Data* d = need(d_);
    if (i >= d->k) throw std::invalid_argument("f-root index out of range");
    return d->eps[i];
}

const std::vector<std::uint32_t>& Ring::gam_poly(std::size_t j) const {
    const Data* d = need(d_);
    if (j >= d->l) throw std::invalid_argument("g-root index out of range");
    return d->gam[j];
}

UVTable Ring::eta_table(std::size_t i, std::size_t j) const {
    const Data* d = need(d_);
    const FqPoly& e = eps_poly(i);
    const FqPoly& g = gam_poly(j);
    UVTable t(d->k, std::vector<std::uint32_t>(d->l, 0));
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            t[a][b] = d->field.mul_ix(e[a], g[b]);
    return t;
}

RingElement Ring::element(std::vector<std::uint32_t> crt) const {
    return RingElement(*this, std::move(crt));
}

RingElement Ring::zero() const { return element(std::vector<std::uint32_t>(comps(), 0)); }
RingElement Ring::one() const { return element(std::vector<std::uint32_t>(comps(), 1)); }

RingElement Ring::constant(const FieldElement& c) const {
    if (!field().same_as(c.field())) throw std::invalid_argument("constant from a different field");
    return element(std::vector<std::uint32_t>(comps(), c.index()));
}

RingElement Ring::eta(std::size_t i, std::size_t j) const {
    const Data* d = need(d_);
    if (i >= d->k || j >= d->l) throw std::invalid_argument("idempotent index out of range");
    std::vector<std::uint32_t> crt(comps(), 0);
    crt[i * d->l + j] = 1;
    return element(std::move(crt));
}

RingElement Ring::from_uv(const UVTable& poly) const {
    const Data* d = need(d_);
    for (const auto& row : poly)
        if (row.size() != (poly.empty() ? 0 : poly[0].size()))
            throw std::invalid_argument("ragged bivariate table");
    std::vector<std::uint32_t> crt(comps(), 0);
    for (std::size_t i = 0; i < d->k; ++i) {
        std::uint32_t u = d->spec.f_roots[i];
        for (std::size_t j = 0; j < d->l; ++j) {
            std::uint32_t v = d->spec.g_roots[j];
            // Evaluate rows in v first, then the row results in u.
            std::uint32_t acc = 0;
            for (std::size_t a = poly.size(); a-- > 0;) {
                std::uint32_t row = fq_eval(d->field, poly[a], v);
                acc = d->field.add_ix(d->field.mul_ix(acc, u), row);
            }
            crt[i * d->l + j] = acc;
        }
    }
    return element(std::move(crt));
}

UVTable Ring::to_uv(const RingElement& e) const {
    const Data* d = need(d_);
    if (!same_as(e.ring())) throw std::invalid_argument("element from a different ring");
    UVTable out(d->k, std::vector<std::uint32_t>(d->l, 0));
    for (std::size_t i = 0; i < d->k; ++i)
        for (std::size_t j = 0; j < d->l; ++j) {
            std::uint32_t a_ij = e.crt()[i * d->l + j];
            if (a_ij == 0) continue;
            const FqPoly& ep = d->eps[i];
            const FqPoly& gp = d->gam[j];
            for (std::size_t a = 0; a < ep.size(); ++a)
                for (std::size_t b = 0; b < gp.size(); ++b) {
                    std::uint32_t term = d->field.mul_ix(d->field.mul_ix(ep[a], gp[b]), a_ij);
                    out[a][b] = d->field.add_ix(out[a][b], term);
                }
        }
    return out;
}

std::vector<RingElement> Ring::selfdual_unit_candidates() const {
    const Data* d = need(d_);
    std::size_t m = comps();
    if (d->field.characteristic() == 2) return {one()};
    if (m > 20) throw std::invalid_argument("too many CRT components to enumerate sign patterns");
    std::uint32_t minus_one = d->field.neg_ix(1);
    std::vector<RingElement> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint32_t> crt(m, 1);
        for (std::size_t c = 0; c < m; ++c)
            if (mask & (std::uint64_t{1} << c)) crt[c] = minus_one;
        out.push_back(element(std::move(crt)));
    }
    return out;
}

RingElement::RingElement(Ring ring, std::vector<std::uint32_t> crt)
    : r_(std::move(ring)), crt_(std::move(crt)) {
    if (crt_.size() != r_.comps()) throw std::invalid_argument("CRT vector has wrong length");
    for (std::uint32_t c : crt_)
        if (c >= r_.field().size()) throw std::invalid_argument("CRT entry out of range");
}

FieldElement RingElement::at(std::size_t i, std::size_t j) const {
    if (i >= r_.k() || j >= r_.l()) throw std::invalid_argument("CRT index out of range");
    return r_.field().element(crt_[i * r_.l() + j]);
}

FieldElement RingElement::comp(std::size_t c) const {
    if (c >= crt_.size()) throw std::invalid_argument("CRT index out of range");
    return r_.field().element(crt_[c]);
}

bool RingElement::is_zero() const {
    for (std::uint32_t c : crt_)
        if (c != 0) return false;
    return true;
}

bool RingElement::is_one() const {
    for (std::uint32_t c : crt_)
        if (c != 1) return false;
    return true;
}

bool RingElement::is_unit() const {
    for (std::uint32_t c : crt_)
        if (c == 0) return false;
    return true;
}

bool RingElement::is_constant() const {
    for (std::uint32_t c : crt_)
        if (c != crt_[0]) return false;
    return true;
}

namespace {
const std::vector<std::uint32_t>& same_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring().same_as(b.ring()))
        throw std::invalid_argument("ring elements belong to different rings");
    return b.crt();
}
}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    const auto& oc = same_ring(*this, o);
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c) out[c] = r_.field().add_ix(crt_[c], oc[c]);
    return {r_, std::move(out)};
}

RingElement RingElement::operator-(const RingElement& o) const {
    const auto& oc = same_ring(*this, o);
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c) out[c] = r_.field().sub_ix(crt_[c], oc[c]);
    return {r_, std::move(out)};
}

RingElement RingElement::operator*(const RingElement& o) const {
    const auto& oc = same_ring(*this, o);
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c) out[c] = r_.field().mul_ix(crt_[c], oc[c]);
    return {r_, std::move(out)};
}

RingElement RingElement::operator-() const {
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c) out[c] = r_.field().neg_ix(crt_[c]);
    return {r_, std::move(out)};
}

RingElement RingElement::operator*(const FieldElement& scalar) const {
    if (!r_.field().same_as(scalar.field()))
        throw std::invalid_argument("scalar from a different field");
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c)
        out[c] = r_.field().mul_ix(crt_[c], scalar.index());
    return {r_, std::move(out)};
}

RingElement RingElement::inverse() const {
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c) {
        if (crt_[c] == 0) throw std::domain_error("ring element is not a unit");
        out[c] = r_.field().inv_ix(crt_[c]);
    }
    return {r_, std::move(out)};
}

RingElement RingElement::psi(std::size_t power) const {
    std::size_t l = r_.l();
    std::size_t shift = power % l;
    if (shift == 0) return *this;
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t i = 0; i < r_.k(); ++i)
        for (std::size_t j = 0; j < l; ++j)
            out[i * l + j] = crt_[i * l + (j + l - shift) % l];
    return {r_, std::move(out)};
}

RingElement RingElement::theta(std::uint32_t t, std::size_t power) const {
    std::uint32_t s = r_.field().extension_degree();
    if (t < 1 || t > s || s % t != 0)
        throw std::invalid_argument("frobenius power must divide the extension degree");
    std::size_t shift = (static_cast<std::size_t>(t) * power) % s;
    if (shift == 0) return *this;
    std::vector<std::uint32_t> out(crt_.size());
    for (std::size_t c = 0; c < crt_.size(); ++c)
        out[c] = r_.field().frobenius_ix(crt_[c], static_cast<std::uint32_t>(shift));
    return {r_, std::move(out)};
}

bool RingElement::operator==(const RingElement& o) const {
    return r_.same_as(o.r_) && crt_ == o.crt_;
}

RingElement apply_autom(const Autom& a, const RingElement& e, std::size_t power) {
    switch (a.kind) {
        case Autom::Kind::identity: return e;
        case Autom::Kind::psi: return e.psi(power);
        case Autom::Kind::theta: return e.theta(a.t, power);
    }
    return e;
}

std::string to_pretty(const RingElement& e) {
    const Ring& r = e.ring();
    UVTable t = r.to_uv(e);
    std::string out;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t[a].size(); ++b) {
            if (t[a][b] == 0) continue;
            std::string coeff = to_pretty(r.field().element(t[a][b]));
            bool composite = coeff.find('+') != std::string::npos;
            std::string term;
            if (a == 0 && b == 0) {
                term = composite ? "(" + coeff + ")" : coeff;
            } else {
                if (t[a][b] != 1) term = (composite ? "(" + coeff + ")" : coeff) + "*";
                if (a > 0) term += a > 1 ? "u^" + std::to_string(a) : "u";
                if (a > 0 && b > 0) term += "*";
                if (b > 0) term += b > 1 ? "v^" + std::to_string(b) : "v";
            }
            if (!out.empty()) out += "+";
            out += term;
        }
    return out.empty() ? "0" : out;
}

}  // namespace skewcc
