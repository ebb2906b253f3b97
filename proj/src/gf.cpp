#include "skewcc/gf.hpp"

#include <algorithm>
#include <utility>

namespace skewcc {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 16;
constexpr std::uint32_t kTableLimit = 1024;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using PPoly = std::vector<std::uint32_t>;  // ascending residues mod p

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    ptrim(c);
    return c;
}

// Remainder of a by monic-leading b (any nonzero leading coefficient).
PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
    ptrim(a);
    std::uint32_t lead = b.back();
    std::uint32_t lead_inv = 1;
    for (std::uint32_t x = 1; x < p; ++x)
        if (x * lead % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size()) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        ptrim(a);
    }
    return a;
}

bool is_irreducible(const PPoly& f, std::uint32_t p) {
    // Trial division by every monic polynomial of degree up to deg(f)/2.
    std::size_t s = f.size() - 1;
    for (std::size_t d = 1; d <= s / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            PPoly g(d + 1, 0);
            std::uint64_t t = m;
            for (std::size_t i = 0; i < d; ++i) { g[i] = t % p; t /= p; }
            g[d] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

struct Field::Data {
    FieldSpec spec;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> pow_p;  // pow_p[i] = p^i for digit extraction
    bool tables = false;
    std::vector<std::uint32_t> mul_table;  // q*q when tables
    std::vector<std::uint32_t> inv_table;  // q when tables

    std::vector<std::uint32_t> to_digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(spec.s);
        for (std::uint32_t i = 0; i < spec.s; ++i) {
            d[i] = a % spec.p;
            a /= spec.p;
        }
        return d;
    }

    std::uint32_t from_digits_raw(const std::vector<std::uint32_t>& d) const {
        std::uint32_t a = 0;
        for (std::size_t i = d.size(); i-- > 0;) a = a * spec.p + d[i];
        return a;
    }

    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < spec.s; ++i) {
            std::uint32_t da = a % spec.p, db = b % spec.p;
            r += (da + db) % spec.p * pow_p[i];
            a /= spec.p;
            b /= spec.p;
        }
        return r;
    }

    std::uint32_t neg_raw(std::uint32_t a) const {
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < spec.s; ++i) {
            std::uint32_t da = a % spec.p;
            r += (spec.p - da) % spec.p * pow_p[i];
            a /= spec.p;
        }
        return r;
    }

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        PPoly pa = to_digits(a), pb = to_digits(b);
        ptrim(pa);
        ptrim(pb);
        if (pa.empty() || pb.empty()) return 0;
        PPoly prod = pmod(pmul(pa, pb, spec.p), spec.modulus, spec.p);
        prod.resize(spec.s, 0);
        return from_digits_raw(prod);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return tables ? mul_table[static_cast<std::size_t>(a) * q + b] : mul_raw(a, b);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t base = a, r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

Field::Field(FieldSpec spec) {
    if (!is_prime(spec.p)) throw std::invalid_argument("field characteristic must be prime");
    if (spec.s < 1) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec.s; ++i) {
        q *= spec.p;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size exceeds 2^16");
    }
    if (spec.modulus.empty()) {
        spec.modulus = smallest_irreducible(spec.p, spec.s);
    } else {
        if (spec.modulus.size() != spec.s + 1)
            throw std::invalid_argument("modulus degree does not match extension degree");
        for (std::uint32_t c : spec.modulus)
            if (c >= spec.p) throw std::invalid_argument("modulus coefficient out of range");
        if (spec.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(spec.modulus, spec.p))
            throw std::invalid_argument("modulus is not irreducible");
    }

    auto d = std::make_shared<Data>();
    d->spec = std::move(spec);
    d->q = static_cast<std::uint32_t>(q);
    d->pow_p.resize(d->spec.s + 1);
    d->pow_p[0] = 1;
    for (std::uint32_t i = 1; i <= d->spec.s; ++i) d->pow_p[i] = d->pow_p[i - 1] * d->spec.p;

    if (d->q <= kTableLimit) {
        d->tables = true;
        d->mul_table.resize(static_cast<std::size_t>(d->q) * d->q);
        for (std::uint32_t a = 0; a < d->q; ++a)
            for (std::uint32_t b = a; b < d->q; ++b) {
                std::uint32_t m = d->mul_raw(a, b);
                d->mul_table[static_cast<std::size_t>(a) * d->q + b] = m;
                d->mul_table[static_cast<std::size_t>(b) * d->q + a] = m;
            }
        d->inv_table.assign(d->q, 0);
        for (std::uint32_t a = 1; a < d->q; ++a)
            for (std::uint32_t b = 1; b < d->q; ++b)
                if (d->mul_table[static_cast<std::size_t>(a) * d->q + b] == 1) {
                    d->inv_table[a] = b;
                    break;
                }
    }
    d_ = std::move(d);
}

Field::Field(std::uint32_t p, std::uint32_t s) : Field(FieldSpec{p, s, {}}) {}

namespace {
template <class Data>
const Data* need(const std::shared_ptr<const Data>& d) {
    if (!d) throw std::invalid_argument("field handle is empty");
    return d.get();
}
}  // namespace

std::uint32_t Field::characteristic() const { return need(d_)->spec.p; }
std::uint32_t Field::extension_degree() const { return need(d_)->spec.s; }
std::uint32_t Field::size() const { return need(d_)->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return need(d_)->spec.modulus; }
const FieldSpec& Field::spec() const { return need(d_)->spec; }

bool Field::same_as(const Field& other) const {
    if (d_ == other.d_) return d_ != nullptr;
    if (!d_ || !other.d_) return false;
    return d_->spec == other.d_->spec;
}

std::uint32_t Field::add_ix(std::uint32_t a, std::uint32_t b) const { return need(d_)->add_raw(a, b); }

std::uint32_t Field::sub_ix(std::uint32_t a, std::uint32_t b) const {
    return d_->add_raw(a, d_->neg_raw(b));
}

std::uint32_t Field::neg_ix(std::uint32_t a) const { return need(d_)->neg_raw(a); }

std::uint32_t Field::mul_ix(std::uint32_t a, std::uint32_t b) const { return need(d_)->mul(a, b); }

std::uint32_t Field::inv_ix(std::uint32_t a) const {
    const Data* d = need(d_);
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    if (d->tables) return d->inv_table[a];
    return d->pow(a, d->q - 2);
}

std::uint32_t Field::pow_ix(std::uint32_t a, std::uint64_t e) const { return need(d_)->pow(a, e); }

std::uint32_t Field::frobenius_ix(std::uint32_t a, std::uint32_t t) const {
    const Data* d = need(d_);
    if (t < 1 || t > d->spec.s) throw std::domain_error("frobenius power out of range");
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < t; ++i) e *= d->spec.p;
    return d->pow(a, e);
}

std::vector<std::uint32_t> Field::digits(std::uint32_t a) const { return need(d_)->to_digits(a); }

std::uint32_t Field::from_digits(const std::vector<std::uint32_t>& coeffs) const {
    const Data* d = need(d_);
    if (coeffs.size() > d->spec.s) throw std::invalid_argument("coefficient vector too long");
    std::uint32_t a = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= d->spec.p) throw std::invalid_argument("coefficient out of range");
        a = a * d->spec.p + coeffs[i];
    }
    return a;
}

FieldElement Field::element(std::uint32_t index) const {
    if (index >= need(d_)->q) throw std::invalid_argument("element index out of range");
    return {*this, index};
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    return {*this, from_digits(coeffs)};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) out.emplace_back(*this, i);
    return out;
}

std::vector<PolyRoot> roots_of(const Field& field, const std::vector<std::uint32_t>& coeffs) {
    std::vector<std::uint32_t> poly = coeffs;
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.empty()) throw std::invalid_argument("cannot list roots of the zero polynomial");

    std::vector<PolyRoot> roots;
    for (std::uint32_t r = 0; r < field.size(); ++r) {
        std::vector<std::uint32_t> cur = poly;
        std::uint32_t mult = 0;
        for (;;) {
            // Synthetic division of cur by (x - r); remainder is cur
            // evaluated at r.
            std::uint32_t acc = 0;
            std::vector<std::uint32_t> quot(cur.size() > 1 ? cur.size() - 1 : 0, 0);
            for (std::size_t i = cur.size(); i-- > 0;) {
                acc = field.add_ix(field.mul_ix(acc, r), cur[i]);
                if (i > 0) quot[i - 1] = acc;
            }
            if (acc != 0) break;
            ++mult;
            cur = quot;
            if (cur.empty()) break;
        }
        if (mult > 0) roots.push_back({field.element(r), mult});
    }
    return roots;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t s) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (s == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < s; ++i) count *= p;
    // Low-degree coefficients are the most significant for the ordering, so
    // candidate m is decoded with c_0 as the leading digit.
    for (std::uint64_t m = 0; m < count; ++m) {
        PPoly f(s + 1, 0);
        std::uint64_t t = m;
        for (std::size_t i = s; i-- > 0;) { f[i] = t % p; t /= p; }
        f[s] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::string to_pretty(const FieldElement& e) {
    const Field& f = e.field();
    if (f.extension_degree() == 1) return std::to_string(e.index());
    if (e.is_zero()) return "0";
    std::vector<std::uint32_t> c = e.coeffs();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string term;
        if (i == 0) {
            term = std::to_string(c[i]);
        } else {
            if (c[i] != 1) term = std::to_string(c[i]) + "*";
            term += "b";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

}  // namespace skewcc
