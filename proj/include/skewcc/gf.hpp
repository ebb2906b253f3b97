#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcc {

/// Specification of a finite field GF(p^s). The modulus is a monic
/// irreducible polynomial over F_p given by ascending coefficients. When it
/// is left empty the lexicographically smallest irreducible of degree s is
/// chosen (coefficients compared low degree first), so construction from
/// (p, s) alone is reproducible.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t s = 1;
    std::vector<std::uint32_t> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class FieldElement;

/// Immutable shared handle to GF(p^s). An element is identified by its
/// index sum(c_i p^i) where (c_0, ..., c_{s-1}) is its coefficient vector
/// over F_p in the power basis of the modulus root.
///
/// Fields of size up to 2^16 are supported; small fields precompute full
/// multiplication tables, larger ones multiply coefficient vectors directly.
class Field {
  public:
    Field() = default;
    explicit Field(FieldSpec spec);
    Field(std::uint32_t p, std::uint32_t s);

    bool valid() const { return d_ != nullptr; }
    std::uint32_t characteristic() const;
    std::uint32_t extension_degree() const;
    std::uint32_t size() const;
    const std::vector<std::uint32_t>& modulus() const;
    const FieldSpec& spec() const;

    /// True when both handles denote the same field, either by sharing
    /// state or by having equal specifications.
    bool same_as(const Field& other) const;

    // Index-level arithmetic. All arguments must be < size().
    std::uint32_t add_ix(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_ix(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_ix(std::uint32_t a) const;
    std::uint32_t mul_ix(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_ix(std::uint32_t a) const;
    std::uint32_t pow_ix(std::uint32_t a, std::uint64_t e) const;

    /// Applies x -> x^(p^t); requires 1 <= t <= s.
    std::uint32_t frobenius_ix(std::uint32_t a, std::uint32_t t) const;

    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::uint32_t from_digits(const std::vector<std::uint32_t>& coeffs) const;

    FieldElement element(std::uint32_t index) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<FieldElement> elements() const;

  private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

/// Value-semantic element of a Field. Binary operations require both
/// operands to come from the same field and throw std::invalid_argument
/// otherwise.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field field, std::uint32_t index) : f_(std::move(field)), ix_(index) {}

    const Field& field() const { return f_; }
    std::uint32_t index() const { return ix_; }
    std::vector<std::uint32_t> coeffs() const { return f_.digits(ix_); }

    bool is_zero() const { return ix_ == 0; }
    bool is_one() const { return ix_ == 1; }
    bool is_unit() const { return ix_ != 0; }

    FieldElement operator+(const FieldElement& o) const { return {f_, f_.add_ix(ix_, same(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {f_, f_.sub_ix(ix_, same(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {f_, f_.mul_ix(ix_, same(o))}; }
    FieldElement operator-() const { return {f_, f_.neg_ix(ix_)}; }

    FieldElement inverse() const { return {f_, f_.inv_ix(ix_)}; }
    FieldElement pow(std::uint64_t e) const { return {f_, f_.pow_ix(ix_, e)}; }
    FieldElement frobenius(std::uint32_t t) const { return {f_, f_.frobenius_ix(ix_, t)}; }

    FieldElement zero_like() const { return {f_, 0}; }
    FieldElement one_like() const { return {f_, 1}; }

    bool operator==(const FieldElement& o) const {
        return f_.same_as(o.f_) && ix_ == o.ix_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    std::uint32_t same(const FieldElement& o) const {
        if (!f_.same_as(o.f_)) throw std::invalid_argument("field elements belong to different fields");
        return o.ix_;
    }

    Field f_;
    std::uint32_t ix_ = 0;
};

/// Root of a univariate polynomial together with its multiplicity.
struct PolyRoot {
    FieldElement value;
    std::uint32_t multiplicity = 0;
};

/// All roots in the field of a nonzero polynomial with ascending
/// coefficients given as element indices. Multiplicities are found by
/// repeated synthetic division.
std::vector<PolyRoot> roots_of(const Field& field, const std::vector<std::uint32_t>& coeffs);

/// Lexicographically smallest monic irreducible of degree s over F_p,
/// ascending coefficients, low degrees compared first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t s);

/// Human-readable form of an element: a decimal residue for prime fields,
/// otherwise a polynomial in the generator "b" with descending powers.
std::string to_pretty(const FieldElement& e);

}  // namespace skewcc
