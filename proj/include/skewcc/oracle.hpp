#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewcc/gf.hpp"

/// Brute-force reference implementations used to cross-check the main
/// construction routines on small instances. Everything here works on raw
/// flattened words and reimplements the ring action directly; the only
/// code shared with the rest of the library is Field arithmetic.
namespace skewcc::oracle {

/// Flattened codeword: n * k * l field element indices, symbol-major (the
/// k*l CRT coordinates of symbol s occupy entries [s*k*l, (s+1)*k*l)).
using Word = std::vector<std::uint16_t>;

/// Geometry of the word grid: n symbols, each a k x l CRT coordinate box.
struct Layout {
    std::size_t n = 0;
    std::size_t k = 1;
    std::size_t l = 1;

    std::size_t m() const { return k * l; }
    std::size_t entries() const { return n * m(); }

    friend bool operator==(const Layout&, const Layout&) = default;
};

/// Symbol-wise twist applied by the shift operators: identity, coordinate
/// Frobenius a -> a^(p^t), or the rotation of the second CRT index
/// (coordinate (i,j) takes its value from (i, j-1 mod l)).
enum class Twist { identity, frobenius, rotate };

/// Shift operator on flattened words. The scaled kinds multiply the
/// wrapped symbols coordinate-wise by alpha (m() entries); the block kinds
/// split the n symbols into `blocks` equal parts.
struct ShiftSpec {
    enum class Kind { cyclic, constacyclic, block_cyclic, block_twisted, within_block_twisted };

    Kind kind = Kind::cyclic;
    Twist twist = Twist::identity;
    std::uint32_t t = 0;  // frobenius power when twist == frobenius
    std::size_t blocks = 1;
    Word alpha;
};

Word apply_shift(const Field& field, const Layout& layout, const ShiftSpec& op, const Word& w);

/// F_q-linear span maintained as a reduced row echelon basis. size() is
/// q^rank by construction.
class CodewordSet {
  public:
    CodewordSet(Field field, Layout layout);

    const Field& field() const { return f_; }
    const Layout& layout() const { return lay_; }
    const std::vector<Word>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    /// q^rank; throws enumeration_limit_error beyond the 2^20 word cap.
    std::uint64_t size() const;

    /// Adds the span of w; returns true when the rank grew.
    bool insert(Word w);

    bool contains(const Word& w) const;

    /// Materializes all q^rank words (zero included); capped at 2^20.
    std::vector<Word> all_words() const;

    /// Same span: equal rank and mutual basis containment.
    bool same_span(const CodewordSet& other) const;

  private:
    Word reduce(Word w) const;

    Field f_;
    Layout lay_;
    std::vector<Word> basis_;    // rref, pivots strictly increasing
    std::vector<std::size_t> pivots_;
};

/// Smallest submodule containing the seeds: the F_q span closed under the
/// step shift (the action of x) and under the k*l coordinate masks (the
/// action of the idempotents). Throws enumeration_limit_error when the
/// span would exceed 2^20 words.
CodewordSet enumerate_code(const Field& field, const Layout& layout, const ShiftSpec& step,
                           const std::vector<Word>& seeds);

/// Which inner product the dual is taken against: `blocked` pairs words
/// per CRT coordinate (the ring-valued product, zero iff every coordinate
/// sum vanishes), `flat` takes one overall F_q sum across all entries.
enum class InnerProduct { blocked, flat };

/// All ambient words orthogonal to the set; the ambient space q^(n k l)
/// must stay within the 2^20 cap.
CodewordSet brute_dual(const CodewordSet& cs, InnerProduct ip);

enum class Metric { hamming, gray };

/// Minimum nonzero weight by full enumeration; empty for the zero code.
/// hamming counts nonzero symbols, gray counts nonzero entries.
std::optional<std::size_t> brute_min_distance(const CodewordSet& cs, Metric metric);

/// True when the shift maps the whole set into itself, optionally after a
/// coordinate-wise scaling of the shifted word by `scale` (m() entries).
/// Additivity of the shift makes the basis check conclusive.
bool closure_check(const CodewordSet& cs, const ShiftSpec& op, const Word* scale = nullptr);

}  // namespace skewcc::oracle
