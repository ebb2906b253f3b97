#include "skewcc/oracle.hpp"

#include <algorithm>

#include "skewcc/errors.hpp"

namespace skewcc::oracle {

namespace {

constexpr std::uint64_t kCap = 1u << 20;

std::uint64_t capped_pow(std::uint64_t q, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out *= q;
        if (out > kCap) throw enumeration_limit_error("enumeration exceeds 2^20 words");
    }
    return out;
}

void check_word(const Layout& lay, const Word& w) {
    if (w.size() != lay.entries()) throw std::invalid_argument("word does not match the layout");
}

// Twist of one symbol, written onto out[0..m).
void twist_symbol(const Field& F, const Layout& lay, Twist twist, std::uint32_t t,
                  const std::uint16_t* in, std::uint16_t* out) {
    std::size_t m = lay.m();
    switch (twist) {
        case Twist::identity:
            std::copy(in, in + m, out);
            return;
        case Twist::frobenius:
            for (std::size_t c = 0; c < m; ++c)
                out[c] = static_cast<std::uint16_t>(F.frobenius_ix(in[c], t));
            return;
        case Twist::rotate:
            for (std::size_t i = 0; i < lay.k; ++i)
                for (std::size_t j = 0; j < lay.l; ++j)
                    out[i * lay.l + j] = in[i * lay.l + (j + lay.l - 1) % lay.l];
            return;
    }
}

void scale_symbol(const Field& F, std::size_t m, const Word& alpha, std::uint16_t* sym) {
    for (std::size_t c = 0; c < m; ++c)
        sym[c] = static_cast<std::uint16_t>(F.mul_ix(sym[c], alpha[c]));
}

}  // namespace

Word apply_shift(const Field& field, const Layout& layout, const ShiftSpec& op, const Word& w) {
    check_word(layout, w);
    std::size_t n = layout.n, m = layout.m();
    bool scaled = op.kind == ShiftSpec::Kind::constacyclic ||
                  op.kind == ShiftSpec::Kind::block_twisted ||
                  op.kind == ShiftSpec::Kind::within_block_twisted;
    if (scaled && op.alpha.size() != m)
        throw std::invalid_argument("shift scale must have one entry per CRT coordinate");
    Word out(w.size());

    auto rotate_symbols = [&](std::size_t lo, std::size_t hi) {
        // Symbols in [lo, hi) rotate one position with the twist applied;
        // returns nothing, the wrapped symbol lands at lo.
        for (std::size_t s = lo; s < hi; ++s) {
            std::size_t src = s == lo ? hi - 1 : s - 1;
            twist_symbol(field, layout, op.twist, op.t, &w[src * m], &out[s * m]);
        }
    };

    switch (op.kind) {
        case ShiftSpec::Kind::cyclic:
            rotate_symbols(0, n);
            return out;
        case ShiftSpec::Kind::constacyclic:
            rotate_symbols(0, n);
            scale_symbol(field, m, op.alpha, &out[0]);
            return out;
        case ShiftSpec::Kind::block_cyclic:
        case ShiftSpec::Kind::block_twisted: {
            if (op.blocks == 0 || n % op.blocks != 0)
                throw std::invalid_argument("block count must divide the symbol count");
            std::size_t r = n / op.blocks;
            for (std::size_t b = 0; b < op.blocks; ++b) {
                std::size_t src = (b + op.blocks - 1) % op.blocks;
                for (std::size_t s = 0; s < r; ++s)
                    twist_symbol(field, layout, op.twist, op.t, &w[(src * r + s) * m],
                                 &out[(b * r + s) * m]);
            }
            if (op.kind == ShiftSpec::Kind::block_twisted)
                for (std::size_t s = 0; s < r; ++s) scale_symbol(field, m, op.alpha, &out[s * m]);
            return out;
        }
        case ShiftSpec::Kind::within_block_twisted: {
            if (op.blocks == 0 || n % op.blocks != 0)
                throw std::invalid_argument("block count must divide the symbol count");
            std::size_t r = n / op.blocks;
            for (std::size_t b = 0; b < op.blocks; ++b) {
                rotate_symbols(b * r, (b + 1) * r);
                scale_symbol(field, m, op.alpha, &out[b * r * m]);
            }
            return out;
        }
    }
    throw std::invalid_argument("unknown shift kind");
}

CodewordSet::CodewordSet(Field field, Layout layout) : f_(std::move(field)), lay_(layout) {
    if (!f_.valid()) throw std::invalid_argument("field handle is empty");
    if (lay_.n == 0 || lay_.k == 0 || lay_.l == 0)
        throw std::invalid_argument("layout dimensions must be positive");
}

std::uint64_t CodewordSet::size() const { return capped_pow(f_.size(), rank()); }

Word CodewordSet::reduce(Word w) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        std::uint32_t c = w[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t e = 0; e < w.size(); ++e)
            w[e] = static_cast<std::uint16_t>(
                f_.sub_ix(w[e], f_.mul_ix(c, basis_[r][e])));
    }
    return w;
}

bool CodewordSet::insert(Word w) {
    check_word(lay_, w);
    w = reduce(std::move(w));
    std::size_t pivot = w.size();
    for (std::size_t e = 0; e < w.size(); ++e)
        if (w[e] != 0) { pivot = e; break; }
    if (pivot == w.size()) return false;

    std::uint32_t inv = f_.inv_ix(w[pivot]);
    for (std::uint16_t& e : w) e = static_cast<std::uint16_t>(f_.mul_ix(e, inv));
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        std::uint32_t c = basis_[r][pivot];
        if (c == 0) continue;
        for (std::size_t e = 0; e < w.size(); ++e)
            basis_[r][e] = static_cast<std::uint16_t>(
                f_.sub_ix(basis_[r][e], f_.mul_ix(c, w[e])));
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
}

bool CodewordSet::contains(const Word& w) const {
    check_word(lay_, w);
    Word r = reduce(w);
    return std::all_of(r.begin(), r.end(), [](std::uint16_t e) { return e == 0; });
}

std::vector<Word> CodewordSet::all_words() const {
    std::uint64_t total = size();
    std::vector<Word> out;
    out.reserve(total);
    Word current(lay_.entries(), 0);
    std::vector<std::uint32_t> digits(rank(), 0);
    out.push_back(current);
    for (std::uint64_t i = 1; i < total; ++i) {
        // Mixed-radix increment; adding (new - old) * basis row keeps the
        // running word in sync without a full recomputation.
        std::size_t pos = 0;
        while (true) {
            std::uint32_t old = digits[pos];
            digits[pos] = (old + 1) % f_.size();
            std::uint32_t delta = f_.sub_ix(digits[pos], old);
            for (std::size_t e = 0; e < current.size(); ++e)
                current[e] = static_cast<std::uint16_t>(
                    f_.add_ix(current[e], f_.mul_ix(delta, basis_[pos][e])));
            if (digits[pos] != 0) break;
            ++pos;
        }
        out.push_back(current);
    }
    return out;
}

bool CodewordSet::same_span(const CodewordSet& other) const {
    if (!f_.same_as(other.f_) || !(lay_ == other.lay_)) return false;
    if (rank() != other.rank()) return false;
    for (const Word& w : basis_)
        if (!other.contains(w)) return false;
    return true;
}

CodewordSet enumerate_code(const Field& field, const Layout& layout, const ShiftSpec& step,
                           const std::vector<Word>& seeds) {
    CodewordSet set(field, layout);
    for (const Word& w : seeds) {
        set.insert(w);
        set.size();  // enforce the cap as the basis grows
    }
    std::size_t m = layout.m();
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Word> snapshot = set.basis();
        for (const Word& b : snapshot) {
            std::vector<Word> images;
            images.push_back(apply_shift(field, layout, step, b));
            for (std::size_t c = 0; c < m; ++c) {
                Word masked(b.size(), 0);
                for (std::size_t s = 0; s < layout.n; ++s) masked[s * m + c] = b[s * m + c];
                images.push_back(std::move(masked));
            }
            for (Word& img : images)
                if (set.insert(std::move(img))) {
                    grew = true;
                    set.size();
                }
        }
    }
    return set;
}

CodewordSet brute_dual(const CodewordSet& cs, InnerProduct ip) {
    const Field& F = cs.field();
    const Layout& lay = cs.layout();
    std::uint64_t ambient = capped_pow(F.size(), lay.entries());
    std::size_t m = lay.m();

    auto orthogonal = [&](const Word& w) {
        for (const Word& b : cs.basis()) {
            if (ip == InnerProduct::flat) {
                std::uint32_t sum = 0;
                for (std::size_t e = 0; e < w.size(); ++e)
                    sum = F.add_ix(sum, F.mul_ix(w[e], b[e]));
                if (sum != 0) return false;
            } else {
                for (std::size_t c = 0; c < m; ++c) {
                    std::uint32_t sum = 0;
                    for (std::size_t s = 0; s < lay.n; ++s)
                        sum = F.add_ix(sum, F.mul_ix(w[s * m + c], b[s * m + c]));
                    if (sum != 0) return false;
                }
            }
        }
        return true;
    };

    CodewordSet dual(F, lay);
    Word w(lay.entries(), 0);
    for (std::uint64_t i = 0; i < ambient; ++i) {
        if (i > 0) {
            std::size_t pos = 0;
            while (true) {
                w[pos] = static_cast<std::uint16_t>((w[pos] + 1) % F.size());
                if (w[pos] != 0) break;
                ++pos;
            }
        }
        if (orthogonal(w)) dual.insert(w);
    }
    return dual;
}

std::optional<std::size_t> brute_min_distance(const CodewordSet& cs, Metric metric) {
    std::uint64_t total = cs.size();
    if (cs.rank() == 0) return std::nullopt;
    const Field& F = cs.field();
    const Layout& lay = cs.layout();
    std::size_t m = lay.m();

    std::optional<std::size_t> best;
    Word current(lay.entries(), 0);
    std::vector<std::uint32_t> digits(cs.rank(), 0);
    for (std::uint64_t i = 1; i < total; ++i) {
        std::size_t pos = 0;
        while (true) {
            std::uint32_t old = digits[pos];
            digits[pos] = (old + 1) % F.size();
            std::uint32_t delta = F.sub_ix(digits[pos], old);
            for (std::size_t e = 0; e < current.size(); ++e)
                current[e] = static_cast<std::uint16_t>(
                    F.add_ix(current[e], F.mul_ix(delta, cs.basis()[pos][e])));
            if (digits[pos] != 0) break;
            ++pos;
        }
        std::size_t weight = 0;
        if (metric == Metric::gray) {
            for (std::uint16_t e : current)
                if (e != 0) ++weight;
        } else {
            for (std::size_t s = 0; s < lay.n; ++s)
                for (std::size_t c = 0; c < m; ++c)
                    if (current[s * m + c] != 0) { ++weight; break; }
        }
        if (!best || weight < *best) best = weight;
    }
    return best;
}

bool closure_check(const CodewordSet& cs, const ShiftSpec& op, const Word* scale) {
    const Field& F = cs.field();
    std::size_t m = cs.layout().m();
    if (scale && scale->size() != m)
        throw std::invalid_argument("closure scale must have one entry per CRT coordinate");
    for (const Word& b : cs.basis()) {
        Word w = apply_shift(F, cs.layout(), op, b);
        if (scale)
            for (std::size_t s = 0; s < cs.layout().n; ++s)
                scale_symbol(F, m, *scale, &w[s * m]);
        if (!cs.contains(w)) return false;
    }
    return true;
}

}  // namespace skewcc::oracle
