#pragma once

// Sparse incremental Gaussian elimination over GF2 or Q, used by the
// exactness search and the filling obstruction.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cedga/algebra.hpp"

namespace cedga::detail {

inline bool is_zero(std::uint8_t v) { return v == 0; }
inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
inline std::uint8_t inverse(std::uint8_t v) { return v; }
inline mpq_class inverse(const mpq_class& v) { return mpq_class(1) / v; }
inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return a & b; }
inline mpq_class mul(const mpq_class& a, const mpq_class& b) { return a * b; }
inline std::uint8_t sub(std::uint8_t a, std::uint8_t b) { return a ^ b; }
inline mpq_class sub(const mpq_class& a, const mpq_class& b) { return a - b; }
inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
inline mpq_class add(const mpq_class& a, const mpq_class& b) { return a + b; }

template <class V>
using SparseVec = std::vector<std::pair<std::uint32_t, V>>;  // sorted by index, no zeros

/// Sorts by index, merges duplicates and drops zeros.
template <class V>
SparseVec<V> normalize(SparseVec<V> v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<V> out;
    out.reserve(v.size());
    for (auto& [k, x] : v) {
        if (!out.empty() && out.back().first == k)
            out.back().second = add(out.back().second, x);
        else
            out.emplace_back(k, std::move(x));
        if (is_zero(out.back().second))
            out.pop_back();
    }
    return out;
}

/// a - c * b
template <class V>
SparseVec<V> axpy(const SparseVec<V>& a, const V& c, const SparseVec<V>& b)
{
    SparseVec<V> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        }
        else if (i == a.size() || b[j].first < a[i].first) {
            V v = sub(V(0), mul(c, b[j].second));
            if (!is_zero(v))
                out.emplace_back(b[j].first, std::move(v));
            ++j;
        }
        else {
            V v = sub(a[i].second, mul(c, b[j].second));
            if (!is_zero(v))
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class V>
void scale(SparseVec<V>& a, const V& c)
{
    for (auto& [k, v] : a)
        v = mul(v, c);
}

/// Echelon basis keyed by leading (largest) row index. With tracking, each
/// basis vector remembers its expression in the inserted columns.
template <class V>
class Eliminator {
public:
    explicit Eliminator(bool track) : track_(track) {}

    /// Returns true if the column was independent of the previous ones.
    bool add_column(std::uint32_t col, SparseVec<V> v)
    {
        SparseVec<V> combo;
        if (track_)
            combo.emplace_back(col, V(1));
        reduce_impl(v, combo, true);
        if (v.empty())
            return false;
        V inv = inverse(v.back().second);
        scale(v, inv);
        if (track_)
            scale(combo, inv);
        std::uint32_t lead = v.back().first;
        basis_.emplace(lead, Entry{std::move(v), std::move(combo)});
        return true;
    }

    /// Reduces t; returns true when t lies in the span. With tracking,
    /// `combo` receives coefficients c_col with sum c_col * column = t.
    bool solve(SparseVec<V> t, SparseVec<V>* combo) const
    {
        SparseVec<V> acc;
        reduce_impl(t, acc, false);
        if (!t.empty())
            return false;
        if (combo)
            *combo = std::move(acc);
        return true;
    }

    std::size_t rank() const { return basis_.size(); }

private:
    struct Entry {
        SparseVec<V> vec;
        SparseVec<V> combo;
    };

    // Subtracts basis vectors until the leading index is not a pivot. For
    // inserted columns the combo tracks v = sum combo * columns (minus);
    // for targets it accumulates the coefficients used.
    void reduce_impl(SparseVec<V>& v, SparseVec<V>& combo, bool inserting) const
    {
        while (!v.empty()) {
            auto it = basis_.find(v.back().first);
            if (it == basis_.end())
                return;
            V c = v.back().second;
            v = axpy(v, c, it->second.vec);
            if (track_) {
                if (inserting)
                    combo = axpy(combo, c, it->second.combo);
                else
                    combo = axpy(combo, sub(V(0), c), it->second.combo);
            }
        }
    }

    bool track_;
    std::unordered_map<std::uint32_t, Entry> basis_;
};

/// Assigns dense row indices to words (optionally tagged with a block id).
class RowIndex {
public:
    std::uint32_t id(std::uint32_t block, const Word& w)
    {
        auto [it, inserted] = ids_.try_emplace(Key{block, w}, static_cast<std::uint32_t>(ids_.size()));
        return it->second;
    }
    std::size_t size() const { return ids_.size(); }

private:
    struct Key {
        std::uint32_t block;
        Word word;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return WordHash{}(k.word) * 31 + k.block; }
    };
    std::unordered_map<Key, std::uint32_t, KeyHash> ids_;
};

template <class V>
V from_coeff(const Coeff& c);

template <>
inline std::uint8_t from_coeff<std::uint8_t>(const Coeff& c)
{
    return c.is_zero() ? 0 : 1;
}

template <>
inline mpq_class from_coeff<mpq_class>(const Coeff& c)
{
    return *c.as_rational();
}

template <class V>
Coeff to_coeff(const CoeffRing& ring, const V& v);

template <>
inline Coeff to_coeff<std::uint8_t>(const CoeffRing& ring, const std::uint8_t& v)
{
    return Coeff::from_int(ring, v);
}

template <>
inline Coeff to_coeff<mpq_class>(const CoeffRing& ring, const mpq_class& v)
{
    return Coeff::from_rational(ring, v);
}

/// Converts an element to a sparse vector in the given row block.
template <class V>
SparseVec<V> to_sparse(RowIndex& rows, std::uint32_t block, const Element& x)
{
    SparseVec<V> out;
    out.reserve(x.size());
    for (const auto& [w, c] : x.terms()) {
        V v = from_coeff<V>(c);
        if (!is_zero(v))
            out.emplace_back(rows.id(block, w), std::move(v));
    }
    return normalize(std::move(out));
}

/// Differentials of generators cached as sparse rows; d(w) by Leibniz.
template <class V>
class DiffTable {
public:
    explicit DiffTable(const Presentation& P) : P_(P), terms_(P.generators().size()) {}

    const std::vector<std::pair<Word, V>>& terms(GeneratorId g)
    {
        auto& slot = terms_[g];
        if (!slot) {
            const Generator& G = P_.generator(g);
            const auto& dg = P_.differential(g);
            if (!dg)
                throw IncompletePresentation(G.name);
            slot.emplace();
            for (const auto& [w, c] : dg->terms())
                if (w.source() == G.source && w.target() == G.target)
                    slot->emplace_back(w, from_coeff<V>(c));
        }
        return *slot;
    }

    /// d(w) as a sparse vector over rows of the given block.
    SparseVec<V> apply(RowIndex& rows, std::uint32_t block, const Word& w)
    {
        SparseVec<V> out;
        const auto& letters = w.letters();
        int prefix = 0;
        std::vector<GeneratorId> nl;
        for (std::size_t k = 0; k < letters.size(); ++k) {
            bool neg = prefix % 2 != 0;
            for (const auto& [t, c] : terms(letters[k])) {
                nl.clear();
                nl.insert(nl.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
                nl.insert(nl.end(), t.letters().begin(), t.letters().end());
                nl.insert(nl.end(), letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, letters.end());
                Word nw = nl.empty() ? Word::idempotent(w.source()) : Word::from_letters(nl, w.source(), w.target());
                out.emplace_back(rows.id(block, nw), neg ? sub(V(0), c) : c);
            }
            prefix += P_.generator(letters[k]).degree;
        }
        return normalize(std::move(out));
    }

private:
    const Presentation& P_;
    std::vector<std::optional<std::vector<std::pair<Word, V>>>> terms_;
};

}  // namespace cedga::detail
