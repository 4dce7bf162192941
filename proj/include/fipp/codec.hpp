#pragma once
// codec.hpp - natural-number codes for pairs, finite sequences, finite sets.
//
// Pairing is the Cantor pairing (i+j)(i+j+1)/2 + i.  Sequences use the
// cons-list bijection 0 <-> <> and 1+pair(h,t) <-> h::t, so every natural
// is a valid sequence code.  Codes of longer sequences grow doubly
// exponentially, hence code values are arbitrary-precision while sequence
// entries, set elements and cardinalities stay machine words.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fipp {

using Nat = std::uint64_t;
using Code = boost::multiprecision::cpp_int;  // invariant: >= 0

namespace codec {

// --- Cantor pairing --------------------------------------------------------

inline Code pair(const Code& i, const Code& j) {
    Code s = i + j;
    return s * (s + 1) / 2 + i;
}

inline std::pair<Code, Code> unpair(const Code& n) {
    // diagonal index s = floor((sqrt(8n+1)-1)/2)
    Code disc = 8 * n + 1;
    Code s = (boost::multiprecision::sqrt(disc) - 1) / 2;
    Code i = n - s * (s + 1) / 2;
    return {i, s - i};
}

// Machine-word pairing used by the formula evaluator; throws instead of
// silently wrapping.
inline Nat pair_nat(Nat i, Nat j) {
    unsigned __int128 s = static_cast<unsigned __int128>(i) + j;
    if (s > 6074000998ULL)
        throw std::overflow_error("pair_nat: value exceeds 64 bits");
    unsigned __int128 v = s * (s + 1) / 2 + i;
    if (v > std::numeric_limits<Nat>::max())
        throw std::overflow_error("pair_nat: value exceeds 64 bits");
    return static_cast<Nat>(v);
}

inline std::pair<Nat, Nat> unpair_nat(Nat n) {
    unsigned __int128 m = static_cast<unsigned __int128>(n) * 8 + 1;
    Nat r = static_cast<Nat>(std::sqrt(static_cast<long double>(m)));
    while (static_cast<unsigned __int128>(r) * r > m) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= m) ++r;
    Nat s = (r - 1) / 2;
    Nat t = static_cast<Nat>(static_cast<unsigned __int128>(s) * (s + 1) / 2);
    return {n - t, s - (n - t)};
}

// --- Sequence codes --------------------------------------------------------

inline Code encode_seq(std::span<const Nat> s) {
    Code c = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        c = 1 + pair(Code(*it), c);
    return c;
}

inline Code encode_seq(std::initializer_list<Nat> s) {
    return encode_seq(std::span<const Nat>(s.begin(), s.size()));
}

inline std::vector<Nat> decode_seq(Code c) {
    std::vector<Nat> out;
    while (c > 0) {
        auto [h, t] = unpair(c - 1);
        if (h > std::numeric_limits<Nat>::max())
            throw std::overflow_error("decode_seq: entry exceeds 64 bits");
        out.push_back(h.convert_to<Nat>());
        c = std::move(t);
    }
    return out;
}

inline Nat seq_length(const Code& c) {
    return static_cast<Nat>(decode_seq(c).size());
}

// --- Finite sets -----------------------------------------------------------

// Strictly increasing element list; cardinality = length.
class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::vector<Nat> sorted_unique) : elems_(std::move(sorted_unique)) {
        for (std::size_t i = 1; i < elems_.size(); ++i)
            if (elems_[i - 1] >= elems_[i])
                throw std::invalid_argument("FinSet: elements not strictly increasing");
    }

    static FinSet from_unsorted(std::vector<Nat> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        FinSet s;
        s.elems_ = std::move(v);
        return s;
    }

    static FinSet of(std::initializer_list<Nat> v) { return from_unsorted(std::vector<Nat>(v)); }

    const std::vector<Nat>& elements() const { return elems_; }
    Nat card() const { return static_cast<Nat>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    bool contains(Nat x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    std::optional<Nat> min() const {
        if (elems_.empty()) return std::nullopt;
        return elems_.front();
    }
    std::optional<Nat> max() const {
        if (elems_.empty()) return std::nullopt;
        return elems_.back();
    }

    bool operator==(const FinSet& o) const { return elems_ == o.elems_; }

private:
    std::vector<Nat> elems_;
};

// A_l: the set encoded by the sequence with code l.
inline FinSet set_of(const Code& l) {
    return FinSet::from_unsorted(decode_seq(l));
}

// The code of a set: the code of its strictly increasing enumeration.
inline Code canon_code(const FinSet& a) {
    return encode_seq(std::span<const Nat>(a.elements()));
}

inline Nat card(const FinSet& a) { return a.card(); }

// |A_l| versus m.
inline std::strong_ordering card_cmp(const Code& l, Nat m) {
    return set_of(l).card() <=> m;
}

// [i] = {0,...,i}; nullopt encodes the [-1] convention, the empty set.
inline FinSet initial_segment(std::optional<Nat> i) {
    if (!i) return FinSet();
    std::vector<Nat> v(*i + 1);
    for (Nat j = 0; j <= *i; ++j) v[j] = j;
    return FinSet(std::move(v));
}

inline FinSet intersect(const FinSet& a, const FinSet& b) {
    std::vector<Nat> out;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return FinSet(std::move(out));
}

inline FinSet set_union(const FinSet& a, const FinSet& b) {
    std::vector<Nat> out;
    std::set_union(a.elements().begin(), a.elements().end(),
                   b.elements().begin(), b.elements().end(),
                   std::back_inserter(out));
    return FinSet(std::move(out));
}

// A cap [k]
inline FinSet intersect_upto(const FinSet& a, Nat k) {
    std::vector<Nat> out;
    for (Nat x : a.elements()) {
        if (x > k) break;
        out.push_back(x);
    }
    return FinSet(std::move(out));
}

inline bool is_subset(const FinSet& a, const FinSet& b) {
    return std::includes(b.elements().begin(), b.elements().end(),
                         a.elements().begin(), a.elements().end());
}

// --- rendering -------------------------------------------------------------

inline std::string seq_to_string(std::span<const Nat> s) {
    std::string out = "⟨";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += "⟩";
    return out;
}

inline std::string set_to_string(const FinSet& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.elements().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.elements()[i]);
    }
    out += "}";
    return out;
}

}  // namespace codec
}  // namespace fipp
