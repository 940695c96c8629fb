#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "rmideal/errors.hpp"

namespace rmideal {

using Vertex = std::size_t;

/// Packed subset of {0, ..., universe-1}.
///
/// All binary operations require both operands to share the same universe.
/// Bits past the universe are always zero.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_(word_count(universe), Word{0}) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
        s.trim();
        return s;
    }

    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members) {
        VertexSet s(universe);
        for (Vertex v : members) s.insert(v);
        return s;
    }

    template <class Range>
    static VertexSet from_range(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    static constexpr std::size_t word_count(std::size_t universe) {
        return (universe + kWordBits - 1) / kWordBits;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
    }

    void insert(Vertex v) {
        check(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }

    void erase(Vertex v) {
        check(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    /// Removes every member <= v.
    void erase_through(Vertex v) {
        const std::size_t w = v / kWordBits;
        for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
        if (w < words_.size()) {
            const std::size_t b = v % kWordBits;
            words_[w] &= (b == kWordBits - 1) ? Word{0} : (~Word{0} << (b + 1));
        }
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    std::optional<Vertex> first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
        return std::nullopt;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet operator~() const {
        VertexSet s(*this);
        for (Word& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.universe_ == b.universe_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
    }

    /// Lexicographic order on sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        const auto va = a.to_vector();
        const auto vb = b.to_vector();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }

    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

private:
    void check(Vertex v) const {
        if (v >= universe_) throw ParameterError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(universe_));
    }

    void trim() noexcept {
        const std::size_t tail = universe_ % kWordBits;
        if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
    }

    std::size_t universe_ = 0;
    boost::container::small_vector<Word, 4> words_;
};

}  // namespace rmideal
