#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace graphdim {

using Vertex = std::size_t;

/// Subset of the vertex ids {0, ..., universe-1} of a host graph, stored as a
/// dense bitset. Universes up to 128 vertices live inline; larger ones spill
/// to the heap.
class VertexSet {
    using Words = boost::container::small_vector<std::uint64_t, 2>;

public:
    static constexpr std::size_t kInlineVertices = 128;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        Vertex operator*() const { return pos_; }
        const_iterator& operator++() { pos_ = set_->next(pos_ + 1); return *this; }
        const_iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

    private:
        friend class VertexSet;
        const_iterator(const VertexSet* s, Vertex pos) : set_(s), pos_(pos) {}
        const VertexSet* set_ = nullptr;
        Vertex pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const;
    bool empty() const;

    /// Smallest member >= from, or universe() if none.
    Vertex next(Vertex from) const;
    Vertex first() const { return next(0); }

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<Vertex> to_vector() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    std::size_t intersection_size(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& rhs);
    VertexSet& operator|=(const VertexSet& rhs);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& rhs);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b);

    /// Lexicographic order on the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    std::size_t hash() const;

    std::span<const std::uint64_t> words() const { return {words_.data(), words_.size()}; }

private:
    void check_universe(const VertexSet& other) const;
    void clear_tail();

    std::size_t universe_ = 0;
    Words words_;
};

bool lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace graphdim
