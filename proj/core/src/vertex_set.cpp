#include "graphdim/vertex_set.hpp"

#include "graphdim/errors.hpp"

#include <string>

namespace graphdim {

namespace {

std::size_t word_count(std::size_t universe) {
    return (universe + 63) / 64;
}

} // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    s.clear_tail();
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for universe of " +
                           std::to_string(universe_));
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_)
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

Vertex VertexSet::next(Vertex from) const {
    if (from >= universe_)
        return universe_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w)
            return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == words_.size())
            return universe_;
        w = words_[wi];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

void VertexSet::check_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw InvalidInput("vertex sets over different universes (" + std::to_string(universe_) +
                           " vs " + std::to_string(other.universe_) + ")");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
    check_universe(other);
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
}

VertexSet& VertexSet::operator&=(const VertexSet& rhs) {
    check_universe(rhs);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= rhs.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& rhs) {
    check_universe(rhs);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= rhs.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& rhs) {
    check_universe(rhs);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~rhs.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out(*this);
    for (auto& w : out.words_)
        w = ~w;
    out.clear_tail();
    return out;
}

void VertexSet::clear_tail() {
    if (universe_ & 63)
        words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

std::size_t VertexSet::hash() const {
    // splitmix64 finalizer folded over the words
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (auto w : words_) {
        std::uint64_t z = h ^ w;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

} // namespace graphdim
