#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hamcount/errors.hpp"

namespace hamcount {

/// Subset of the vertex set [1..universe] stored as a machine-word bitmask.
/// Bit v-1 set means vertex v is a member; |S| is a popcount.
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(std::uint64_t bits, int universe) : bits_(bits), universe_(universe) {
        if (universe < 0 || universe > 63)
            throw ContractViolation("IndexSet universe must lie in [0, 63], got " +
                                    std::to_string(universe));
        if (universe < 64 && (bits >> universe) != 0)
            throw ContractViolation("IndexSet bits fall outside universe [1.." +
                                    std::to_string(universe) + "]");
    }

    static IndexSet empty(int universe) { return IndexSet(0, universe); }

    static IndexSet full(int universe) {
        IndexSet probe(0, universe);  // validates the universe
        return IndexSet(universe == 0 ? 0 : (~std::uint64_t{0} >> (64 - universe)),
                        universe);
    }

    static IndexSet of(std::initializer_list<int> vs, int universe) {
        IndexSet s(0, universe);
        for (int v : vs) s = s.with(v);
        return s;
    }

    std::uint64_t bits() const { return bits_; }
    int universe() const { return universe_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(int v) const {
        if (v < 1 || v > universe_) return false;
        return (bits_ >> (v - 1)) & 1;
    }

    IndexSet with(int v) const {
        check_member(v);
        return IndexSet(bits_ | (std::uint64_t{1} << (v - 1)), universe_);
    }

    IndexSet without(int v) const {
        check_member(v);
        return IndexSet(bits_ & ~(std::uint64_t{1} << (v - 1)), universe_);
    }

    IndexSet complement() const {
        return IndexSet(full(universe_).bits_ & ~bits_, universe_);
    }

    bool subset_of(const IndexSet& other) const { return (bits_ & ~other.bits_) == 0; }

    /// Members in increasing order, 1-indexed.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    bool operator==(const IndexSet&) const = default;

private:
    void check_member(int v) const {
        if (v < 1 || v > universe_)
            throw ContractViolation("vertex " + std::to_string(v) +
                                    " outside universe [1.." +
                                    std::to_string(universe_) + "]");
    }

    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

}  // namespace hamcount
