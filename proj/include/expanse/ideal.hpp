#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expanse/face.hpp"

namespace expanse {

/// A squarefree monomial ideal given by the supports of its minimal
/// generators, over an ordered list of variables. The empty generator list
/// is the zero ideal; a generator with empty support is the unit ideal.
class SquarefreeMonomialIdeal {
public:
    /// Minimalizes `generators` (drops repeats and multiples).
    SquarefreeMonomialIdeal(std::vector<std::string> variables, std::vector<Face> generators);

    const std::vector<std::string>& variables() const { return variables_; }
    int variable_count() const { return static_cast<int>(variables_.size()); }
    Face variables_face() const { return Face::range(variable_count()); }
    std::span<const Face> generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return !generators_.empty() && generators_.front().empty(); }

    bool contains_monomial(Face support) const;

    /// e.g. "x1*x2"
    std::string monomial_string(Face support) const;

    bool operator==(const SquarefreeMonomialIdeal&) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<Face> generators_;
};

/**
 * Graded Betti numbers β_{i,j}: homological degree i, internal degree j.
 * Only nonzero entries are stored.
 */
class BettiTable {
public:
    using Key = std::pair<int, int>;

    BettiTable() = default;

    std::uint64_t at(int i, int j) const;
    void add(int i, int j, std::uint64_t rank);
    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// max i with some β_{i,j} ≠ 0; -1 for the empty table.
    int projective_dimension() const;
    /// max j - i over nonzero entries; 0 for the empty table.
    int regularity() const;

    /// Table of R/I from the table of I: β_{0,0} = 1, β_{i,j}(R/I) = β_{i-1,j}(I).
    BettiTable quotient_from_ideal() const;

    bool operator==(const BettiTable&) const = default;

private:
    std::map<Key, std::uint64_t> entries_;
};

}  // namespace expanse
