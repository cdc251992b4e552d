#include "expanse/ideal.hpp"

#include <algorithm>

#include "expanse/complex.hpp"
#include "expanse/error.hpp"

namespace expanse {

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(std::vector<std::string> variables, std::vector<Face> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
    validate_universe(variables_);
    const Face all = variables_face();
    for (Face g : generators_)
        if (!g.subset_of(all))
            throw Error(ErrorCode::UnknownVertex, "generator mentions a variable outside the ring");
    facets::minimalize(generators_);
}

bool SquarefreeMonomialIdeal::contains_monomial(Face support) const {
    return std::any_of(generators_.begin(), generators_.end(), [support](Face g) { return g.subset_of(support); });
}

std::string SquarefreeMonomialIdeal::monomial_string(Face support) const {
    if (support.empty())
        return "1";
    std::string out;
    support.for_each([&](int v) {
        if (!out.empty())
            out += '*';
        out += variables_[v];
    });
    return out;
}

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t rank) {
    if (rank != 0)
        entries_[{i, j}] += rank;
}

int BettiTable::projective_dimension() const {
    int pd = -1;
    for (const auto& [key, rank] : entries_)
        pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::regularity() const {
    int reg = 0;
    bool first = true;
    for (const auto& [key, rank] : entries_) {
        const int r = key.second - key.first;
        reg = first ? r : std::max(reg, r);
        first = false;
    }
    return reg;
}

BettiTable BettiTable::quotient_from_ideal() const {
    BettiTable out;
    out.add(0, 0, 1);
    for (const auto& [key, rank] : entries_)
        out.add(key.first + 1, key.second, rank);
    return out;
}

}  // namespace expanse
