#include "expanse/expansion.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "expanse/error.hpp"

namespace expanse {

ExpansionVector::ExpansionVector(std::vector<int> counts) : counts_(std::move(counts)) {
    offsets_.reserve(counts_.size() + 1);
    offsets_.push_back(0);
    for (int c : counts_) {
        if (c < 1)
            throw Error(ErrorCode::InvalidExpansionVector, "copy counts must be positive, got " + std::to_string(c));
        offsets_.push_back(offsets_.back() + c);
    }
}

ExpansionVector ExpansionVector::parse(std::string_view text) {
    std::vector<int> counts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw Error(ErrorCode::InvalidExpansionVector, "cannot parse '" + std::string(text) + "'");
        counts.push_back(value);
        pos = comma + 1;
    }
    return ExpansionVector(std::move(counts));
}

ExpandedVertex ExpansionVector::vertex(int ordinal) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), ordinal);
    const int base = static_cast<int>(it - offsets_.begin()) - 1;
    return {base, ordinal - offsets_[base] + 1};
}

Face ExpansionVector::copies_of(int base) const {
    return Face::range(offsets_[base + 1]) - Face::range(offsets_[base]);
}

std::vector<std::string> ExpansionVector::expanded_universe(const std::vector<std::string>& base_names) const {
    std::vector<std::string> out;
    out.reserve(total());
    for (int b = 0; b < size(); ++b)
        for (int r = 1; r <= counts_[b]; ++r)
            out.push_back(base_names[b] + "_" + std::to_string(r));
    return out;
}

Face ExpansionVector::expanded_face(Face face, std::span<const int> copies) const {
    Face out;
    std::size_t t = 0;
    face.for_each([&](int base) { out = out.with(ordinal(base, copies[t++])); });
    return out;
}

std::vector<std::vector<int>> ExpansionVector::copy_tuples(Face face) const {
    const auto bases = face.elements();
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(bases.size(), 1);
    while (true) {
        out.push_back(tuple);
        // odometer increment, last coordinate fastest
        int t = static_cast<int>(bases.size()) - 1;
        while (t >= 0 && tuple[t] == counts_[bases[t]]) {
            tuple[t] = 1;
            --t;
        }
        if (t < 0)
            break;
        ++tuple[t];
    }
    return out;
}

Face ExpansionVector::base_of(Face expanded) const {
    Face out;
    expanded.for_each([&](int o) { out = out.with(vertex(o).base); });
    return out;
}

std::string ExpansionVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(counts_[i]);
    }
    return out;
}

namespace {

void require_matching(const ExpansionVector& s, int vertex_count) {
    if (s.size() != vertex_count)
        throw Error(ErrorCode::InvalidExpansionVector, "expansion vector has " + std::to_string(s.size()) +
                                                           " entries for " + std::to_string(vertex_count) +
                                                           " vertices");
    if (s.total() > Face::kMaxVertices)
        throw Error(ErrorCode::TooManyVertices, "expansion has " + std::to_string(s.total()) + " vertices");
}

using PairFace = std::set<ExpandedVertex>;
using PairComplex = std::set<PairFace>;

/// Facets as (base, copy) sets; `base_of` maps the expansion's own base
/// ordinals to ordinals of the reference universe.
template <typename BaseMap>
PairComplex as_pairs(const SimplicialComplex& expanded, const ExpansionVector& s, BaseMap base_of) {
    PairComplex out;
    for (Face f : expanded.facets()) {
        PairFace pf;
        f.for_each([&](int o) {
            ExpandedVertex v = s.vertex(o);
            pf.insert({base_of(v.base), v.copy});
        });
        out.insert(std::move(pf));
    }
    return out;
}

ExpansionVector drop_entry(const ExpansionVector& s, int base) {
    std::vector<int> counts = s.counts();
    counts.erase(counts.begin() + base);
    return ExpansionVector(std::move(counts));
}

void require_vertex_in_complex(const SimplicialComplex& complex, int base) {
    if (base < 0 || base >= complex.vertex_count() || !complex.vertex_support().contains(base))
        throw Error(ErrorCode::VertexNotInComplex, "vertex ordinal " + std::to_string(base) + " lies in no face");
}

}  // namespace

SimplicialComplex expand_complex(const SimplicialComplex& complex, const ExpansionVector& s) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "cannot expand the void complex");
    require_matching(s, complex.vertex_count());
    std::vector<Face> out;
    for (Face f : complex.facets())
        for (const auto& tuple : s.copy_tuples(f))
            out.push_back(s.expanded_face(f, tuple));
    return SimplicialComplex::from_incomparable_faces(s.expanded_universe(complex.universe()), std::move(out));
}

Hypergraph expand_hypergraph(const Hypergraph& h, const ExpansionVector& s) {
    require_matching(s, h.vertex_count());
    std::vector<Face> edges;
    for (Face e : h.edges())
        for (const auto& tuple : s.copy_tuples(e))
            edges.push_back(s.expanded_face(e, tuple));
    for (int b = 0; b < s.size(); ++b)
        for (int j = 1; j <= s[b]; ++j)
            for (int k = j + 1; k <= s[b]; ++k)
                edges.push_back(Face{}.with(s.ordinal(b, j)).with(s.ordinal(b, k)));
    return Hypergraph(s.expanded_universe(h.universe()), std::move(edges));
}

bool link_identity_check(const SimplicialComplex& complex, const ExpansionVector& s, int base) {
    require_vertex_in_complex(complex, base);
    const auto expanded = expand_complex(complex, s);
    const auto lhs = link(expanded, Face{}.with(s.ordinal(base, 1)));
    // lhs lives over the expanded universe minus x_{i1}; recover ordinals by name.
    PairComplex left;
    for (Face f : lhs.facets()) {
        PairFace pf;
        f.for_each([&](int o) { pf.insert(s.vertex(expanded.ordinal(lhs.universe()[o]))); });
        left.insert(std::move(pf));
    }
    const auto base_link = link(complex, Face{}.with(base));
    const auto reduced = drop_entry(s, base);
    const auto rhs = expand_complex(base_link, reduced);
    const PairComplex right = as_pairs(rhs, reduced, [base](int b) { return b >= base ? b + 1 : b; });
    return left == right;
}

bool deletion_identity_check(const SimplicialComplex& complex, const ExpansionVector& s, int base) {
    require_vertex_in_complex(complex, base);
    const auto expanded = expand_complex(complex, s);
    const auto lhs = deletion(expanded, Face{}.with(s.ordinal(base, 1)));
    PairComplex left;
    for (Face f : lhs.facets()) {
        PairFace pf;
        f.for_each([&](int o) {
            ExpandedVertex v = s.vertex(o);
            if (v.base == base)
                --v.copy;
            pf.insert(v);
        });
        left.insert(std::move(pf));
    }
    auto identity = [](int b) { return b; };
    if (s[base] > 1) {
        std::vector<int> counts = s.counts();
        --counts[base];
        const ExpansionVector fewer(std::move(counts));
        return left == as_pairs(expand_complex(complex, fewer), fewer, identity);
    }
    const auto base_deletion = deletion(complex, Face{}.with(base));
    return left == as_pairs(expand_complex(base_deletion, s), s, identity);
}

}  // namespace expanse
