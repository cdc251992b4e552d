#include "expanse/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "expanse/error.hpp"

namespace expanse {

namespace {

void require_nonvoid(const SimplicialComplex& complex, const char* op) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, std::string(op) + " requires a nonvoid complex");
}

void require_in_universe(const SimplicialComplex& complex, Face face) {
    if (!face.subset_of(complex.universe_face()))
        throw Error(ErrorCode::UnknownVertex, "face mentions an ordinal outside the universe");
}

std::vector<std::string> names_of(const std::vector<std::string>& universe, Face keep) {
    std::vector<std::string> out;
    keep.for_each([&](int v) { out.push_back(universe[v]); });
    return out;
}

std::vector<Face> compress_all(std::span<const Face> faces, Face keep) {
    std::vector<Face> out;
    out.reserve(faces.size());
    for (Face f : faces)
        out.push_back(compress(f, keep));
    return out;
}

}  // namespace

void validate_universe(const std::vector<std::string>& universe) {
    if (universe.size() > static_cast<std::size_t>(Face::kMaxVertices))
        throw Error(ErrorCode::TooManyVertices,
                    std::to_string(universe.size()) + " vertices (limit " + std::to_string(Face::kMaxVertices) + ")");
    std::unordered_set<std::string> seen;
    for (const auto& name : universe)
        if (!seen.insert(name).second)
            throw Error(ErrorCode::InvalidInput, "duplicate vertex name '" + name + "'");
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> universe, std::vector<Face> candidates) {
    validate_universe(universe);
    const Face all = Face::range(static_cast<int>(universe.size()));
    for (Face f : candidates)
        if (!f.subset_of(all))
            throw Error(ErrorCode::UnknownVertex, "candidate face mentions an ordinal outside the universe");
    facets::maximalize(candidates);
    return SimplicialComplex(std::move(universe), std::move(candidates));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> universe,
                                                 const std::vector<std::vector<std::string>>& candidates) {
    validate_universe(universe);
    std::vector<Face> faces;
    faces.reserve(candidates.size());
    for (const auto& names : candidates) {
        Face f;
        for (const auto& name : names) {
            auto it = std::find(universe.begin(), universe.end(), name);
            if (it == universe.end())
                throw Error(ErrorCode::UnknownVertex, "'" + name + "' is not in the universe");
            f = f.with(static_cast<int>(it - universe.begin()));
        }
        faces.push_back(f);
    }
    return from_faces(std::move(universe), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_incomparable_faces(std::vector<std::string> universe,
                                                            std::vector<Face> facets) {
    validate_universe(universe);
    const Face all = Face::range(static_cast<int>(universe.size()));
    std::sort(facets.begin(), facets.end());
    for (std::size_t a = 0; a < facets.size(); ++a) {
        if (!facets[a].subset_of(all))
            throw Error(ErrorCode::UnknownVertex, "facet mentions an ordinal outside the universe");
        for (std::size_t b = 0; b < facets.size(); ++b)
            if (a != b && facets[a].subset_of(facets[b]))
                throw Error(ErrorCode::TheoremViolation, "facets are not pairwise incomparable");
    }
    return SimplicialComplex(std::move(universe), std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> universe) {
    validate_universe(universe);
    return SimplicialComplex(std::move(universe), {});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> universe) {
    const int n = static_cast<int>(universe.size());
    return from_faces(std::move(universe), {Face::range(n)});
}

std::vector<std::string> SimplicialComplex::numbered_universe(int n, std::string_view prefix) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i)
        out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

int SimplicialComplex::ordinal(std::string_view name) const {
    auto it = std::find(universe_.begin(), universe_.end(), name);
    if (it == universe_.end())
        throw Error(ErrorCode::UnknownVertex, "'" + std::string(name) + "' is not in the universe");
    return static_cast<int>(it - universe_.begin());
}

Face SimplicialComplex::face(const std::vector<std::string>& names) const {
    Face f;
    for (const auto& name : names)
        f = f.with(ordinal(name));
    return f;
}

std::vector<std::string> SimplicialComplex::names(Face face) const {
    return names_of(universe_, face);
}

SimplicialComplex link(const SimplicialComplex& complex, Face face) {
    require_nonvoid(complex, "link");
    require_in_universe(complex, face);
    if (!complex.contains(face))
        throw Error(ErrorCode::FaceNotInComplex, "link of a nonface");
    const Face keep = complex.universe_face() - face;
    return SimplicialComplex::from_faces(names_of(complex.universe(), keep),
                                         compress_all(facets::link(complex.facets(), face), keep));
}

SimplicialComplex deletion(const SimplicialComplex& complex, Face face) {
    require_nonvoid(complex, "deletion");
    require_in_universe(complex, face);
    return SimplicialComplex::from_faces(complex.universe(), facets::deletion(complex.facets(), face));
}

SimplicialComplex induced(const SimplicialComplex& complex, Face w) {
    require_in_universe(complex, w);
    if (complex.is_void())
        return SimplicialComplex::void_complex(names_of(complex.universe(), w));
    return SimplicialComplex::from_faces(names_of(complex.universe(), w),
                                         compress_all(facets::restriction(complex.facets(), w), w));
}

int dim(const SimplicialComplex& complex) {
    require_nonvoid(complex, "dim");
    int best = 0;
    for (Face f : complex.facets())
        best = std::max(best, f.size());
    return best - 1;
}

bool is_pure(const SimplicialComplex& complex) {
    require_nonvoid(complex, "is_pure");
    const int size = complex.facets().front().size();
    return std::all_of(complex.facets().begin(), complex.facets().end(),
                       [size](Face f) { return f.size() == size; });
}

bool is_simplex(const SimplicialComplex& complex) {
    require_nonvoid(complex, "is_simplex");
    return complex.facet_count() == 1;
}

bool is_connected(const SimplicialComplex& complex) {
    require_nonvoid(complex, "is_connected");
    const int n = complex.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (Face f : complex.facets()) {
        if (f.empty())
            continue;
        const int root = find(f.min());
        f.for_each([&](int v) { parent[find(v)] = root; });
    }
    std::set<int> roots;
    complex.vertex_support().for_each([&](int v) { roots.insert(find(v)); });
    return roots.size() <= 1;
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    require_nonvoid(complex, "alexander_dual");
    const Face all = complex.universe_face();
    std::vector<Face> complements;
    complements.reserve(complex.facet_count());
    for (Face f : complex.facets())
        complements.push_back(all - f);
    // Minimal nonfaces are the minimal transversals of facet complements.
    std::vector<Face> nonfaces = facets::minimal_transversals(complements);
    std::vector<Face> dual_facets;
    dual_facets.reserve(nonfaces.size());
    for (Face n : nonfaces)
        dual_facets.push_back(all - n);
    if (dual_facets.empty())
        return SimplicialComplex::void_complex(complex.universe());
    return SimplicialComplex::from_faces(complex.universe(), std::move(dual_facets));
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex) {
    require_nonvoid(complex, "f_vector");
    auto by_size = facets::all_faces_by_size(complex.facets(), std::size_t{1} << 24);
    std::vector<std::uint64_t> out;
    out.reserve(by_size.size());
    for (const auto& level : by_size)
        out.push_back(level.size());
    return out;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
    const auto f = f_vector(complex);
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        // index k holds faces of dimension k - 1
        const std::int64_t term = static_cast<std::int64_t>(f[k]);
        chi += ((k + 1) % 2 == 0) ? term : -term;
    }
    return chi;
}

bool same_faces_by_name(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto named = [](const SimplicialComplex& c) {
        std::set<std::set<std::string>> out;
        for (Face f : c.facets()) {
            auto names = c.names(f);
            out.emplace(names.begin(), names.end());
        }
        return out;
    };
    return a.is_void() == b.is_void() && named(a) == named(b);
}

}  // namespace expanse
