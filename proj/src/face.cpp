#include "expanse/face.hpp"

#include <algorithm>
#include <unordered_set>

#include "expanse/error.hpp"

namespace expanse {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::VertexNotInComplex: return "VertexNotInComplex";
    case ErrorCode::VoidComplex: return "VoidComplex";
    case ErrorCode::InvalidExpansionVector: return "InvalidExpansionVector";
    case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotAShelling: return "NotAShelling";
    case ErrorCode::NotShellable: return "NotShellable";
    case ErrorCode::NotPureOneDimensional: return "NotPureOneDimensional";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    }
    return "Unknown";
}

namespace facets {

void maximalize(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end(),
              [](Face a, Face b) { return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits(); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    kept.reserve(faces.size());
    for (Face f : faces) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(), [f](Face k) { return f.subset_of(k); });
        if (!absorbed)
            kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    faces = std::move(kept);
}

void minimalize(std::vector<Face>& sets) {
    std::sort(sets.begin(), sets.end(),
              [](Face a, Face b) { return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits(); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Face> kept;
    kept.reserve(sets.size());
    for (Face f : sets) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(), [f](Face k) { return k.subset_of(f); });
        if (!absorbed)
            kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    sets = std::move(kept);
}

std::vector<Face> link(std::span<const Face> facets, Face face) {
    // Facets containing `face`, minus `face`, are pairwise incomparable.
    std::vector<Face> out;
    for (Face f : facets)
        if (face.subset_of(f))
            out.push_back(f - face);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> deletion(std::span<const Face> facets, Face face) {
    std::vector<Face> out;
    out.reserve(facets.size());
    for (Face f : facets)
        out.push_back(f - face);
    maximalize(out);
    return out;
}

std::vector<Face> restriction(std::span<const Face> facets, Face w) {
    std::vector<Face> out;
    out.reserve(facets.size());
    for (Face f : facets)
        out.push_back(f & w);
    maximalize(out);
    return out;
}

Face support(std::span<const Face> facets) {
    Face s;
    for (Face f : facets)
        s = s | f;
    return s;
}

bool contains_face(std::span<const Face> facets, Face face) {
    return std::any_of(facets.begin(), facets.end(), [face](Face f) { return face.subset_of(f); });
}

std::vector<Face> from_minimal_nonfaces(std::span<const Face> nonfaces, Face universe) {
    std::vector<Face> current{universe};
    for (Face n : nonfaces) {
        if (n.empty())
            return {};
        std::vector<Face> next;
        next.reserve(current.size() * 2);
        for (Face f : current) {
            if (!n.subset_of(f)) {
                next.push_back(f);
                continue;
            }
            n.for_each([&](int v) { next.push_back(f.without(v)); });
        }
        maximalize(next);
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

std::vector<Face> minimal_transversals(std::span<const Face> sets) {
    std::vector<Face> current{Face{}};
    for (Face c : sets) {
        std::vector<Face> next;
        next.reserve(current.size() * 2);
        for (Face t : current) {
            if (t.intersects(c)) {
                next.push_back(t);
                continue;
            }
            c.for_each([&](int v) { next.push_back(t.with(v)); });
        }
        minimalize(next);
        current = std::move(next);
    }
    return current;
}

std::vector<std::vector<Face>> all_faces_by_size(std::span<const Face> facets, std::size_t cap) {
    std::unordered_set<Face, FaceHash> seen;
    std::size_t total = 0;
    for (Face f : facets) {
        const Face::Word full = f.bits();
        Face::Word sub = full;
        while (true) {
            if (seen.insert(Face(sub)).second && ++total > cap)
                throw Error(ErrorCode::TooLarge, "face count exceeds cap " + std::to_string(cap));
            if (sub == 0)
                break;
            sub = (sub - 1) & full;
        }
    }
    int max_size = 0;
    for (Face f : facets)
        max_size = std::max(max_size, f.size());
    std::vector<std::vector<Face>> by_size(facets.empty() ? 0 : max_size + 1);
    for (Face f : seen)
        by_size[f.size()].push_back(f);
    for (auto& level : by_size)
        std::sort(level.begin(), level.end(), [](Face a, Face b) { return a.bits() < b.bits(); });
    return by_size;
}

}  // namespace facets

}  // namespace expanse
