#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace expanse {

/**
 * A finite set of vertex ordinals stored as a 64-bit mask.
 *
 * Ordinals index into the owning object's universe; bit v set means vertex v
 * belongs to the face. The ordering operator< is the lexicographic order on
 * the ascending element sequences, which is the canonical facet order.
 */
class Face {
public:
    using Word = std::uint64_t;
    static constexpr int kMaxVertices = 64;

    constexpr Face() = default;
    constexpr explicit Face(Word bits) : bits_(bits) {}

    static Face of(std::initializer_list<int> ordinals) {
        Face f;
        for (int v : ordinals)
            f = f.with(v);
        return f;
    }
    static Face of(std::span<const int> ordinals) {
        Face f;
        for (int v : ordinals)
            f = f.with(v);
        return f;
    }
    /// The full set {0, ..., n-1}.
    static constexpr Face range(int n) {
        return Face(n >= kMaxVertices ? ~Word{0} : ((Word{1} << n) - 1));
    }

    constexpr Word bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }
    constexpr Face with(int v) const { return Face(bits_ | (Word{1} << v)); }
    constexpr Face without(int v) const { return Face(bits_ & ~(Word{1} << v)); }
    /// Smallest ordinal; undefined on the empty face.
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
    constexpr bool operator==(const Face&) const = default;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (Word w = bits_; w != 0; w &= w - 1)
            fn(std::countr_zero(w));
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend constexpr bool operator<(Face a, Face b) {
        const Word diff = a.bits_ ^ b.bits_;
        if (diff == 0)
            return false;
        const int x = std::countr_zero(diff);
        const Word above = ~Word{0} << x << 1;
        // The sequences agree below x; the one holding x continues with x,
        // the other with its next element above x (or ends).
        if (a.contains(x))
            return (b.bits_ & above) != 0;
        return (a.bits_ & above) == 0;
    }

private:
    Word bits_ = 0;
};

struct FaceHash {
    std::size_t operator()(Face f) const noexcept { return std::hash<Face::Word>{}(f.bits()); }
};

struct FaceListHash {
    std::size_t operator()(const std::vector<Face>& faces) const noexcept {
        std::size_t h = faces.size();
        for (Face f : faces)
            h ^= std::hash<Face::Word>{}(f.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Maps the bits of `face` lying in `keep` onto consecutive positions.
constexpr Face compress(Face face, Face keep) {
    Face::Word out = 0;
    int pos = 0;
    for (Face::Word w = keep.bits(); w != 0; w &= w - 1, ++pos)
        if (face.contains(std::countr_zero(w)))
            out |= Face::Word{1} << pos;
    return Face(out);
}

namespace facets {

/// Keeps the inclusion-maximal, distinct faces and sorts them canonically.
void maximalize(std::vector<Face>& faces);

/// Keeps the inclusion-minimal, distinct sets and sorts them canonically.
void minimalize(std::vector<Face>& sets);

/// Facets of the link of `face` in the complex generated by `facets`.
std::vector<Face> link(std::span<const Face> facets, Face face);

/// Facets of the deletion of `face`.
std::vector<Face> deletion(std::span<const Face> facets, Face face);

/// Facets of the restriction to the vertex set `w`.
std::vector<Face> restriction(std::span<const Face> facets, Face w);

/// Union of all facets.
Face support(std::span<const Face> facets);

bool contains_face(std::span<const Face> facets, Face face);

/**
 * Facets of the complex whose minimal nonfaces are `nonfaces`, over the
 * vertex set `universe`. The empty face is a nonface only when listed.
 * Returns an empty list (the void complex) when the empty set is a nonface.
 */
std::vector<Face> from_minimal_nonfaces(std::span<const Face> nonfaces, Face universe);

/// Minimal sets meeting every member of `sets` (minimal transversals).
std::vector<Face> minimal_transversals(std::span<const Face> sets);

/// All faces of the complex, each listed once, grouped by ascending size.
std::vector<std::vector<Face>> all_faces_by_size(std::span<const Face> facets,
                                                 std::size_t cap);

}  // namespace facets

}  // namespace expanse
