#include "expanse/homology.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "expanse/error.hpp"

namespace expanse {

FieldChoice FieldChoice::prime_field(std::uint32_t p) {
    bool prime = p >= 2 && p < (std::uint32_t{1} << 31);
    for (std::uint32_t d = 2; prime && static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0)
            prime = false;
    if (!prime)
        throw Error(ErrorCode::InvalidInput, std::to_string(p) + " is not a prime below 2^31");
    return FieldChoice(Kind::PrimeField, p);
}

FieldChoice FieldChoice::parse(std::string_view text) {
    if (text == "q" || text == "Q")
        return rationals();
    if (text.starts_with("gf:")) {
        std::uint32_t p = 0;
        const auto digits = text.substr(3);
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && end == digits.data() + digits.size())
            return prime_field(p);
    }
    throw Error(ErrorCode::InvalidInput, "field must be 'q' or 'gf:<prime>', got '" + std::string(text) + "'");
}

std::string FieldChoice::to_string() const {
    return kind_ == Kind::Rationals ? "q" : "gf:" + std::to_string(p_);
}

bool HomologyRanks::acyclic() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](std::uint64_t r) { return r == 0; });
}

std::int64_t HomologyRanks::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
        const auto r = static_cast<std::int64_t>(ranks_[k]);
        chi += (k % 2 == 1) ? r : -r;  // k = d + 1
    }
    return chi;
}

HomologyRanks reduced_homology(std::span<const Face> facets, FieldChoice field, const HomologyOptions& options) {
    if (facets.empty())
        throw Error(ErrorCode::VoidComplex, "homology of the void complex");
    int top = 0;
    Face common = facets.front();
    for (Face f : facets) {
        top = std::max(top, f.size());
        common = common & f;
    }
    // top = dim + 1; slots for d = -1 .. dim
    std::vector<std::uint64_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    if (top == 0) {
        ranks[0] = 1;  // {∅}
        return HomologyRanks(std::move(ranks));
    }
    if (!common.empty())
        return HomologyRanks(std::move(ranks));  // cone

    const auto faces = facets::all_faces_by_size(facets, options.face_cap);
    // boundary_rank[k] = rank of ∂ from faces of size k to faces of size k-1
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
    boundary_rank[1] = 1;  // every vertex maps onto the empty face
    for (int k = 2; k <= top; ++k) {
        const auto& rows = faces[k - 1];
        std::vector<SparseColumn> columns;
        columns.reserve(faces[k].size());
        for (Face f : faces[k]) {
            SparseColumn col;
            col.reserve(k);
            int position = 0;
            f.for_each([&](int v) {
                const Face facet_of = f.without(v);
                auto it = std::lower_bound(rows.begin(), rows.end(), facet_of,
                                           [](Face a, Face b) { return a.bits() < b.bits(); });
                col.emplace_back(static_cast<std::int32_t>(it - rows.begin()), (position % 2 == 0) ? 1 : -1);
                ++position;
            });
            columns.push_back(std::move(col));
        }
        boundary_rank[k] = matrix_rank(std::move(columns), field);
    }
    for (int k = 0; k <= top; ++k)
        ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    return HomologyRanks(std::move(ranks));
}

HomologyRanks reduced_homology(const SimplicialComplex& complex, FieldChoice field, const HomologyOptions& options) {
    return reduced_homology(complex.facets(), field, options);
}

bool is_cohen_macaulay(const SimplicialComplex& complex, FieldChoice field, const HomologyOptions& options) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "is_cohen_macaulay requires a nonvoid complex");
    const auto faces = facets::all_faces_by_size(complex.facets(), options.face_cap);
    for (const auto& level : faces) {
        for (Face f : level) {
            const auto lk = facets::link(complex.facets(), f);
            int lk_dim = -1;
            for (Face g : lk)
                lk_dim = std::max(lk_dim, g.size() - 1);
            const auto h = reduced_homology(lk, field, options);
            for (int i = -1; i < lk_dim; ++i)
                if (h[i] != 0)
                    return false;
        }
    }
    return true;
}

namespace {

void check_hochster_size(int n, const HochsterOptions& options) {
    if (n > options.max_variables)
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " variables exceed the Hochster cap of " +
                                             std::to_string(options.max_variables));
    if (n > 30)
        throw Error(ErrorCode::TooLarge, "Hochster enumeration is limited to 30 variables");
}

/// Adds the contribution of one restriction Δ_W, |W| = j, to β(I_Δ).
template <typename Sink>
void accumulate(const HomologyRanks& h, int j, Sink&& sink) {
    for (int d = -1; d <= h.top_dimension(); ++d) {
        const int i = j - d - 2;
        if (i >= 0 && h[d] != 0)
            sink(i, j, h[d]);
    }
}

}  // namespace

BettiTable betti_numbers_hochster_serial(const SimplicialComplex& complex, FieldChoice field,
                                         const HochsterOptions& options) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "Hochster's formula needs a nonvoid complex");
    const int n = complex.vertex_count();
    check_hochster_size(n, options);
    BettiTable table;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t w = 1; w < subsets; ++w) {
        const Face subset(w);
        const auto restricted = facets::restriction(complex.facets(), subset);
        const auto h = reduced_homology(restricted, field, options.homology);
        accumulate(h, subset.size(), [&](int i, int j, std::uint64_t r) { table.add(i, j, r); });
    }
    return table;
}

BettiTable betti_numbers_hochster(const SimplicialComplex& complex, FieldChoice field,
                                  const HochsterOptions& options) {
    if (complex.is_void())
        throw Error(ErrorCode::VoidComplex, "Hochster's formula needs a nonvoid complex");
    const int n = complex.vertex_count();
    check_hochster_size(n, options);
    // beta[i][j], i, j ≤ n
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<std::uint64_t> total(width * width, 0);
    const auto subsets = static_cast<std::int64_t>(std::uint64_t{1} << n);
    const auto facets = complex.facets();
    bool failed = false;
    ErrorCode failure_code = ErrorCode::TooLarge;
    std::string failure;

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(width * width, 0);
        std::unordered_map<std::vector<Face>, HomologyRanks, FaceListHash> cache;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t w = 1; w < subsets; ++w) {
            try {
                const Face subset(static_cast<Face::Word>(w));
                auto restricted = facets::restriction(facets, subset);
                auto it = cache.find(restricted);
                if (it == cache.end()) {
                    auto h = reduced_homology(restricted, field, options.homology);
                    it = cache.emplace(std::move(restricted), std::move(h)).first;
                }
                accumulate(it->second, subset.size(),
                           [&](int i, int j, std::uint64_t r) { local[i * width + j] += r; });
            } catch (const Error& e) {
#pragma omp critical(expanse_hochster_failure)
                {
                    failed = true;
                    failure_code = e.code();
                    failure = e.what();
                }
            }
        }
#pragma omp critical(expanse_hochster_reduce)
        for (std::size_t k = 0; k < total.size(); ++k)
            total[k] += local[k];
    }
    if (failed)
        throw Error(failure_code, "Hochster restriction failed: " + failure);

    BettiTable table;
    for (std::size_t i = 0; i < width; ++i)
        for (std::size_t j = 0; j < width; ++j)
            table.add(static_cast<int>(i), static_cast<int>(j), total[i * width + j]);
    return table;
}

BettiTable betti_numbers_hochster(const SquarefreeMonomialIdeal& ideal, FieldChoice field,
                                  const HochsterOptions& options) {
    if (ideal.is_unit())
        throw Error(ErrorCode::InvalidInput, "the unit ideal has no Stanley-Reisner complex");
    const auto facets = facets::from_minimal_nonfaces(ideal.generators(), ideal.variables_face());
    return betti_numbers_hochster(SimplicialComplex::from_faces(ideal.variables(), facets), field, options);
}

QuotientInvariants quotient_invariants(const SimplicialComplex& complex, FieldChoice field,
                                       const HochsterOptions& options) {
    QuotientInvariants out;
    out.quotient_betti = betti_numbers_hochster(complex, field, options).quotient_from_ideal();
    out.projective_dimension = out.quotient_betti.projective_dimension();
    out.regularity = out.quotient_betti.regularity();
    out.depth = complex.vertex_count() - out.projective_dimension;
    out.krull_dimension = dim(complex) + 1;
    return out;
}

}  // namespace expanse
