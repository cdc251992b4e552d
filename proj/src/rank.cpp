// Exact column-reduction rank kernels.
#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "expanse/homology.hpp"

namespace expanse {

namespace {

struct Overflow {};

/// Checked int64 arithmetic.
struct CheckedInt {
    using Value = std::int64_t;
    static Value mul(Value a, Value b) {
        Value r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static Value sub(Value a, Value b) {
        Value r;
        if (__builtin_sub_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static Value gcd(Value a, Value b) { return std::gcd(a, b); }
    static Value from(std::int64_t v) { return v; }
    static bool is_zero(const Value& v) { return v == 0; }
};

struct BigInt {
    using Value = mpz_class;
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value gcd(const Value& a, const Value& b) {
        Value r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static Value from(std::int64_t v) { return Value(static_cast<long>(v)); }
    static bool is_zero(const Value& v) { return sgn(v) == 0; }
};

template <typename Arith>
using Column = std::vector<std::pair<std::int32_t, typename Arith::Value>>;

/// Rank over ℚ of integer columns: each new column is combined with stored
/// pivot columns as c ← p_low·c − c_low·p and divided by its content, so
/// entries stay integral and the column space over ℚ is unchanged.
template <typename Arith>
std::size_t integer_rank(const std::vector<SparseColumn>& input) {
    using Value = typename Arith::Value;
    std::vector<Column<Arith>> pivots;
    std::unordered_map<std::int32_t, std::size_t> pivot_of_row;
    Column<Arith> scratch;
    for (const auto& raw : input) {
        Column<Arith> col;
        col.reserve(raw.size());
        for (const auto& [row, v] : raw)
            if (v != 0)
                col.emplace_back(row, Arith::from(v));
        while (!col.empty()) {
            auto it = pivot_of_row.find(col.back().first);
            if (it == pivot_of_row.end())
                break;
            const Column<Arith>& p = pivots[it->second];
            const Value a = p.back().second;
            const Value b = col.back().second;
            scratch.clear();
            std::size_t x = 0, y = 0;
            while (x < col.size() || y < p.size()) {
                if (y == p.size() || (x < col.size() && col[x].first < p[y].first)) {
                    scratch.emplace_back(col[x].first, Arith::mul(a, col[x].second));
                    ++x;
                } else if (x == col.size() || p[y].first < col[x].first) {
                    scratch.emplace_back(p[y].first, Arith::sub(Arith::from(0), Arith::mul(b, p[y].second)));
                    ++y;
                } else {
                    Value v = Arith::sub(Arith::mul(a, col[x].second), Arith::mul(b, p[y].second));
                    if (!Arith::is_zero(v))
                        scratch.emplace_back(col[x].first, std::move(v));
                    ++x;
                    ++y;
                }
            }
            Value content = Arith::from(0);
            for (const auto& [row, v] : scratch)
                content = Arith::gcd(content, v);
            if (!Arith::is_zero(content) && content != Arith::from(1))
                for (auto& entry : scratch)
                    entry.second /= content;
            std::swap(col, scratch);
        }
        if (!col.empty()) {
            pivot_of_row.emplace(col.back().first, pivots.size());
            pivots.push_back(std::move(col));
        }
    }
    return pivots.size();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp != 0) {
        if (exp & 1U)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

std::size_t modular_rank(const std::vector<SparseColumn>& input, std::uint64_t p) {
    using Col = std::vector<std::pair<std::int32_t, std::uint64_t>>;
    std::vector<Col> pivots;
    std::unordered_map<std::int32_t, std::size_t> pivot_of_row;
    Col scratch;
    auto reduce = [p](std::int64_t v) {
        const std::int64_t m = v % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
    };
    for (const auto& raw : input) {
        Col col;
        col.reserve(raw.size());
        for (const auto& [row, v] : raw) {
            const std::uint64_t r = reduce(v);
            if (r != 0)
                col.emplace_back(row, r);
        }
        while (!col.empty()) {
            auto it = pivot_of_row.find(col.back().first);
            if (it == pivot_of_row.end())
                break;
            const Col& piv = pivots[it->second];
            // Stored pivots are normalized to leading coefficient 1.
            const std::uint64_t factor = col.back().second;
            scratch.clear();
            std::size_t x = 0, y = 0;
            while (x < col.size() || y < piv.size()) {
                if (y == piv.size() || (x < col.size() && col[x].first < piv[y].first)) {
                    scratch.push_back(col[x++]);
                } else if (x == col.size() || piv[y].first < col[x].first) {
                    scratch.emplace_back(piv[y].first, (p - factor * piv[y].second % p) % p);
                    ++y;
                } else {
                    const std::uint64_t v = (col[x].second + p - factor * piv[y].second % p) % p;
                    if (v != 0)
                        scratch.emplace_back(col[x].first, v);
                    ++x;
                    ++y;
                }
            }
            std::swap(col, scratch);
        }
        if (!col.empty()) {
            const std::uint64_t inv = pow_mod(col.back().second, p - 2, p);
            for (auto& entry : col)
                entry.second = entry.second * inv % p;
            pivot_of_row.emplace(col.back().first, pivots.size());
            pivots.push_back(std::move(col));
        }
    }
    return pivots.size();
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseColumn> columns, FieldChoice field) {
    for (auto& col : columns)
        std::sort(col.begin(), col.end());
    if (field.kind() == FieldChoice::Kind::PrimeField)
        return modular_rank(columns, field.characteristic());
    try {
        return integer_rank<CheckedInt>(columns);
    } catch (const Overflow&) {
        return integer_rank<BigInt>(columns);
    }
}

}  // namespace expanse
