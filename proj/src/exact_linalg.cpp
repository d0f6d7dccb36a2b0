#include "symquot/exact_linalg.hpp"

#include "symquot/errors.hpp"

#include <map>
#include <utility>

namespace symquot {

int rank_exact(std::vector<std::vector<Integer>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const Integer p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Integer f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] * p - m[rank][c] * f;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

// Dense coefficient rows over the union of monomials appearing in `classes`
// (plus `extra` when present, so a target vector shares the column space).
std::vector<std::vector<Integer>> to_rows(const std::vector<CohomClass>& classes,
                                          const CohomClass* extra) {
    std::map<Monomial, std::size_t> columns;
    auto index_terms = [&columns](const CohomClass& c) {
        for (const auto& [m, coef] : c.terms()) columns.emplace(m, 0);
    };
    for (const CohomClass& c : classes) index_terms(c);
    if (extra) index_terms(*extra);
    std::size_t idx = 0;
    for (auto& [m, i] : columns) i = idx++;

    std::vector<std::vector<Integer>> rows;
    rows.reserve(classes.size() + (extra ? 1 : 0));
    auto emit = [&](const CohomClass& c) {
        std::vector<Integer> row(columns.size(), Integer(0));
        for (const auto& [m, coef] : c.terms()) row[columns.at(m)] = coef;
        rows.push_back(std::move(row));
    };
    for (const CohomClass& c : classes) emit(c);
    if (extra) emit(*extra);
    return rows;
}

} // namespace

int rank_of_span(const std::vector<CohomClass>& classes) {
    if (classes.empty()) return 0;
    return rank_exact(to_rows(classes, nullptr));
}

std::vector<Integer> coordinates_in_basis(const std::vector<CohomClass>& basis,
                                          const CohomClass& v) {
    const std::size_t n = basis.size();
    if (n == 0) {
        if (!v.is_zero()) throw basis_error("nonzero class in empty basis");
        return {};
    }
    auto rows = to_rows(basis, &v);
    const std::size_t cols = rows[0].size();

    // Solve sum_i x_i * basis_i = v: Gauss-Jordan on the system whose
    // equations are indexed by monomials and whose unknowns are the x_i.
    std::vector<std::vector<Rational>> a(cols, std::vector<Rational>(n + 1));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < n; ++r) a[c][r] = Rational(rows[r][c]);
        a[c][n] = Rational(rows[n][c]);
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && rank < cols; ++col) {
        std::size_t p = rank;
        while (p < cols && a[p][col] == 0) ++p;
        if (p == cols) continue;
        std::swap(a[p], a[rank]);
        const Rational piv = a[rank][col];
        for (std::size_t c = col; c <= n; ++c) a[rank][c] /= piv;
        for (std::size_t r = 0; r < cols; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    if (rank < n) throw basis_error("basis classes are linearly dependent");
    for (std::size_t r = rank; r < cols; ++r)
        if (a[r][n] != 0) throw basis_error("class is outside the span of the basis");

    std::vector<Integer> out(n);
    for (std::size_t r = 0; r < rank; ++r) {
        const Rational& q = a[r][n];
        if (denominator(q) != 1) throw basis_error("coordinates are not integral");
        out[pivots[r]] = numerator(q);
    }
    return out;
}

} // namespace symquot
