#include "symquot/symmetric.hpp"

#include "symquot/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace symquot {

namespace {

void check_guard(const GenusContext& ctx, int d, std::uint64_t max_basis) {
    if (basis_size_clamped(ctx.genus(), d, max_basis) > max_basis)
        throw resource_limit_error("monomial basis (2g+2)^d exceeds the configured limit of " +
                                   std::to_string(max_basis));
}

} // namespace

CohomClass symmetrize(const GenusContext& ctx, const CohomClass& c,
                      std::uint64_t max_basis) {
    const int n = c.factors();
    if (n > kDefaultMaxSymmetrizeSlots)
        throw resource_limit_error("symmetrize over more than " +
                                   std::to_string(kDefaultMaxSymmetrizeSlots) + " factors");
    check_guard(ctx, n, max_basis);
    CohomClass out(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        out += permute(c, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CohomClass orbit_sum(const Monomial& m) {
    const int n = m.size();
    CohomClass out(n);
    // repeated odd letter: the stabilizer contains an odd transposition
    std::vector<Letter> sorted = m.letters();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].odd() && sorted[i] == sorted[i - 1]) return out;

    std::vector<Letter> arrangement = sorted;
    do {
        // sign: inversions among the odd letters (distinct, so well defined)
        std::vector<Letter> odds;
        for (const Letter& l : arrangement)
            if (l.odd()) odds.push_back(l);
        int inv = 0;
        for (std::size_t i = 0; i < odds.size(); ++i)
            for (std::size_t j = i + 1; j < odds.size(); ++j)
                if (odds[i] > odds[j]) ++inv;
        out.add_term(Monomial(arrangement), (inv % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

namespace {

// Enumerate sorted words of length d and degree k; callback on each.
template <typename F>
void for_each_sorted_word(const GenusContext& ctx, int d, int k, F&& f) {
    std::vector<Letter> word;
    word.reserve(static_cast<std::size_t>(d));
    // letters available in increasing order
    std::vector<Letter> alphabet;
    alphabet.push_back(Letter::unit());
    for (int i = 1; i <= ctx.alpha_count(); ++i) alphabet.push_back(Letter::alpha(i));
    alphabet.push_back(Letter::omega());

    auto rec = [&](auto&& self, std::size_t min_letter, int slots_left, int degree_left) -> void {
        if (slots_left == 0) {
            if (degree_left == 0) f(word);
            return;
        }
        if (degree_left > 2 * slots_left) return; // cannot reach k anymore
        for (std::size_t li = min_letter; li < alphabet.size(); ++li) {
            int deg = alphabet[li].degree();
            if (deg > degree_left) continue;
            word.push_back(alphabet[li]);
            self(self, li, slots_left - 1, degree_left - deg);
            word.pop_back();
        }
    };
    rec(rec, 0, d, k);
}

bool has_repeated_alpha(const std::vector<Letter>& sorted_word) {
    for (std::size_t i = 1; i < sorted_word.size(); ++i)
        if (sorted_word[i].odd() && sorted_word[i] == sorted_word[i - 1]) return true;
    return false;
}

} // namespace

InvariantBasis invariant_basis(const GenusContext& ctx, int d, int k,
                               std::uint64_t max_basis) {
    if (d < 1 || k < 0 || k > 2 * d)
        throw dimension_error("invariant basis degree out of range");
    check_guard(ctx, d, max_basis);
    InvariantBasis basis;
    basis.genus = ctx.genus();
    basis.d = d;
    basis.degree = k;
    for_each_sorted_word(ctx, d, k, [&](const std::vector<Letter>& w) {
        if (has_repeated_alpha(w)) return;
        basis.vectors.push_back(orbit_sum(Monomial(w)));
    });
    return basis;
}

Integer invariant_rank(const GenusContext& ctx, int d, int k,
                       std::uint64_t max_basis) {
    if (d < 1 || k < 0 || k > 2 * d) return 0;
    check_guard(ctx, d, max_basis);
    Integer rank = 0;
    for_each_sorted_word(ctx, d, k, [&](const std::vector<Letter>& w) {
        if (!has_repeated_alpha(w)) ++rank;
    });
    return rank;
}

Integer betti_sym_closed(int genus, int d, int k) {
    if (genus < 0 || d < 0) throw dimension_error("invalid genus or degree");
    if (k < 0 || k > 2 * d) return 0;
    if (d == 0) return k == 0 ? 1 : 0;
    Integer total = 0;
    long lo = std::max(0L, static_cast<long>(k) - d);
    long hi = k / 2;
    for (long q = lo; q <= hi; ++q) total += binomial(2L * genus, k - 2 * q);
    return total;
}

std::vector<Integer> poincare_sym(const GenusContext& ctx, int d,
                                  std::uint64_t max_basis) {
    std::vector<Integer> betti;
    betti.reserve(static_cast<std::size_t>(2 * d + 1));
    for (int k = 0; k <= 2 * d; ++k) betti.push_back(invariant_rank(ctx, d, k, max_basis));
    return betti;
}

SymGenerators macdonald_generators(const GenusContext& ctx, int d) {
    if (d < 1) throw dimension_error("symmetric product degree must be positive");
    SymGenerators gens{{}, CohomClass(d)};
    for (int i = 1; i <= ctx.alpha_count(); ++i) {
        CohomClass lam(d);
        for (int j = 1; j <= d; ++j) lam += CohomClass::letter_at(d, j, Letter::alpha(i));
        gens.lambda.push_back(std::move(lam));
    }
    for (int j = 1; j <= d; ++j) gens.eta += CohomClass::letter_at(d, j, Letter::omega());
    return gens;
}

GenerationReport generation_check(const GenusContext& ctx, int d, int k_max,
                                  std::uint64_t max_basis) {
    if (k_max > 2 * d) throw dimension_error("degree bound exceeds 2d");
    check_guard(ctx, d, max_basis);
    const auto gens = macdonald_generators(ctx, d);
    const int twog = ctx.alpha_count();

    GenerationReport report;
    report.genus = ctx.genus();
    report.d = d;
    for (int k = 0; k <= k_max; ++k) {
        std::vector<CohomClass> span;
        // subsets S of {1..2g} with |S| + 2e = k, lambda factors ascending
        for (std::uint32_t mask = 0; mask < (1u << twog); ++mask) {
            int s = __builtin_popcount(mask);
            if (s > k || (k - s) % 2 != 0) continue;
            int e = (k - s) / 2;
            CohomClass prod(d);
            prod.add_term(Monomial(std::vector<Letter>(static_cast<std::size_t>(d),
                                                       Letter::unit())),
                          1);
            for (int i = 0; i < twog; ++i)
                if (mask & (1u << i)) prod = cup(ctx, prod, gens.lambda[static_cast<std::size_t>(i)]);
            for (int t = 0; t < e; ++t) prod = cup(ctx, prod, gens.eta);
            if (!prod.is_zero()) span.push_back(std::move(prod));
        }
        GenerationDegreeReport row;
        row.degree = k;
        row.span_rank = rank_of_span(span);
        row.invariant_rank = invariant_rank(ctx, d, k, max_basis);
        row.pass = row.span_rank == row.invariant_rank;
        report.pass = report.pass && row.pass;
        report.degrees.push_back(std::move(row));
    }
    return report;
}

} // namespace symquot
