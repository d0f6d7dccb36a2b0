#include "symquot/divisor.hpp"

namespace symquot {

CohomClass universal_divisor_pullback(const GenusContext& ctx, int d) {
    if (d < 1) throw dimension_error("universal divisor needs d >= 1");
    CohomClass u(d + 1);
    for (int k = 1; k <= d; ++k) u += diagonal_class(ctx, d + 1, k, d + 1);
    return u;
}

std::string dual_label_text(const DualLabel& label) {
    if (const auto* e = std::get_if<EtaDualLabel>(&label))
        return "eta^" + std::to_string(e->j) + "v";
    const auto& l = std::get<LambdaDualLabel>(label);
    return "l" + std::to_string(l.i) + "^" + std::to_string(l.j) +
           ".l" + std::to_string(l.i2) + "^" + std::to_string(l.j2) + "v";
}

CohomClass dual_class(const GenusContext& ctx, int d, const DualLabel& label) {
    const int n = d + 1;
    std::vector<Letter> letters(static_cast<std::size_t>(n), Letter::omega());
    if (const auto* e = std::get_if<EtaDualLabel>(&label)) {
        if (e->j < 1 || e->j > n) throw dimension_error("eta dual slot out of range");
        letters[static_cast<std::size_t>(e->j - 1)] = Letter::unit();
        return CohomClass::monomial(Monomial(std::move(letters)));
    }
    const auto& l = std::get<LambdaDualLabel>(label);
    if (l.j < 1 || l.j2 > n || l.j >= l.j2) throw dimension_error("lambda dual slots out of range");
    if (l.i == l.i2) throw dimension_error("lambda dual needs distinct alpha indices");
    // ã carries a sign; fold both signs into the coefficient of one word
    const CohomClass t1 = alpha_tilde(ctx, l.i);
    const CohomClass t2 = alpha_tilde(ctx, l.i2);
    const auto& [m1, c1] = *t1.terms().begin();
    const auto& [m2, c2] = *t2.terms().begin();
    letters[static_cast<std::size_t>(l.j - 1)] = m1.letters()[0];
    letters[static_cast<std::size_t>(l.j2 - 1)] = m2.letters()[0];
    return CohomClass::monomial(Monomial(std::move(letters)), c1 * c2);
}

CohomClass degree2_basis_class(const GenusContext& ctx, int d, const DualLabel& label) {
    const int n = d + 1;
    if (const auto* e = std::get_if<EtaDualLabel>(&label))
        return CohomClass::letter_at(n, e->j, Letter::omega());
    const auto& l = std::get<LambdaDualLabel>(label);
    return cup(ctx, CohomClass::letter_at(n, l.j, Letter::alpha(l.i)),
               CohomClass::letter_at(n, l.j2, Letter::alpha(l.i2)));
}

namespace {

std::vector<DualLabel> all_dual_labels(const GenusContext& ctx, int d) {
    std::vector<DualLabel> labels;
    const int n = d + 1;
    for (int j = 1; j <= n; ++j) labels.push_back(EtaDualLabel{j});
    for (int j = 1; j <= n; ++j)
        for (int j2 = j + 1; j2 <= n; ++j2)
            for (int i = 1; i <= ctx.alpha_count(); ++i)
                for (int i2 = 1; i2 <= ctx.alpha_count(); ++i2)
                    if (i != i2) labels.push_back(LambdaDualLabel{i, i2, j, j2});
    return labels;
}

} // namespace

PairingTable pairing_table(const GenusContext& ctx, int d) {
    if (d < 1) throw dimension_error("pairing table needs d >= 1");
    PairingTable table;
    table.genus = ctx.genus();
    table.d = d;
    table.columns = all_dual_labels(ctx, d);
    table.entries.assign(static_cast<std::size_t>(d), {});
    for (int k = 1; k <= d; ++k) {
        auto& row = table.entries[static_cast<std::size_t>(k - 1)];
        row.reserve(table.columns.size());
        for (const DualLabel& label : table.columns)
            row.push_back(integrate(insertion_pullback(ctx, dual_class(ctx, d, label), k)));
    }
    return table;
}

Integer expected_pairing_entry(const GenusContext& ctx, int d, int k, const DualLabel& label) {
    if (const auto* e = std::get_if<EtaDualLabel>(&label))
        return (e->j == k || e->j == d + 1) ? 1 : 0;
    const auto& l = std::get<LambdaDualLabel>(label);
    if (l.j != k || l.j2 != d + 1) return 0;
    return integrate(cup(ctx, alpha_tilde(ctx, l.i), alpha_tilde(ctx, l.i2)));
}

bool pairing_table_matches_expected(const GenusContext& ctx, const PairingTable& table) {
    for (int k = 1; k <= table.d; ++k)
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            if (table.entries[static_cast<std::size_t>(k - 1)][c] !=
                expected_pairing_entry(ctx, table.d, k, table.columns[c]))
                return false;
    return true;
}

DivisorFormulaReport verify_divisor_class_formula(const GenusContext& ctx, int d,
                                                  Integer top_coefficient) {
    if (d < 1) throw dimension_error("divisor formula needs d >= 1");
    const int n = d + 1;
    const int g = ctx.genus();

    // right side: eta ⊗ 1 + n(1 ⊗ w) + sum lambda_i ⊗ a_{i+g} - sum lambda_i ⊗ a_{i-g}
    CohomClass rhs(n);
    for (int j = 1; j <= d; ++j) rhs += CohomClass::letter_at(n, j, Letter::omega());
    rhs += CohomClass::letter_at(n, n, Letter::omega(), top_coefficient);
    for (int i = 1; i <= 2 * g; ++i) {
        CohomClass lambda_ext(n); // q* lambda_i on the first d slots
        for (int j = 1; j <= d; ++j) lambda_ext += CohomClass::letter_at(n, j, Letter::alpha(i));
        const int partner = (i <= g) ? i + g : i - g;
        CohomClass term = cup(ctx, lambda_ext, CohomClass::letter_at(n, n, Letter::alpha(partner)));
        if (i <= g) rhs += term;
        else rhs -= term;
    }

    const CohomClass lhs = universal_divisor_pullback(ctx, d);
    DivisorFormulaReport report;
    report.genus = g;
    report.d = d;
    report.top_coefficient = std::move(top_coefficient);
    const CohomClass diff = lhs - rhs;
    for (const auto& [m, c] : diff.terms())
        report.discrepancies.push_back({m, lhs.coefficient(m), rhs.coefficient(m)});
    report.pass = report.discrepancies.empty();
    return report;
}

DivisorPullbackReport verify_divisor_pullbacks(const GenusContext& ctx, int d) {
    if (d < 1) throw dimension_error("divisor pullbacks need d >= 1");
    const CohomClass u = universal_divisor_pullback(ctx, d);

    DivisorPullbackReport report;
    report.genus = ctx.genus();
    report.d = d;

    CohomClass eta(d);
    for (int j = 1; j <= d; ++j) eta += CohomClass::letter_at(d, j, Letter::omega());
    report.point_restriction_pass = point_restrict(u, d + 1) == eta;

    report.pass = report.point_restriction_pass;
    for (int i = 1; i <= ctx.alpha_count(); ++i) {
        CohomClass lambda(d);
        for (int j = 1; j <= d; ++j) lambda += CohomClass::letter_at(d, j, Letter::alpha(i));
        const bool ok = slant_last(ctx, u, one_factor(ctx, Letter::alpha(i))) == lambda;
        report.slant_pass.push_back(ok);
        report.pass = report.pass && ok;
    }
    return report;
}

} // namespace symquot
