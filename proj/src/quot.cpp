#include "symquot/quot.hpp"

#include "symquot/symmetric.hpp"

#include <sstream>

namespace symquot {

std::vector<Composition> compositions(int r, long d) {
    if (r < 1 || d < 0) throw dimension_error("compositions need r >= 1, d >= 0");
    std::vector<Composition> out;
    Composition current;
    current.parts.assign(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int idx, long remaining) -> void {
        if (idx == r - 1) {
            current.parts[static_cast<std::size_t>(idx)] = remaining;
            out.push_back(current);
            return;
        }
        for (long m = remaining; m >= 0; --m) {
            current.parts[static_cast<std::size_t>(idx)] = m;
            self(self, idx + 1, remaining - m);
        }
    };
    rec(rec, 0, d);
    return out;
}

long cell_dimension(const Composition& m, long d) {
    if (m.total() != d)
        throw dimension_error("composition does not sum to the requested degree");
    return d + m.shift();
}

std::string PoincarePolynomial::poly_text() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (betti[k] == 0) continue;
        if (!first) out << " + ";
        out << betti[k].str();
        if (k >= 1) out << "*t";
        if (k >= 2) out << "^" << k;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

namespace {

// Betti sequence of Sym^{m_1}X x ... x Sym^{m_r}X by convolution.
std::vector<Integer> product_betti(int genus, const Composition& m) {
    std::vector<Integer> acc{1};
    for (long part : m.parts) {
        if (part == 0) continue;
        std::vector<Integer> factor;
        factor.reserve(static_cast<std::size_t>(2 * part + 1));
        for (long k = 0; k <= 2 * part; ++k)
            factor.push_back(betti_sym_closed(genus, part, static_cast<int>(k)));
        std::vector<Integer> next(acc.size() + factor.size() - 1, Integer(0));
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < factor.size(); ++b)
                next[a + b] += acc[a] * factor[b];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

Integer betti_quot(int genus, int r, long d, long i) {
    if (genus < 0 || r < 1 || d < 0) throw dimension_error("invalid Quot parameters");
    if (i < 0 || i > 2 * r * d) return 0;
    Integer total = 0;
    for (const Composition& m : compositions(r, d)) {
        long j = i - 2 * m.shift();
        if (j < 0 || j > 2 * d) continue;
        const auto betti = product_betti(genus, m);
        if (static_cast<std::size_t>(j) < betti.size()) total += betti[static_cast<std::size_t>(j)];
    }
    return total;
}

PoincarePolynomial poincare_quot(int genus, int r, long d) {
    if (genus < 0 || r < 1 || d < 0) throw dimension_error("invalid Quot parameters");
    PoincarePolynomial p;
    p.complex_dim = static_cast<long>(r) * d;
    p.betti.assign(static_cast<std::size_t>(2 * p.complex_dim + 1), Integer(0));
    for (const Composition& m : compositions(r, d)) {
        const auto betti = product_betti(genus, m);
        const long offset = 2 * m.shift();
        for (std::size_t j = 0; j < betti.size(); ++j)
            p.betti[static_cast<std::size_t>(offset) + j] += betti[j];
    }
    return p;
}

PoincarePolynomial poincare_sym_closed(int genus, long d) {
    PoincarePolynomial p;
    p.complex_dim = d;
    p.betti.reserve(static_cast<std::size_t>(2 * d + 1));
    for (long k = 0; k <= 2 * d; ++k)
        p.betti.push_back(betti_sym_closed(genus, d, static_cast<int>(k)));
    return p;
}

Integer euler_sym(int genus, long d) {
    return series_coefficient_one_minus_q_pow(2L * genus - 2, d);
}

std::string H2BasisLabel::text() const {
    switch (tag) {
        case Tag::c: return "c";
        case Tag::gamma2: return "gamma2";
        case Tag::eta: return "eta";
        case Tag::alpha_pair:
            return "a" + std::to_string(i) + "^a" + std::to_string(j);
    }
    return "?";
}

std::vector<H2BasisLabel> h2_basis_labels(int genus, int r, long d) {
    if (d < 2 || r < 1) throw dimension_error("H2 basis labels need d >= 2, r >= 1");
    std::vector<H2BasisLabel> labels;
    if (r >= 2) {
        labels.push_back({H2BasisLabel::Tag::c, 0, 0});
        labels.push_back({H2BasisLabel::Tag::gamma2, 0, 0});
    } else {
        labels.push_back({H2BasisLabel::Tag::eta, 0, 0});
    }
    for (int i = 1; i <= 2 * genus; ++i)
        for (int j = i + 1; j <= 2 * genus; ++j)
            labels.push_back({H2BasisLabel::Tag::alpha_pair, i, j});
    return labels;
}

} // namespace symquot
