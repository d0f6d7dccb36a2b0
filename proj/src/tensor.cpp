#include "symquot/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symquot {

std::string Monomial::text() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += "|";
        s += letters_[i].text();
    }
    return s;
}

void CohomClass::add_term(const Monomial& m, const Integer& c) {
    if (m.size() != n_) throw dimension_error("monomial length does not match factor count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer CohomClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

CohomClass& CohomClass::operator+=(const CohomClass& rhs) {
    if (rhs.n_ != n_) throw dimension_error("factor count mismatch in addition");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

CohomClass& CohomClass::operator-=(const CohomClass& rhs) {
    if (rhs.n_ != n_) throw dimension_error("factor count mismatch in subtraction");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

CohomClass& CohomClass::operator*=(const Integer& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

int CohomClass::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = m.degree();
        if (deg == -1) deg = d;
        else if (deg != d) return -1;
    }
    return deg;
}

std::string CohomClass::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (c > 0 && !first) out << " + ";
        if (c < 0) out << (first ? "-" : " - ");
        Integer a = abs(c);
        if (a != 1) out << a.str() << "*";
        out << m.text();
        first = false;
    }
    return out.str();
}

CohomClass CohomClass::monomial(Monomial m, Integer c) {
    CohomClass r(m.size());
    r.add_term(m, c);
    return r;
}

CohomClass CohomClass::letter_at(int n, int slot, Letter x, Integer c) {
    if (slot < 1 || slot > n) throw dimension_error("slot out of range");
    std::vector<Letter> letters(static_cast<std::size_t>(n), Letter::unit());
    letters[static_cast<std::size_t>(slot - 1)] = x;
    return monomial(Monomial(std::move(letters)), std::move(c));
}

namespace {

// a ∪ b for single letters; returns (letter, coefficient), coefficient 0 on
// a vanishing product.
std::pair<Letter, int> letter_mul(const GenusContext& ctx, Letter a, Letter b) {
    if (a.is_unit()) return {b, 1};
    if (b.is_unit()) return {a, 1};
    if (a.is_alpha() && b.is_alpha()) {
        int p = ctx.pairing(a.alpha_index(), b.alpha_index());
        return {Letter::omega(), p};
    }
    return {Letter::unit(), 0}; // anything involving w in positive total degree
}

} // namespace

CohomClass cup(const GenusContext& ctx, const CohomClass& a, const CohomClass& b) {
    if (a.factors() != b.factors())
        throw dimension_error("cup of classes with different factor counts");
    const int n = a.factors();
    CohomClass out(n);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // Koszul sign: pairs (k < l) with b_k and a_l odd.
            int odd_b_prefix = 0, transpositions = 0;
            for (int l = 0; l < n; ++l) {
                if (ma.letters()[static_cast<std::size_t>(l)].odd()) transpositions += odd_b_prefix;
                if (mb.letters()[static_cast<std::size_t>(l)].odd()) ++odd_b_prefix;
            }
            int sign = (transpositions % 2 == 0) ? 1 : -1;
            std::vector<Letter> letters;
            letters.reserve(static_cast<std::size_t>(n));
            bool dead = false;
            for (int s = 0; s < n && !dead; ++s) {
                auto [lw, coef] = letter_mul(ctx, ma.letters()[static_cast<std::size_t>(s)],
                                             mb.letters()[static_cast<std::size_t>(s)]);
                if (coef == 0) dead = true;
                else {
                    sign *= coef;
                    letters.push_back(lw);
                }
            }
            if (dead) continue;
            out.add_term(Monomial(std::move(letters)), ca * cb * sign);
        }
    }
    return out;
}

Integer integrate(const CohomClass& c) {
    for (const auto& [m, coef] : c.terms())
        if (m.is_top()) return coef;
    return 0;
}

CohomClass permute(const CohomClass& c, const std::vector<int>& perm) {
    const int n = c.factors();
    if (static_cast<int>(perm.size()) != n)
        throw dimension_error("permutation size does not match factor count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw dimension_error("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    CohomClass out(n);
    for (const auto& [m, coef] : c.terms()) {
        std::vector<Letter> letters(static_cast<std::size_t>(n), Letter::unit());
        std::vector<int> odd_images; // images of odd slots, in source order
        for (int i = 0; i < n; ++i) {
            const Letter& l = m.letters()[static_cast<std::size_t>(i)];
            letters[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = l;
            if (l.odd()) odd_images.push_back(perm[static_cast<std::size_t>(i)]);
        }
        int inv = 0;
        for (std::size_t i = 0; i < odd_images.size(); ++i)
            for (std::size_t j = i + 1; j < odd_images.size(); ++j)
                if (odd_images[i] > odd_images[j]) ++inv;
        out.add_term(Monomial(std::move(letters)), (inv % 2 == 0) ? coef : -coef);
    }
    return out;
}

CohomClass insertion_pullback(const GenusContext& ctx, const CohomClass& c, int k) {
    const int d = c.factors() - 1;
    if (d < 1) throw dimension_error("insertion pullback needs at least two factors");
    if (k < 1 || k > d) throw dimension_error("insertion slot out of range");
    CohomClass out(d);
    for (const auto& [m, coef] : c.terms()) {
        Letter last = m.letters()[static_cast<std::size_t>(d)];
        int sign = 1;
        if (last.odd()) {
            int odd_between = 0;
            for (int s = k; s < d; ++s) // slots k+1..d, 0-based s = k..d-1
                if (m.letters()[static_cast<std::size_t>(s)].odd()) ++odd_between;
            if (odd_between % 2) sign = -1;
        }
        auto [lw, lc] = letter_mul(ctx, m.letters()[static_cast<std::size_t>(k - 1)], last);
        if (lc == 0) continue;
        std::vector<Letter> letters(m.letters().begin(), m.letters().begin() + d);
        letters[static_cast<std::size_t>(k - 1)] = lw;
        out.add_term(Monomial(std::move(letters)), coef * sign * lc);
    }
    return out;
}

CohomClass point_restrict(const CohomClass& c, int slot) {
    const int n = c.factors();
    if (slot < 1 || slot > n) throw dimension_error("restriction slot out of range");
    if (n < 2) throw dimension_error("cannot delete the only factor");
    CohomClass out(n - 1);
    for (const auto& [m, coef] : c.terms()) {
        if (!m.letters()[static_cast<std::size_t>(slot - 1)].is_unit()) continue;
        std::vector<Letter> letters;
        letters.reserve(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
            if (i != slot - 1) letters.push_back(m.letters()[static_cast<std::size_t>(i)]);
        out.add_term(Monomial(std::move(letters)), coef);
    }
    return out;
}

namespace {

// ∫_X y ∪ x for single letters.
Integer curve_pairing(const GenusContext& ctx, Letter y, Letter x) {
    if (y.is_unit() && x.is_omega()) return 1;
    if (y.is_omega() && x.is_unit()) return 1;
    if (y.is_alpha() && x.is_alpha()) return ctx.pairing(y.alpha_index(), x.alpha_index());
    return 0;
}

} // namespace

CohomClass slant_last(const GenusContext& ctx, const CohomClass& c, const CohomClass& dual) {
    if (dual.factors() != 1) throw dimension_error("slant dual must live on one factor");
    const int n = c.factors();
    if (n < 2) throw dimension_error("slant needs at least two factors");
    CohomClass out(n - 1);
    for (const auto& [m, coef] : c.terms()) {
        Letter x = m.letters()[static_cast<std::size_t>(n - 1)];
        Integer weight = 0;
        for (const auto& [dm, dc] : dual.terms())
            weight += dc * curve_pairing(ctx, dm.letters()[0], x);
        if (weight == 0) continue;
        std::vector<Letter> letters(m.letters().begin(), m.letters().end() - 1);
        out.add_term(Monomial(std::move(letters)), coef * weight);
    }
    return out;
}

CohomClass diagonal_class(const GenusContext& ctx, int n, int j, int k) {
    if (j < 1 || k > n || j >= k)
        throw dimension_error("diagonal class needs slots 1 <= j < k <= n");
    const int g = ctx.genus();
    CohomClass out = CohomClass::letter_at(n, j, Letter::omega());
    out += CohomClass::letter_at(n, k, Letter::omega());
    for (int i = 1; i <= 2 * g; ++i) {
        std::vector<Letter> letters(static_cast<std::size_t>(n), Letter::unit());
        letters[static_cast<std::size_t>(j - 1)] = Letter::alpha(i);
        int partner = (i <= g) ? i + g : i - g;
        letters[static_cast<std::size_t>(k - 1)] = Letter::alpha(partner);
        out.add_term(Monomial(std::move(letters)), (i <= g) ? 1 : -1);
    }
    return out;
}

CohomClass alpha_tilde(const GenusContext& ctx, int i) {
    ctx.check_alpha_index(i);
    const int g = ctx.genus();
    if (i <= g) return one_factor(ctx, Letter::alpha(i + g));
    return one_factor(ctx, Letter::alpha(i - g), -1);
}

CohomClass one_factor(const GenusContext& ctx, Letter x, Integer c) {
    if (x.is_alpha()) ctx.check_alpha_index(x.alpha_index());
    CohomClass r(1);
    r.add_term(Monomial({x}), std::move(c));
    return r;
}

} // namespace symquot
