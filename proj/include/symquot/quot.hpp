#pragma once

// Torus-fixed-point bookkeeping for the Quot scheme Q(r,d) of rank-r
// degree -d subsheaves of the trivial bundle: weak compositions index the
// fixed loci, the shift sum_{i}(i-1)m_i gives the cell offset, and Betti
// numbers assemble from products of symmetric-product Betti numbers.

#include "symquot/integers.hpp"
#include "symquot/errors.hpp"

#include <string>
#include <vector>

namespace symquot {

// Ordered r-tuple of nonnegative integers summing to d.  The classical
// sources call these partitions; the fixed loci are indexed by ordered
// tuples, so the engine keeps the order.
struct Composition {
    std::vector<long> parts;

    long total() const {
        long t = 0;
        for (long p : parts) t += p;
        return t;
    }
    // sum_{i=1}^r (i-1) m_i
    long shift() const {
        long s = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += static_cast<long>(i) * parts[i];
        return s;
    }
    bool operator==(const Composition&) const = default;
};

// All weak compositions of d into r parts, first part largest first
// (descending lexicographic; shift is nondecreasing for r = 2).
std::vector<Composition> compositions(int r, long d);

// Dimension d + shift of the attracting cell over the fixed locus of m.
long cell_dimension(const Composition& m, long d);

struct PoincarePolynomial {
    long complex_dim = 0;
    std::vector<Integer> betti; // b_0 .. b_{2*complex_dim}

    bool palindromic() const {
        for (std::size_t k = 0; k < betti.size(); ++k)
            if (betti[k] != betti[betti.size() - 1 - k]) return false;
        return true;
    }
    Integer euler() const {
        Integer e = 0;
        for (std::size_t k = 0; k < betti.size(); ++k)
            e += (k % 2 == 0) ? betti[k] : -betti[k];
        return e;
    }
    std::string poly_text() const;
};

Integer betti_quot(int genus, int r, long d, long i);
PoincarePolynomial poincare_quot(int genus, int r, long d);

// Poincaré polynomial of Sym^d X from the closed-form Betti numbers.
PoincarePolynomial poincare_sym_closed(int genus, long d);

// chi(Sym^d X) = [q^d] (1-q)^{2g-2}
Integer euler_sym(int genus, long d);

struct H2BasisLabel {
    enum class Tag { c, gamma2, alpha_pair, eta };
    Tag tag = Tag::c;
    int i = 0, j = 0; // alpha_pair only
    std::string text() const;
    bool operator==(const H2BasisLabel&) const = default;
};

// Labeled basis of H^2(Q(r,d)) for d >= 2: {c, gamma2, a_i a_j} when r >= 2
// and {eta, a_i a_j} when r = 1.
std::vector<H2BasisLabel> h2_basis_labels(int genus, int r, long d);

} // namespace symquot
