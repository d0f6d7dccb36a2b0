#pragma once

#include "symquot/errors.hpp"

#include <string>

namespace symquot {

// Cohomology of a genus-g curve: H^0 = Z·1, H^1 = Z<a_1..a_2g>, H^2 = Z·w,
// with the symplectic intersection form a_i ∪ a_{i+g} = w for i <= g.
class GenusContext {
public:
    explicit GenusContext(int genus) : genus_(genus) {
        if (genus < 0) throw dimension_error("genus must be nonnegative");
    }

    int genus() const { return genus_; }
    int alpha_count() const { return 2 * genus_; }

    // a_i ∪ a_j = pairing(i,j)·w.  Antisymmetric, determinant one.
    int pairing(int i, int j) const {
        check_alpha_index(i);
        check_alpha_index(j);
        if (j == i + genus_) return 1;
        if (i == j + genus_) return -1;
        return 0;
    }

    void check_alpha_index(int i) const {
        if (i < 1 || i > 2 * genus_)
            throw dimension_error("alpha index " + std::to_string(i) +
                                  " out of range for genus " + std::to_string(genus_));
    }

    bool operator==(const GenusContext&) const = default;

private:
    int genus_;
};

} // namespace symquot
