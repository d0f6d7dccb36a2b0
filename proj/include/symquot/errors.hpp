#pragma once

#include <stdexcept>
#include <string>

namespace symquot {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched factor counts, bad slot indices, invalid parameters.
struct dimension_error : error {
    using error::error;
};

// A computation would exceed the configured basis-size or slot guard.
struct resource_limit_error : error {
    using error::error;
};

// A class could not be written in the requested basis with integer
// coordinates; indicates a sign-convention or basis bug upstream.
struct basis_error : error {
    using error::error;
};

} // namespace symquot
