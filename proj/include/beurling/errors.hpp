#pragma once

#include <stdexcept>
#include <string>

namespace beurling {

struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct connectivity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct inversion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check was asked to run outside its hypothesis region. The message names
// the violated condition and, where one exists, the minimal admissible value.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace beurling
