#pragma once

#include <stdexcept>
#include <string>

namespace idas {

// Thrown for contract violations (bad shapes, out-of-range inputs, malformed
// files). The CLI maps these to categorized exit codes.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& msg) {
    if (!ok) throw InvalidArgument(msg);
}

}  // namespace idas
