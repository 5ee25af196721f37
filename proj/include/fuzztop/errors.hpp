#pragma once

#include <stdexcept>
#include <string>

namespace fuzztop {

/// Malformed input: bad grades, mismatched carriers, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well formed but violates a hypothesis of the construction
/// (e.g. the third topology over a non-injective map).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two independent evaluation routes disagreed.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fuzztop
