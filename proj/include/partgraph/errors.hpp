#pragma once

#include <stdexcept>
#include <string>

namespace partgraph {

/// Raised when an operation is called outside its documented domain
/// (illegal transfer, identity transfer where a move is required, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a computed structure contradicts a proved property.
/// Seeing this means an invariant computation is wrong.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPath : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace partgraph
