#pragma once

#include <stdexcept>
#include <string>

namespace bondage {

/// Malformed input: bad ids, parse failures, missing files or sections.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A well-formed request whose mathematical precondition does not hold
/// (non-planar input to a planar-only routine, degree bound exceeded, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bondage
