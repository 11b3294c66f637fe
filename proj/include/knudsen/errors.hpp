#ifndef KNUDSEN_ERRORS_HPP
#define KNUDSEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knudsen {

/// Invalid caller input: out-of-range order, wrong parity, non-positive parameters.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical step failed in a way the underlying theory rules out
/// (rank loss, indefinite boundary matrix). Indicates a bug, not bad input.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace knudsen

#endif // KNUDSEN_ERRORS_HPP
