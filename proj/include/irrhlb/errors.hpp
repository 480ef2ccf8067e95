#ifndef IRRHLB_ERRORS_HPP
#define IRRHLB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irrhlb {

struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Vanishing alpha/beta in the bidiagonalization, or a singular projected matrix.
struct BreakdownError : std::runtime_error {
    explicit BreakdownError(const std::string& what) : std::runtime_error(what) {}
};

// Loss of positive definiteness or a degenerate vector split.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace irrhlb

#endif
