#pragma once

#include <stdexcept>
#include <string>

namespace exnet {

inline constexpr const char* kVersion = "0.1.0";

// Invalid parameter or argument values (sigma out of range, gdp <= 0, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lookup of an unknown country / column / preset.
struct lookup_error : std::runtime_error {
    explicit lookup_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure: no equilibrium bracket, singular system, non-finite state.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input file; carries a line anchor when one is known.
struct input_error : std::runtime_error {
    input_error(const std::string& file, int line, const std::string& msg)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace exnet
