#pragma once

#include <stdexcept>
#include <string>

namespace ddlab {

// Invalid domain input: bad pulse layout, non-integrable spectrum, malformed file.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure: quadrature tolerance not met, Nyquist violation.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// File I/O failure.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ddlab
