#pragma once

#include <stdexcept>
#include <string>

namespace mmsim {

// Malformed or contradictory run configuration (unknown key, bad value, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical degeneracy detected at run time: zero-magnitude cell during
// renormalization, spectral imaginary residue above tolerance, ...
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mmsim
