#pragma once

#include <stdexcept>
#include <string>

namespace dyckpaint {

// Thrown when an operation would exceed one of the configured resource
// limits (path enumeration size, colouring product, solver vertex cap).
// Callers distinguish this from a genuine identity violation.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dyckpaint
