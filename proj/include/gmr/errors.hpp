#pragma once

#include <stdexcept>
#include <string>

namespace gmr {

// Base class for everything this library throws on bad input or broken
// invariants. Fuel exhaustion is reported through result statuses, never
// through exceptions.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gmr
