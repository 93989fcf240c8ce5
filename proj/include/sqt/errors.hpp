#pragma once

#include <stdexcept>
#include <string>

namespace sqt {

// A computed density matrix violated hermiticity, unit trace, or positivity.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// The Fock-space cutoff is no longer safe for the requested evolution.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double amplitude)
        : std::runtime_error(what), amplitude_(amplitude) {}

    // Largest amplitude observed in the cutoff buffer level.
    double amplitude() const { return amplitude_; }

private:
    double amplitude_;
};

}  // namespace sqt
