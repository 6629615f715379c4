#pragma once

#include <stdexcept>
#include <string>

namespace orthocolour {

// Thrown when the requested parameters are outside every construction this
// library provides (as opposed to being malformed).
class NoApplicableConstruction : public std::runtime_error {
public:
    explicit NoApplicableConstruction(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a construction's own output fails re-verification.  Every
// construction checks its result before returning, so this indicates a bug,
// never bad input.
class VerificationFailure : public std::logic_error {
public:
    explicit VerificationFailure(const std::string& what)
        : std::logic_error(what) {}
};

// Thrown by exact_orthochromatic when the node budget runs out before the
// answer is decided.  last_decided_t is the largest colour count whose
// feasibility status was fully resolved, or -1 if none was.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, int last_decided)
        : std::runtime_error(what), last_decided_t(last_decided) {}
    int last_decided_t;
};

}  // namespace orthocolour
