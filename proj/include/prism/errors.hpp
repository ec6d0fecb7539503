#pragma once
// Exception hierarchy for the prism library.  Every failure mode that a caller
// can meaningfully react to gets its own type; all derive from prism::Error.

#include <stdexcept>
#include <string>

namespace prism {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic / precision.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& m) : Error("NotDivisible: " + m) {}
};
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& m) : Error("PrecisionExhausted: " + m) {}
};
struct NotUnit : Error {
    explicit NotUnit(const std::string& m) : Error("NotUnit: " + m) {}
};
struct NonIntegral : Error {
    explicit NonIntegral(const std::string& m) : Error("NonIntegral: " + m) {}
};
struct UnsupportedSubstitution : Error {
    explicit UnsupportedSubstitution(const std::string& m)
        : Error("UnsupportedSubstitution: " + m) {}
};

// Ring-structure preconditions.
struct NotReducedRing : Error {
    explicit NotReducedRing(const std::string& m) : Error("NotReducedRing: " + m) {}
};
struct NotCommuting : Error {
    explicit NotCommuting(const std::string& m) : Error("NotCommuting: " + m) {}
};
struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& m) : Error("NotNilpotent: " + m) {}
};
struct NotACrystal : Error {
    explicit NotACrystal(const std::string& m) : Error("NotACrystal: " + m) {}
};

// Verification outcomes that are hard failures of an asserted identity.
struct LemmaViolated : Error {
    explicit LemmaViolated(const std::string& m) : Error("LemmaViolated: " + m) {}
};
struct IdentityViolated : Error {
    explicit IdentityViolated(const std::string& m) : Error("IdentityViolated: " + m) {}
};
struct DiagramViolated : Error {
    explicit DiagramViolated(const std::string& m) : Error("DiagramViolated: " + m) {}
};
struct ComparisonFailed : Error {
    explicit ComparisonFailed(const std::string& m) : Error("ComparisonFailed: " + m) {}
};

// Bounded-computation outcomes.
struct Inconclusive : Error {
    explicit Inconclusive(const std::string& m) : Error("Inconclusive: " + m) {}
};
struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& m) : Error("WindowTooSmall: " + m) {}
};

// Configuration.
struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& m) : Error("ConfigInvalid: " + m) {}
};

}  // namespace prism
