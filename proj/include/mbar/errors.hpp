#ifndef MBAR_ERRORS_HPP
#define MBAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mbar {

// Validation errors (bad input data or arguments). The CLI maps these to
// exit code 1, internal inconsistencies (path-equivalence failures) to 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : ValidationError {
    DivisionByZero() : ValidationError("division by zero rational function") {}
};

struct PoleAtPoint : ValidationError {
    explicit PoleAtPoint(const std::string& at)
        : ValidationError("denominator vanishes at q = " + at) {}
};

struct PositiveValuationRequired : ValidationError {
    explicit PositiveValuationRequired(const std::string& op)
        : ValidationError(op + ": argument must have zero constant term") {}
};

struct UnitConstantRequired : ValidationError {
    explicit UnitConstantRequired(const std::string& op)
        : ValidationError(op + ": argument must have constant term 1") {}
};

struct LinearTermNotInvertible : ValidationError {
    LinearTermNotInvertible()
        : ValidationError("plethystic inverse needs an invertible coefficient of p1") {}
};

struct NotInLambdaStar : ValidationError {
    NotInLambdaStar()
        : ValidationError("Legendre transform needs rk(f) = a2 x^2/2! + ... with a2 != 0") {}
};

struct NotHomogeneous : ValidationError {
    explicit NotHomogeneous(int n)
        : ValidationError("series is not homogeneous of degree " + std::to_string(n)) {}
};

struct BeyondBound : ValidationError {
    BeyondBound(int want, int have)
        : ValidationError("coefficient extraction at degree " + std::to_string(want) +
                          " beyond reliable bound " + std::to_string(have)) {}
};

struct FiltrationViolation : ValidationError {
    explicit FiltrationViolation(const std::string& op)
        : ValidationError(op + ": argument must lie in F^1 (all terms of weight >= 1)") {}
};

struct SingularSystem : ValidationError {
    explicit SingularSystem(int m)
        : ValidationError("critical system diagonal entry at m = " + std::to_string(m) +
                          " has vanishing constant part") {}
};

struct UnstableInput : ValidationError {
    UnstableInput(int g, int n)
        : ValidationError("(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                          ") violates 2(g - 1) + n > 0") {}
};

struct MissingWeight : ValidationError {
    MissingWeight(int g, int n)
        : ValidationError("no vertex weight supplied for (g, n) = (" + std::to_string(g) +
                          ", " + std::to_string(n) + ")") {}
};

struct OracleScopeExceeded : ValidationError {
    explicit OracleScopeExceeded(int n)
        : ValidationError("tree oracle supports n <= 6, got n = " + std::to_string(n)) {}
};

struct SchemaError : ValidationError {
    explicit SchemaError(const std::string& what)
        : ValidationError("table schema: " + what) {}
};

struct MissingEntry : ValidationError {
    MissingEntry(int n, const std::string& rho)
        : ValidationError("missing table entry at n = " + std::to_string(n) +
                          ", rho = " + rho + " (not covered by complete_to)") {}
};

struct StabilityViolation : ValidationError {
    StabilityViolation(int g, int n)
        : ValidationError("table entry n = " + std::to_string(n) +
                          " below stability bound for genus " + std::to_string(g)) {}
};

}  // namespace mbar

#endif
