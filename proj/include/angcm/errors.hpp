#pragma once

#include <stdexcept>
#include <string>

namespace angcm {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial division left a remainder. Signals a logic bug upstream:
// every division performed by the operators here is exact by construction.
struct DivisionNotExact : Error {
    explicit DivisionNotExact(const std::string& what = "division not exact") : Error(what) {}
};

// A radial expression failed to resolve into a polynomial (non-integer or
// negative power of r^2 with a nonzero coefficient). Wrong prefactor power.
struct NotPolynomial : Error {
    explicit NotPolynomial(const std::string& what = "radial exponents do not resolve to a polynomial") : Error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what = "input is not permutation-symmetric") : Error(what) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what = "input is not reflection-invariant") : Error(what) {}
};

struct UnsupportedCoupling : Error {
    explicit UnsupportedCoupling(const std::string& what = "coupling must be a nonnegative integer here") : Error(what) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& what = "unsupported root system") : Error(what) {}
};

// An exact rank came out different from the counting formula.
struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what = "exact rank differs from counting formula") : Error(what) {}
};

struct HarmonicityLost : Error {
    explicit HarmonicityLost(const std::string& what = "transported polynomial is not annihilated by L(g)") : Error(what) {}
};

struct NegativeMultiplicity : Error {
    explicit NegativeMultiplicity(const std::string& what = "virtual character has a negative multiplicity") : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace angcm
