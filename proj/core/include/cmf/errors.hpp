#pragma once

#include <stdexcept>
#include <string>

namespace cmf {

// Base class for violations of mathematical contracts, as opposed to
// programming errors (which use assertions or the std exception types).
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero in prime field") {}
};

struct SingularMatrix : MathError {
    SingularMatrix() : MathError("linear change of coordinates is singular") {}
};

struct BadPivot : MathError {
    BadPivot() : MathError("linear form has zero coefficient on the last variable") {}
};

struct UnitMonomial : MathError {
    UnitMonomial() : MathError("operation undefined for the unit monomial") {}
};

struct NotStable : MathError {
    NotStable() : MathError("monomial ideal is not stable") {}
};

struct NotEquigenerated : MathError {
    NotEquigenerated() : MathError("ideal is not generated in a single degree") {}
};

struct UnitIdeal : MathError {
    UnitIdeal() : MathError("operation undefined for the unit ideal") {}
};

struct DegenerateIdeal : MathError {
    explicit DegenerateIdeal(const std::string& what) : MathError(what) {}
};

struct ZeroDivisorPolynomial : MathError {
    ZeroDivisorPolynomial() : MathError("colon by the zero polynomial") {}
};

struct NoAgreement : MathError {
    NoAgreement() : MathError("generic initial ideal trials never agreed; "
                              "field too small or internal error") {}
};

struct AllSamplesInfinite : MathError {
    AllSamplesInfinite() : MathError("all sampled linear forms gave infinite colon length") {}
};

struct NonHomogeneousGenerator : MathError {
    explicit NonHomogeneousGenerator(const std::string& what) : MathError(what) {}
};

struct UnknownVariable : MathError {
    explicit UnknownVariable(const std::string& name)
        : MathError("unknown variable: " + name) {}
};

// Syntax error with source position, used by the ideal-document parser.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace cmf
