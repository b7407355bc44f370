#pragma once

#include <stdexcept>
#include <string>

namespace srpowers {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FullSimplexError : Error {
    FullSimplexError() : Error("full simplex: Stanley-Reisner ideal is zero, dual undefined") {}
};

struct NotDimensionOneError : Error {
    NotDimensionOneError() : Error("operation requires a pure 1-dimensional complex") {}
};

struct DiameterTooLargeError : Error {
    DiameterTooLargeError() : Error("construction requires diameter at most 2") {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(const std::string& what = "ambient arities differ") : Error(what) {}
};

struct NotSquarefreeError : Error {
    NotSquarefreeError() : Error("ideal is not squarefree") {}
};

struct ContainsVariableError : Error {
    ContainsVariableError() : Error("ideal has a generator of degree <= 1") {}
};

struct ZeroOrUnitError : Error {
    ZeroOrUnitError() : Error("ideal must be nonzero and proper") {}
};

struct NotAPermutationError : Error {
    NotAPermutationError() : Error("order is not a permutation of the expected indices") {}
};

struct NotEquigeneratedError : Error {
    NotEquigeneratedError() : Error("generators do not all have the same degree") {}
};

struct EmptyFaceError : Error {
    EmptyFaceError() : Error("face must be nonempty") {}
};

struct VertexOutOfRangeError : Error {
    explicit VertexOutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n)) {}
};

struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(int line_, int col_, const std::string& msg)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

struct UnknownExampleError : Error {
    explicit UnknownExampleError(const std::string& name) : Error("unknown example: " + name) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

} // namespace srpowers
