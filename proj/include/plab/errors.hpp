#pragma once

#include <stdexcept>
#include <string>

namespace plab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand shapes are incompatible (matrix product, tensor contraction, ...).
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

// An object of the wrong certified kind was passed (e.g. a map bound to a
// different algebra, or an unverified structure where a verified one is required).
struct KindError : Error {
    explicit KindError(const std::string& msg) : Error("kind error: " + msg) {}
};

// A construction's precondition check failed.
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg) : Error("precondition failed: " + msg) {}
};

// A decomposition into subspaces is not a direct-sum partition.
struct PartitionError : Error {
    explicit PartitionError(const std::string& msg) : Error("partition error: " + msg) {}
};

// A bilinear form required to be nondegenerate is singular.
struct SingularForm : Error {
    explicit SingularForm(const std::string& msg) : Error("singular form: " + msg) {}
};

// A weight required to be nonzero is zero.
struct ZeroWeight : Error {
    explicit ZeroWeight(const std::string& msg) : Error("zero weight: " + msg) {}
};

// An enumerative search would exceed its candidate budget.
struct SearchSpaceTooLarge : Error {
    explicit SearchSpaceTooLarge(const std::string& msg) : Error("search space too large: " + msg) {}
};

// A bialgebra required to be balanced is not.
struct NotBalanced : Error {
    explicit NotBalanced(const std::string& msg) : Error("not balanced: " + msg) {}
};

// Workspace name that does not resolve.
struct UnknownObject : Error {
    explicit UnknownObject(const std::string& msg) : Error("unknown object: " + msg) {}
};

// Check or construction name that does not exist.
struct UnknownCheck : Error {
    explicit UnknownCheck(const std::string& msg) : Error("unknown check: " + msg) {}
};

// Workspace text could not be parsed.
struct ParseError : Error {
    ParseError(int line, const std::string& msg)
        : Error("parse error at line " + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

} // namespace plab
