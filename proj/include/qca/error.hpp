#ifndef QCA_ERROR_HPP
#define QCA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qca {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad matrices, bad vertex references, unreadable files.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A seed failed the compatible-pair conditions.
struct SeedError : Error {
    explicit SeedError(const std::string& msg) : Error(msg) {}
};

// An element is not pointed (or pointedness is undecidable within the
// configured enumeration bound).
struct NotPointedError : Error {
    explicit NotPointedError(const std::string& msg) : Error(msg) {}
};

// exact_divide found no exact quotient; carries the offending remainder term.
struct DivisionError : Error {
    explicit DivisionError(const std::string& msg) : Error(msg) {}
};

// A decomposition over a pointed family could not be completed.
struct DecompositionError : Error {
    explicit DecompositionError(const std::string& msg) : Error(msg) {}
};

// Results at truncation order N and 2N disagree, or an operation that
// requires exact input received a truncated element.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

// Violated internal invariant: indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace qca

#endif
