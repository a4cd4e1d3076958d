#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ans {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row/column or vector dimension disagreement.
struct DimensionError : Error {
    using Error::Error;
};

/// Mixing values from different semirings, or an operation the semiring
/// does not support (subtraction in N, narrowing embeddings, ...).
struct SemiringError : Error {
    using Error::Error;
};

/// Malformed textual input (regex, automaton file, series file, scalar).
/// `position` locates the problem when known: a 0-based character offset
/// for single-line inputs, a line number for line-oriented formats.
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::size_t position = npos)
        : Error(what), position(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position;
};

/// A word uses a letter outside the alphabet it is interpreted over.
struct ForeignLetterError : Error {
    using Error::Error;
};

/// value() queried on a word outside the system's language.
struct NotInLanguageError : Error {
    using Error::Error;
};

/// The language of a numeration system must be infinite.
struct FiniteLanguageError : Error {
    using Error::Error;
};

/// An unambiguous automaton was required but the input is ambiguous.
struct AmbiguityError : Error {
    using Error::Error;
};

/// Internal consistency violation (e.g. unranking counts do not add up).
/// Seeing this is a bug in the library, not a usage error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ans
