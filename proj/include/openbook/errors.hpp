#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace openbook {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (file format, braid word, curve token syntax).
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line, std::size_t col)
        : Error(std::move(msg) + " at line " + std::to_string(line) + ", column " +
                std::to_string(col)),
          line(line), col(col) {}
    std::size_t line;
    std::size_t col;
};

// Well-formed input that fails a semantic check (unknown curve, bad component
// designation, mismatched surfaces, invalid strand index).
struct SemanticError : Error {
    using Error::Error;
};

// A word operation exceeded the configured length budget.
struct BudgetError : Error {
    explicit BudgetError(std::size_t budget)
        : Error("word length budget of " + std::to_string(budget) + " letters exceeded"),
          budget(budget) {}
    std::size_t budget;
};

// Exact integer arithmetic overflowed 64 bits.  Operations promise exactness,
// so overflow aborts the computation instead of wrapping.
struct OverflowError : Error {
    OverflowError() : Error("exact integer arithmetic overflowed 64 bits") {}
};

}  // namespace openbook
