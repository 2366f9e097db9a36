#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facetcx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string & what) : std::runtime_error(what) {}
};

/// Malformed .scx or map text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string & what) :
        Error("line " + std::to_string(line) + ": " + what),
        line_(line)
    {
    }

    auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

/// A search ran out of its node or time budget before exhausting the tree.
class Undecided : public Error {
public:
    explicit Undecided(std::size_t nodes) :
        Error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes)
    {
    }

    auto nodes() const -> std::size_t { return nodes_; }

private:
    std::size_t nodes_;
};

} // namespace facetcx
