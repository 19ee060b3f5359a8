#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resolvelab {

/// A caller broke an operation's precondition (bad landmark set, bad parameters).
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list, graph6 or family text. `line` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string & what);

    auto line() const -> std::size_t { return _line; }

private:
    std::size_t _line;
};

/// A constructor's internal self-check failed.
class ConstructionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A proof-backed claim did not hold on a concrete input.
class TheoremViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

}
