#pragma once

#include <stdexcept>
#include <string>

namespace ramgirth {

/// Raised when a caller supplies malformed or out-of-range input.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A text file could not be parsed; the message carries the line number.
class FormatError : public InputError
{
public:
    FormatError(std::size_t line, const std::string & what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ramgirth
