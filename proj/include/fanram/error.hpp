#pragma once

#include <stdexcept>
#include <string>

namespace fanram {

enum class ErrorCode {
    OrderCap,
    BadParam,
    ParseError,
    PreconditionViolated,
    StructureNotFound,
    UnknownFormula,
    MissingParam,
    RangeError,
    SamplingFailure,
    CorruptRecord,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace fanram
