#ifndef SYMDYN_ERROR_HPP
#define SYMDYN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symdyn {

enum class ErrorCode {
    StateNotFound,
    MapNotTotal,
    InvalidStride,
    InvalidDiagram,
    DomainMismatch,
    InvalidWindow,
    SequenceTooShort,
    UnknownWord,
    LengthMismatch,
    AlphabetMismatch,
    OrderTooLarge,
    EmptyData,
    NondeterministicReconstruction,
    InvalidTsdMorphism,
    NothingToReduce,
    InvalidTsd,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a stable machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace symdyn

#endif // SYMDYN_ERROR_HPP
