#include "symdyn/error.hpp"

namespace symdyn {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::StateNotFound: return "StateNotFound";
        case ErrorCode::MapNotTotal: return "MapNotTotal";
        case ErrorCode::InvalidStride: return "InvalidStride";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::SequenceTooShort: return "SequenceTooShort";
        case ErrorCode::UnknownWord: return "UnknownWord";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::EmptyData: return "EmptyData";
        case ErrorCode::NondeterministicReconstruction: return "NondeterministicReconstruction";
        case ErrorCode::InvalidTsdMorphism: return "InvalidTsdMorphism";
        case ErrorCode::NothingToReduce: return "NothingToReduce";
        case ErrorCode::InvalidTsd: return "InvalidTsd";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace symdyn
