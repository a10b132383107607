#pragma once

#include <stdexcept>
#include <string>

namespace snacs {

// Machine-readable diagnostic codes, stable for CI consumption.
enum class ErrorCode {
    E_ABSTRACT_USE,
    E_FUNCTION_FORBIDDEN,
    E_TEMPORAL_FUNCTION,
    E_CONSTRUCTION_MISMATCH,
    E_UNKNOWN_LABEL,
    E_FORMAT,
};

const char* to_string(ErrorCode code);

struct UnknownLabelError : std::runtime_error {
    explicit UnknownLabelError(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedLabelError : std::runtime_error {
    explicit MalformedLabelError(const std::string& what) : std::runtime_error(what) {}
};

struct SpecialWithConstrualError : MalformedLabelError {
    explicit SpecialWithConstrualError(const std::string& what) : MalformedLabelError(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct CorpusMismatchError : std::runtime_error {
    explicit CorpusMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyTrainingDataError : std::runtime_error {
    explicit EmptyTrainingDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snacs
