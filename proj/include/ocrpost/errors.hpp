#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ocrpost {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds the configured alignment length cap.
struct SizeLimitError : Error {
    using Error::Error;
};

// aligned_region() called on an empty (all-negative) local alignment.
struct NoAlignedRegionError : Error {
    using Error::Error;
};

// Reference string is empty, CER/WER undefined.
struct EmptyReferenceError : Error {
    using Error::Error;
};

struct WindowOutOfRangeError : Error {
    using Error::Error;
};

struct MalformedRecordError : Error {
    MalformedRecordError(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

struct DuplicateIdError : Error {
    explicit DuplicateIdError(const std::string& page_id)
        : Error("duplicate page id: " + page_id), id(page_id) {}
    std::string id;
};

struct EmptyCorpusError : Error {
    using Error::Error;
};

struct PageTooShortError : Error {
    using Error::Error;
};

struct MissingContextError : Error {
    using Error::Error;
};

struct UnknownPlaceholderError : Error {
    explicit UnknownPlaceholderError(const std::string& name)
        : Error("unknown placeholder: {" + name + "}"), placeholder(name) {}
    std::string placeholder;
};

// Transport or API failure talking to a model endpoint.
struct EndpointError : Error {
    enum class Kind { Unreachable, Timeout, Api };
    EndpointError(Kind k, int http_status, const std::string& what)
        : Error(what), kind(k), status(http_status) {}
    Kind kind;
    int status;  // 0 when no HTTP status applies
};

struct NotEnoughTrialsError : Error {
    using Error::Error;
};

struct SearchExhaustedError : Error {
    using Error::Error;
};

struct NoEligiblePagesError : Error {
    using Error::Error;
};

struct PolicyError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ocrpost
