#pragma once

#include <stdexcept>
#include <string>

namespace wmark {

// Every library failure derives from Error so callers can catch broadly;
// the subclasses let the CLI map failures onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Malformed or truncated PGM/PBM/key-file contents.
class FormatError : public Error {
public:
    using Error::Error;
};

// Image or matrix dimensions that violate a transform's preconditions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A parameter outside its documented range.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Watermark or pyramid shape disagrees with what the key describes.
class KeyMismatchError : public Error {
public:
    using Error::Error;
};

// The key selects no location at all for this host.
class EmptySelectionError : public Error {
public:
    using Error::Error;
};

} // namespace wmark
