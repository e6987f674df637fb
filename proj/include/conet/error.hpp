#pragma once

#include <stdexcept>
#include <string>

namespace conet {

// Base class for all library errors. CLI handlers catch this, print the
// message and exit nonzero.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input file could not be read/parsed; message carries file and line.
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_(file), line_(line) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

// A metric or transform was requested on input where it is undefined
// (e.g. average inverse distance of a single node, v_max of an edgeless
// view).
class UndefinedError : public Error {
public:
    explicit UndefinedError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace conet
