#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptySeries : public Error {
public:
    EmptySeries() : Error("empty Kupisch series") {}
};

// Raised by validate() with the 1-based index of the offending entry.
class AdmissibilityError : public Error {
public:
    AdmissibilityError(int index, const std::string& what)
        : Error("inadmissible Kupisch series at i=" + std::to_string(index) + ": " + what),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class NonexistentModule : public Error {
public:
    using Error::Error;
};

class TauUndefined : public Error {
public:
    using Error::Error;
};

// A mathematical statement that should hold failed on a concrete algebra.
class Contradiction : public Error {
public:
    Contradiction(const std::string& check, const std::string& witness)
        : Error("contradiction in " + check + ": " + witness), check_(check), witness_(witness) {}
    const std::string& check() const { return check_; }
    const std::string& witness() const { return witness_; }

private:
    std::string check_;
    std::string witness_;
};

class OracleCapExceeded : public Error {
public:
    using Error::Error;
};

class NotRealizable : public Error {
public:
    using Error::Error;
};

class MalformedPath : public Error {
public:
    using Error::Error;
};

class FiltrationError : public Error {
public:
    using Error::Error;
};

class WitnessFailure : public Error {
public:
    using Error::Error;
};

}  // namespace nakayama
