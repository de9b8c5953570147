#ifndef PARABOLIC_ERROR_HPP
#define PARABOLIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace parabolic {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NodeOutOfRange : public Error {
public:
    using Error::Error;
};

class EmptyCrossSet : public Error {
public:
    using Error::Error;
};

class InvalidWord : public Error {
public:
    using Error::Error;
};

class NoOrthogonalRoot : public Error {
public:
    using Error::Error;
};

class CascadeIndexOutOfRange : public Error {
public:
    using Error::Error;
};

class RigidComponent : public Error {
public:
    using Error::Error;
};

class ChartTooLarge : public Error {
public:
    using Error::Error;
};

class TruncationTooLow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownTable : public Error {
public:
    using Error::Error;
};

/// Raised when two independent computations of the same quantity disagree,
/// or when an invariant that must always hold is violated. Never expected.
class InternalMismatch : public Error {
public:
    using Error::Error;
};

} // namespace parabolic

#endif // PARABOLIC_ERROR_HPP
