#ifndef MODCOMP_ERRORS_HPP
#define MODCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modcomp {

/// Base class for every error raised by the calculus.
class CalculusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GateNotInInterface : public CalculusError {
public:
    using CalculusError::CalculusError;
};

/// Two values whose primitive-id carriers must be disjoint overlap.
class NodeIdCollision : public CalculusError {
public:
    using CalculusError::CalculusError;
};

class InterfaceNotInGraph : public CalculusError {
public:
    using CalculusError::CalculusError;
};

/// A structural invariant of Graph or Module is violated on construction.
class InvalidModule : public CalculusError {
public:
    using CalculusError::CalculusError;
};

class PreconditionViolated : public CalculusError {
public:
    using CalculusError::CalculusError;
};

class SymbolNotInAlphabet : public CalculusError {
public:
    using CalculusError::CalculusError;
};

class NotAWordModule : public CalculusError {
public:
    using CalculusError::CalculusError;
};

/// Malformed document; `path` points at the offending field.
class SchemaError : public CalculusError {
public:
    SchemaError(const std::string& path, const std::string& what)
        : CalculusError(path + ": " + what), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class DanglingNodeRef : public SchemaError {
public:
    using SchemaError::SchemaError;
};

class DuplicateNodeId : public SchemaError {
public:
    using SchemaError::SchemaError;
};

class UnknownSuite : public CalculusError {
public:
    using CalculusError::CalculusError;
};

} // namespace modcomp

#endif // MODCOMP_ERRORS_HPP
