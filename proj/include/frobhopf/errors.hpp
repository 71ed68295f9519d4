#pragma once

#include <stdexcept>
#include <string>

namespace frobhopf {

/// Broad failure class, used to pick the process exit code in the CLI:
/// Validation -> 2, Resource -> 3.
enum class ErrorKind { Validation, Resource, Internal };

class EngineError : public std::runtime_error {
public:
    EngineError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ContextMismatch : EngineError {
    explicit ContextMismatch(const std::string& msg)
        : EngineError(ErrorKind::Validation, "context mismatch: " + msg) {}
};

struct DivisionByZero : EngineError {
    DivisionByZero() : EngineError(ErrorKind::Validation, "division by zero") {}
};

struct DimensionMismatch : EngineError {
    explicit DimensionMismatch(const std::string& msg)
        : EngineError(ErrorKind::Validation, "dimension mismatch: " + msg) {}
};

struct UnknownOp : EngineError {
    explicit UnknownOp(const std::string& name)
        : EngineError(ErrorKind::Validation, "unknown operation: " + name) {}
};

struct NotAGroup : EngineError {
    explicit NotAGroup(const std::string& msg)
        : EngineError(ErrorKind::Validation, "not a group: " + msg) {}
};

struct NotAFrobeniusMorphism : EngineError {
    explicit NotAFrobeniusMorphism(const std::string& msg)
        : EngineError(ErrorKind::Validation, "not a Frobenius morphism: " + msg) {}
};

struct FrobeniusViolation : EngineError {
    explicit FrobeniusViolation(const std::string& msg)
        : EngineError(ErrorKind::Validation, "Frobenius axioms violated: " + msg) {}
};

struct FieldMismatch : EngineError {
    explicit FieldMismatch(const std::string& msg)
        : EngineError(ErrorKind::Validation, "field mismatch: " + msg) {}
};

struct SignatureMismatch : EngineError {
    explicit SignatureMismatch(const std::string& msg)
        : EngineError(ErrorKind::Validation, "signature mismatch: " + msg) {}
};

struct CapExceeded : EngineError {
    explicit CapExceeded(const std::string& msg)
        : EngineError(ErrorKind::Resource, "cap exceeded: " + msg) {}
};

struct ResourceLimit : EngineError {
    explicit ResourceLimit(const std::string& msg)
        : EngineError(ErrorKind::Resource, "resource limit: " + msg) {}
};

struct NotFinite : EngineError {
    explicit NotFinite(const std::string& msg)
        : EngineError(ErrorKind::Validation, "quotient not certified finite: " + msg) {}
};

struct RelationNotKilled : EngineError {
    explicit RelationNotKilled(const std::string& msg)
        : EngineError(ErrorKind::Internal, "relation does not vanish: " + msg) {}
};

struct EmbedUndefined : EngineError {
    explicit EmbedUndefined(const std::string& msg)
        : EngineError(ErrorKind::Validation, "scalar embedding undefined: " + msg) {}
};

struct BudgetExceeded : EngineError {
    explicit BudgetExceeded(const std::string& msg)
        : EngineError(ErrorKind::Resource, "budget exceeded: " + msg) {}
};

struct SpecParseError : EngineError {
    explicit SpecParseError(const std::string& msg)
        : EngineError(ErrorKind::Validation, "spec parse error: " + msg) {}
};

} // namespace frobhopf
