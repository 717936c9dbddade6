#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontomesh {

// Base class for all domain failures. name() is the stable identifier
// surfaced by the CLI and asserted by tests; what() carries the detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& message) : Error("DimensionError", message) {}
};

struct DuplicateNodeError : Error {
    explicit DuplicateNodeError(const std::string& message) : Error("DuplicateNode", message) {}
};

// Elimination ran out of pivots; rank is the number of independent rows found.
struct SingularError : Error {
    SingularError(const std::string& message, std::size_t rank_found)
        : Error("SingularError", message), rank(rank_found) {}

    std::size_t rank;
};

struct SingularMeshError : Error {
    SingularMeshError(const std::string& message, std::size_t rank_found)
        : Error("SingularMesh", message), rank(rank_found) {}

    std::size_t rank;
};

struct SingularOperatorError : Error {
    SingularOperatorError(const std::string& message, std::size_t rank_found)
        : Error("SingularOperator", message), rank(rank_found) {}

    std::size_t rank;
};

struct NodeMismatchError : Error {
    explicit NodeMismatchError(const std::string& message) : Error("NodeMismatch", message) {}
};

struct EmptyCorpusError : Error {
    explicit EmptyCorpusError(const std::string& message) : Error("EmptyCorpus", message) {}
};

struct InfeasibleStepError : Error {
    explicit InfeasibleStepError(const std::string& message) : Error("InfeasibleStep", message) {}
};

struct NoFeasiblePathError : Error {
    explicit NoFeasiblePathError(const std::string& message) : Error("NoFeasiblePath", message) {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& message) : Error("TooLarge", message) {}
};

struct SyntaxError : Error {
    SyntaxError(const std::string& message, std::size_t line_no, std::size_t column_no)
        : Error("SyntaxError", "line " + std::to_string(line_no) + ", column " +
                                   std::to_string(column_no) + ": " + message),
          line(line_no), column(column_no) {}

    std::size_t line;
    std::size_t column;
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& message, std::size_t line_no = 0)
        : Error("SchemaError",
                line_no == 0 ? message : "line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}

    std::size_t line;
};

struct InvariantError : Error {
    explicit InvariantError(const std::string& message) : Error("InvariantError", message) {}
};

struct IoError : Error {
    explicit IoError(const std::string& message) : Error("IoError", message) {}
};

} // namespace ontomesh
