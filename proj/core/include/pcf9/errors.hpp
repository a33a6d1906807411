#pragma once

#include <stdexcept>
#include <string>

namespace pcf9 {

// Every failure the library can signal, in one enum so callers (notably the
// CLI) can map kinds to exit codes without string matching.
enum class ErrorKind {
    SelfLoop,
    ParallelEdge,
    AsymmetricAdjacency,
    DegreeExceeded,
    RotationMismatch,
    NonPlanarEmbedding,
    Disconnected,
    UnassignedNeighbor,
    PartialColoring,
    NotOnBoundary,
    NotA3Vertex,
    SReductionPrecondition,
    ScriptExhausted,
    ExtensionUnsound,
    NoConfigurationFound,
    InstanceTooLarge,
    UnknownName,
    BadInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// True for kinds that indicate a broken internal contract rather than bad
// input: a solver that trips one of these has a bug, not an unlucky graph.
bool is_internal_invariant_failure(ErrorKind kind);

} // namespace pcf9
