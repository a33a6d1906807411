#include "pcf9/errors.hpp"

namespace pcf9 {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::ParallelEdge: return "ParallelEdge";
        case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorKind::DegreeExceeded: return "DegreeExceeded";
        case ErrorKind::RotationMismatch: return "RotationMismatch";
        case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::UnassignedNeighbor: return "UnassignedNeighbor";
        case ErrorKind::PartialColoring: return "PartialColoring";
        case ErrorKind::NotOnBoundary: return "NotOnBoundary";
        case ErrorKind::NotA3Vertex: return "NotA3Vertex";
        case ErrorKind::SReductionPrecondition: return "SReductionPrecondition";
        case ErrorKind::ScriptExhausted: return "ScriptExhausted";
        case ErrorKind::ExtensionUnsound: return "ExtensionUnsound";
        case ErrorKind::NoConfigurationFound: return "NoConfigurationFound";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::BadInput: return "BadInput";
    }
    return "Unknown";
}

bool is_internal_invariant_failure(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ScriptExhausted:
        case ErrorKind::ExtensionUnsound:
        case ErrorKind::NoConfigurationFound:
        case ErrorKind::SReductionPrecondition:
            return true;
        default:
            return false;
    }
}

} // namespace pcf9
