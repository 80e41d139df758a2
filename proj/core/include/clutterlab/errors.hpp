#pragma once

#include <stdexcept>
#include <string>

namespace clutterlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that needs transversals was given a clutter containing the empty edge.
struct EmptyEdgeError : Error {
    explicit EmptyEdgeError(const std::string& what = "clutter contains the empty edge")
        : Error(what) {}
};

/// Minor spec with overlapping deletion and contraction sets.
struct OverlappingSpecError : Error {
    explicit OverlappingSpecError(const std::string& what = "deletion and contraction sets overlap")
        : Error(what) {}
};

/// Vertex universe exceeds a documented enumeration limit.
struct UniverseTooLargeError : Error {
    explicit UniverseTooLargeError(const std::string& what) : Error(what) {}
};

/// Weight-box enumeration would exceed the configured budget.
struct BoundTooLargeError : Error {
    explicit BoundTooLargeError(const std::string& what) : Error(what) {}
};

struct NotTwoPartitionableError : Error {
    explicit NotTwoPartitionableError(const std::string& what = "clutter is not 2-partitionable under the given blocks")
        : Error(what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Custom edge augmentation conflicts with an existing edge by inclusion.
struct InclusionConflictError : Error {
    explicit InclusionConflictError(const std::string& what) : Error(what) {}
};

struct UnsupportedFSpecError : Error {
    explicit UnsupportedFSpecError(const std::string& what) : Error(what) {}
};

struct ZeroMatrixError : Error {
    explicit ZeroMatrixError(const std::string& what = "matrix is zero") : Error(what) {}
};

/// Diagnostic: the decomposition case analysis found no applicable rule.
struct NoRuleAppliesError : Error {
    explicit NoRuleAppliesError(const std::string& what, std::string trace_json = "")
        : Error(what), trace(std::move(trace_json)) {}
    std::string trace;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace clutterlab
