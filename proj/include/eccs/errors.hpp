#pragma once

#include <stdexcept>
#include <string>

namespace eccs {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad graph6 input: header byte, truncated bit field, trailing garbage.
struct MalformedGraph6 : Error {
    using Error::Error;
};

// Bad edge-list text input.
struct MalformedEdgeList : Error {
    using Error::Error;
};

// Bad construction parameters (unknown generator, bad arity, invalid edge, ...).
struct BadParams : Error {
    using Error::Error;
};

// Operation requires a connected graph.
struct Disconnected : Error {
    using Error::Error;
};

// Operation requires at least one edge.
struct EmptyEdgeSet : Error {
    using Error::Error;
};

// Input exceeds a documented size limit for an exhaustive scan.
struct SizeLimit : Error {
    using Error::Error;
};

// Eigensolver failed to reach the off-diagonal threshold within the sweep budget.
struct NoConvergence : Error {
    NoConvergence(const std::string& msg, double residual_, int sweeps_)
        : Error(msg), residual(residual_), sweeps(sweeps_) {}
    double residual;
    int sweeps;
};

// Partition is not equitable for the given matrix.
struct NotEquitable : Error {
    using Error::Error;
};

// Partition/matrix shapes are inconsistent.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A closed-form evaluator refused to run; carries the failed hypothesis.
struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& hyp)
        : Error("hypothesis failed: " + hyp), hypothesis(hyp) {}
    std::string hypothesis;
};

// The input is outside every case a result covers; no prediction is made.
struct Inapplicable : Error {
    using Error::Error;
};

}  // namespace eccs
