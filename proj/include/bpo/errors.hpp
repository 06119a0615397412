#pragma once

#include <stdexcept>
#include <string>

namespace bpo {

// Base class for all toolkit errors; subclasses carry the failure kind in the type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// hypergraph construction
struct DuplicateEdge : Error { using Error::Error; };
struct LoopEdge : Error { using Error::Error; };
struct NodeOutOfRange : Error { using Error::Error; };
struct NotCycleHypergraph : Error { using Error::Error; };

// instances
struct InfeasibleParams : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };
struct UnknownSense : Error { using Error::Error; };

// cuts
struct InvalidFlower : Error { using Error::Error; };
struct InvalidBlockArgs : Error { using Error::Error; };
struct InvalidWalk : Error { using Error::Error; };
struct EvenWalk : Error { using Error::Error; };

// separation
struct PointNotInFlowerRelaxation : Error { using Error::Error; };
struct MalformedPath : Error { using Error::Error; };

// lp
struct IterationLimit : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };

// engine
struct PhaseOrderError : Error { using Error::Error; };
struct ZeroReference : Error { using Error::Error; };

// oracle
struct TooLarge : Error { using Error::Error; };
struct NoRepetition : Error { using Error::Error; };
struct BadIndices : Error { using Error::Error; };

} // namespace bpo
