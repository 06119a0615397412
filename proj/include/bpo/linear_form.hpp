#pragma once

#include <map>
#include <vector>

#include "bpo/hypergraph.hpp"

namespace bpo {

// Fractional point over V and E, dense.
struct DensePoint {
    std::vector<double> node_vals;
    std::vector<double> edge_vals;
};

// Sparse affine function over variables indexed by V and E, with exact integer
// coefficients.  All inequality families in this toolkit have integer data;
// only evaluation at fractional points leaves integer arithmetic.
struct LinearForm {
    std::map<NodeId, long long> node_coeffs;
    std::map<EdgeId, long long> edge_coeffs;
    long long constant = 0;

    void add_node(NodeId v, long long c);
    void add_edge(EdgeId e, long long c);
    LinearForm& operator+=(const LinearForm& other);

    double value_at(const DensePoint& z) const;
    long long value_at_integer(const std::vector<int>& node_vals,
                               const std::vector<int>& edge_vals) const;

    bool operator==(const LinearForm&) const = default;
};

LinearForm operator+(LinearForm lhs, const LinearForm& rhs);

} // namespace bpo
