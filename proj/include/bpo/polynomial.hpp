#pragma once

#include <map>
#include <string>
#include <vector>

#include "bpo/hypergraph.hpp"

namespace bpo {

enum class Sense { minimize, maximize };

// Multilinear monomial: sorted distinct variable ids.
using Monomial = std::vector<int>;

// Multilinear polynomial over binary variables.  Monomial keys are sets
// (x_i^2 is already reduced to x_i) and zero-coefficient terms are not stored.
struct Polynomial {
    Sense sense = Sense::minimize;
    double constant = 0.0;
    std::map<Monomial, double> terms;
    std::vector<std::string> names; // variable id -> identifier

    int var_count() const { return static_cast<int>(names.size()); }

    // Adds coeff * prod(vars); repeated variables are reduced multilinearly.
    void add_term(std::vector<int> vars, double coeff);
    void ensure_var(int v);

    double evaluate(const std::vector<int>& assignment) const;

    // Term set keyed by variable names, for order-insensitive comparisons.
    std::map<std::vector<std::string>, double> named_terms() const;
};

// Hypergraph linearization of a polynomial: one node per variable, one
// hyperedge per monomial of degree >= 2.
struct Instance {
    Hypergraph hypergraph;
    std::vector<double> node_profit;
    std::vector<double> edge_profit;
    double constant = 0.0;
    Sense sense = Sense::minimize;
    std::string name;

    double evaluate(const std::vector<int>& assignment) const;
};

Instance linearize(const Polynomial& poly, std::string name = "");

// Text format: first line `min`/`max`, optional `c <constant>` line, then one
// `<coeff> <var> [<var> ...]` line per monomial; `#` starts a comment.
// Variables are indexed by first appearance.
Polynomial parse_polynomial(const std::string& text);
std::string write_polynomial(const Polynomial& poly);

Polynomial read_polynomial_file(const std::string& path);
void write_polynomial_file(const Polynomial& poly, const std::string& path);

} // namespace bpo
