#include "bpo/linear_form.hpp"

namespace bpo {

void LinearForm::add_node(NodeId v, long long c) {
    if (c == 0)
        return;
    auto it = node_coeffs.find(v);
    if (it == node_coeffs.end()) {
        node_coeffs.emplace(v, c);
    } else {
        it->second += c;
        if (it->second == 0)
            node_coeffs.erase(it);
    }
}

void LinearForm::add_edge(EdgeId e, long long c) {
    if (c == 0)
        return;
    auto it = edge_coeffs.find(e);
    if (it == edge_coeffs.end()) {
        edge_coeffs.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            edge_coeffs.erase(it);
    }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    for (auto [v, c] : other.node_coeffs)
        add_node(v, c);
    for (auto [e, c] : other.edge_coeffs)
        add_edge(e, c);
    constant += other.constant;
    return *this;
}

double LinearForm::value_at(const DensePoint& z) const {
    double value = static_cast<double>(constant);
    for (auto [v, c] : node_coeffs)
        value += static_cast<double>(c) * z.node_vals[v];
    for (auto [e, c] : edge_coeffs)
        value += static_cast<double>(c) * z.edge_vals[e];
    return value;
}

long long LinearForm::value_at_integer(const std::vector<int>& node_vals,
                                       const std::vector<int>& edge_vals) const {
    long long value = constant;
    for (auto [v, c] : node_coeffs)
        value += c * node_vals[v];
    for (auto [e, c] : edge_coeffs)
        value += c * edge_vals[e];
    return value;
}

LinearForm operator+(LinearForm lhs, const LinearForm& rhs) {
    lhs += rhs;
    return lhs;
}

} // namespace bpo
