#pragma once

#include "bpo/cuts.hpp"
#include "bpo/linear_form.hpp"

namespace bpo {

// Families of auxiliary edges, named by the sign pattern they realize.
enum class AuxFamily : unsigned char {
    odd, // (-,-,-): joins two intersection-set nodes of opposite sign
    two, // (+,-,+): joins two edge nodes of opposite sign
    one, // (+,-,-): joins an edge node and a set node of opposite sign
    inc  // (+,+,±): joins a node and an incident edge of equal sign
};

// Signed auxiliary graph for exact separation.  Aux node ids pack payload and
// sign: v-nodes 2v+s, set-nodes 2n+2sid+s, e-nodes 2(n+nsets)+2e+s with
// s = 1 for the minus copy; the twin of x is always x^1.
class AuxGraph {
public:
    AuxGraph(const Hypergraph& g, const TripleSet& triples, const DensePoint& z,
             double feas_tol = 1e-7);

    const Hypergraph& graph() const { return *graph_; }
    const DensePoint& point() const { return point_; }

    int aux_node_count() const { return 2 * (n_ + s_ + m_); }
    int plus_node_count() const { return 2 * n_; }
    int minus_node_count() const { return 2 * s_; }
    int e_node_count() const { return 2 * m_; }

    int vnode(NodeId v, int sign) const { return 2 * v + (sign < 0); }
    int snode(int sid, int sign) const { return 2 * (n_ + sid) + (sign < 0); }
    int enode(EdgeId e, int sign) const { return 2 * (n_ + s_ + e) + (sign < 0); }
    int twin(int aux) const { return aux ^ 1; }

    bool is_vnode(int aux) const { return aux < 2 * n_; }
    bool is_snode(int aux) const { return aux >= 2 * n_ && aux < 2 * (n_ + s_); }
    bool is_enode(int aux) const { return aux >= 2 * (n_ + s_); }
    NodeId vnode_payload(int aux) const { return aux / 2; }
    int snode_payload(int aux) const { return aux / 2 - n_; }
    EdgeId enode_payload(int aux) const { return aux / 2 - n_ - s_; }

    struct Edge {
        int u = 0;
        int v = 0;
        double length = 0.0;
        AuxFamily family = AuxFamily::inc;
        // Middle edge of the argmin triple for minus families; the incident
        // edge's node for inc edges is implied by the endpoints.
        EdgeId witness_middle = -1;
        EdgeId witness_e = -1;
        EdgeId witness_g = -1;
    };

    const std::vector<Edge>& edges() const { return edges_; }
    // CSR adjacency: arc indices incident to each aux node.
    const std::vector<int>& adjacency_offsets() const { return adj_offsets_; }
    const std::vector<int>& adjacency_arcs() const { return adj_arcs_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

private:
    const Hypergraph* graph_;
    DensePoint point_;
    int n_ = 0, s_ = 0, m_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_offsets_;
    std::vector<int> adj_arcs_;
};

// Throws PointNotInFlowerRelaxation naming a violated inequality when z fails a
// standard or (<= 2 neighbor) flower inequality by more than feas_tol.
void require_in_flower_relaxation(const Hypergraph& g, const DensePoint& z, double feas_tol);

AuxGraph build_aux_graph(const Hypergraph& g, const TripleSet& triples, const DensePoint& z,
                         double feas_tol = 1e-7);

} // namespace bpo
