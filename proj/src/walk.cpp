#include "bpo/walk.hpp"

#include <string>

namespace bpo {

bool SignedClosedWalk::is_odd() const {
    int negatives = 0;
    for (int s : signs)
        if (s < 0)
            ++negatives;
    return negatives % 2 == 1;
}

namespace {

void check_walk(const Hypergraph& g, const SignedClosedWalk& walk, bool* ok,
                std::string* why) {
    auto fail = [&](const std::string& msg) {
        *ok = false;
        if (why)
            *why = msg;
    };
    const int k = walk.length();
    if (static_cast<int>(walk.nodes.size()) != k || static_cast<int>(walk.signs.size()) != k)
        return fail("inconsistent sequence lengths");
    if (k < 3)
        return fail("length " + std::to_string(k) + " < 3");
    for (int i = 0; i < k; ++i) {
        if (walk.edges[i] < 0 || walk.edges[i] >= g.edge_count())
            return fail("edge id out of range");
        if (walk.signs[i] != 1 && walk.signs[i] != -1)
            return fail("sign must be +1 or -1");
    }
    for (int i = 0; i < k; ++i) {
        EdgeId eprev = walk.edges[(i + k - 1) % k];
        EdgeId ecur = walk.edges[i];
        EdgeId enext = walk.edges[(i + 1) % k];
        NodeId v = walk.nodes[i];
        if (!set_contains(g.edge(eprev), v) || !set_contains(g.edge(ecur), v))
            return fail("v_" + std::to_string(i + 1) + " not in e_" + std::to_string(i) +
                        " & e_" + std::to_string(i + 1));
        NodeSet cap = set_intersection(g.edge(eprev), g.edge(ecur));
        if (sets_intersect(cap, g.edge(enext)))
            return fail("subsequent edges around e_" + std::to_string(i + 1) +
                        " share a node");
    }
    *ok = true;
}

} // namespace

void validate_walk(const Hypergraph& g, const SignedClosedWalk& walk) {
    bool ok = false;
    std::string why;
    check_walk(g, walk, &ok, &why);
    if (!ok)
        throw InvalidWalk("invalid signed closed walk: " + why);
}

bool walk_is_valid(const Hypergraph& g, const SignedClosedWalk& walk) {
    bool ok = false;
    check_walk(g, walk, &ok, nullptr);
    return ok;
}

SignedClosedWalk rotate_walk(const SignedClosedWalk& walk, int offset) {
    const int k = walk.length();
    SignedClosedWalk out;
    out.nodes.reserve(k);
    out.edges.reserve(k);
    out.signs.reserve(k);
    for (int i = 0; i < k; ++i) {
        int j = (i + offset) % k;
        out.nodes.push_back(walk.nodes[j]);
        out.edges.push_back(walk.edges[j]);
        out.signs.push_back(walk.signs[j]);
    }
    return out;
}

SignedClosedWalk reverse_walk(const SignedClosedWalk& walk) {
    const int k = walk.length();
    SignedClosedWalk out;
    out.nodes.resize(k);
    out.edges.resize(k);
    out.signs.resize(k);
    out.nodes[0] = walk.nodes[0];
    for (int i = 0; i < k; ++i) {
        out.edges[i] = walk.edges[k - 1 - i];
        out.signs[i] = walk.signs[k - 1 - i];
        if (i > 0)
            out.nodes[i] = walk.nodes[k - i];
    }
    return out;
}

} // namespace bpo
