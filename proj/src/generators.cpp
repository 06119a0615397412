#include "bpo/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace bpo {

namespace {

// Adds coeff * prod_{v in vars} (2 x_v - 1) for distinct vars, expanded multilinearly.
void add_pm_product(Polynomial& poly, const std::vector<int>& vars, double coeff) {
    const int n = static_cast<int>(vars.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> mono;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                mono.push_back(vars[i]);
                ++bits;
            }
        double c = coeff * static_cast<double>(1LL << bits) * (((n - bits) % 2) ? -1.0 : 1.0);
        poly.add_term(std::move(mono), c);
    }
}

} // namespace

Polynomial gen_labs(const LabsParams& params) {
    const int n = params.sequence_length;
    const int r = params.correlation_window;
    if (r < 3 || r > n)
        throw InfeasibleParams("labs requires 3 <= R <= N");
    Polynomial poly;
    poly.sense = Sense::minimize;
    poly.ensure_var(n - 1);

    // Inner sum for window i and distance d: t_j = s_j s_{j+d} over
    // j = i .. i+R-1-d, both factors inside the width-R window at i.
    // Squaring term by term: each t_j^2 reduces to 1; cross products involve
    // 2 or 4 distinct variables (2 when j' = j+d, the shared factor squares away).
    for (int i = 1; i <= n - r + 1; ++i) {
        for (int d = 1; d <= r - 1; ++d) {
            poly.constant += r - d;
            for (int j = i; j <= i + r - 1 - d; ++j) {
                for (int j2 = j + 1; j2 <= i + r - 1 - d; ++j2) {
                    if (j2 == j + d)
                        add_pm_product(poly, {j - 1, j + 2 * d - 1}, 2.0);
                    else
                        add_pm_product(poly, {j - 1, j + d - 1, j2 - 1, j2 + d - 1}, 2.0);
                }
            }
        }
    }
    return poly;
}

std::map<Monomial, double> default_window_polynomial() {
    // (a-b)(a-c)(d-b)(d-c) expanded multilinearly: the 0/1 indicator of the
    // two checkerboard patterns on a 2x2 window.
    std::map<Monomial, double> w;
    const int a = 0, b = 1, c = 2, d = 3;
    w[{a, d}] = 1.0;
    w[{b, c}] = 1.0;
    w[{a, b, c}] = -1.0;
    w[{a, b, d}] = -1.0;
    w[{a, c, d}] = -1.0;
    w[{b, c, d}] = -1.0;
    w[{a, b, c, d}] = 2.0;
    return w;
}

std::vector<int> base_image(const ImageParams& params) {
    const int w = params.width;
    const int h = params.height;
    if (w < 2 || h < 2)
        throw InfeasibleParams("image requires width, height >= 2");
    std::vector<int> img(static_cast<std::size_t>(w) * h, 0);
    auto at = [&](int r, int c) -> int& { return img[static_cast<std::size_t>(r) * w + c]; };
    switch (params.base) {
    case BaseImage::top_left_rectangle:
        for (int r = 0; 2 * r < h; ++r)
            for (int c = 0; 2 * c < w; ++c)
                at(r, c) = 1;
        break;
    case BaseImage::centre_rectangle:
        for (int r = h / 4; r < h - h / 4; ++r)
            for (int c = w / 4; c < w - w / 4; ++c)
                at(r, c) = 1;
        break;
    case BaseImage::cross:
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c)
                if ((r >= h / 3 && r < h - h / 3) || (c >= w / 3 && c < w - w / 3))
                    at(r, c) = 1;
        break;
    }
    return img;
}

std::vector<int> blurred_image(const ImageParams& params) {
    std::vector<int> img = base_image(params);
    double flip_prob = 0.0;
    if (params.perturbation == Perturbation::low)
        flip_prob = 0.05;
    else if (params.perturbation == Perturbation::high)
        flip_prob = 0.20;
    if (flip_prob > 0.0) {
        std::mt19937 rng(params.seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (auto& pix : img)
            if (unif(rng) < flip_prob)
                pix = 1 - pix;
    }
    return img;
}

Polynomial gen_image(const ImageParams& params) {
    const int w = params.width;
    const int h = params.height;
    std::vector<int> blurred = blurred_image(params);
    Polynomial poly;
    poly.sense = Sense::minimize;
    poly.ensure_var(w * h - 1);

    // L(x): one unit per pixel disagreeing with the blurred input.
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            int v = r * w + c;
            if (blurred[v]) {
                poly.add_term({v}, -1.0);
                poly.constant += 1.0;
            } else {
                poly.add_term({v}, 1.0);
            }
        }

    // P(x): window penalty on every 2x2 sub-image.
    const std::map<Monomial, double> window =
        params.window ? *params.window : default_window_polynomial();
    for (int r = 0; r + 1 < h; ++r)
        for (int c = 0; c + 1 < w; ++c) {
            const int slot[4] = {r * w + c, (r + 1) * w + c, r * w + c + 1, (r + 1) * w + c + 1};
            for (const auto& [mono, coeff] : window) {
                std::vector<int> vars;
                vars.reserve(mono.size());
                for (int s : mono)
                    vars.push_back(slot[s]);
                poly.add_term(std::move(vars), coeff);
            }
        }
    return poly;
}

Hypergraph gen_cycle_hypergraph(const CycleParams& params) {
    const int m = params.edge_count;
    if (m < 3)
        throw InfeasibleParams("cycle hypergraph requires m >= 3");
    if (params.min_overlap < 1 || params.min_overlap > params.max_overlap)
        throw InfeasibleParams("overlap range must be nonempty with minimum >= 1");
    if (params.min_edge_size < 2 || params.min_edge_size > params.max_edge_size)
        throw InfeasibleParams("edge size range must be nonempty with minimum >= 2");
    if (2 * params.min_overlap > params.max_edge_size)
        throw InfeasibleParams("edges cannot hold two overlaps of the minimum size");

    std::mt19937 rng(params.seed);
    // Overlaps are capped at max_edge_size/2 so any two consecutive ones fit.
    const int overlap_cap = std::min(params.max_overlap, params.max_edge_size / 2);
    std::uniform_int_distribution<int> overlap_dist(params.min_overlap, overlap_cap);
    std::vector<int> overlap_size(m);
    for (int i = 0; i < m; ++i)
        overlap_size[i] = overlap_dist(rng);

    int next_node = 0;
    std::vector<NodeSet> overlap_nodes(m);
    for (int i = 0; i < m; ++i)
        for (int t = 0; t < overlap_size[i]; ++t)
            overlap_nodes[i].push_back(next_node++);

    std::vector<NodeSet> edge_sets(m);
    for (int i = 0; i < m; ++i) {
        int prev = (i + m - 1) % m;
        int lo = std::max({params.min_edge_size, overlap_size[prev] + overlap_size[i], 2});
        std::uniform_int_distribution<int> size_dist(lo, std::max(lo, params.max_edge_size));
        int size = size_dist(rng);
        NodeSet e = overlap_nodes[prev];
        e.insert(e.end(), overlap_nodes[i].begin(), overlap_nodes[i].end());
        while (static_cast<int>(e.size()) < size)
            e.push_back(next_node++);
        edge_sets[i] = make_node_set(std::move(e));
    }
    return Hypergraph(next_node, std::move(edge_sets));
}

} // namespace bpo
