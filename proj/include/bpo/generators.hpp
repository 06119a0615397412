#pragma once

#include <cstdint>
#include <optional>

#include "bpo/polynomial.hpp"

namespace bpo {

// Low auto-correlation binary sequence energy, Bernasconi model.
struct LabsParams {
    int sequence_length = 0; // N
    int correlation_window = 0; // R, with 3 <= R <= N
};

// Expands the 0/1 reformulation of the cumulative autocorrelation energy:
// sum_{i=1}^{N-R+1} sum_{d=1}^{R-1} ( sum_{j=1}^{i+R-1-d} (2x_j-1)(2x_{j+d}-1) )^2,
// with x^2 -> x reduction and term collection.  Minimization sense.
Polynomial gen_labs(const LabsParams& params);

// Image restoration: linear dissimilarity to a blurred base image plus a
// degree-4 smoothness penalty on every 2x2 pixel window.
enum class BaseImage { top_left_rectangle, centre_rectangle, cross };
enum class Perturbation { none, low, high };

struct ImageParams {
    int width = 0;  // pixels per row
    int height = 0; // rows
    BaseImage base = BaseImage::top_left_rectangle;
    Perturbation perturbation = Perturbation::none;
    std::uint32_t seed = 0;
    // Window polynomial over the four slots a=(r,c), b=(r+1,c), c=(r,c+1),
    // d=(r+1,c+1); replaceable so a reference formulation can be slotted in.
    std::optional<std::map<Monomial, double>> window;
};

// Default window penalty: (a-b)(a-c)(d-b)(d-c), multilinearly expanded.
// The 0/1 indicator of the two checkerboard patterns: zero on every other
// 2x2 pattern, in particular on constant and half-plane windows.
std::map<Monomial, double> default_window_polynomial();

std::vector<int> base_image(const ImageParams& params);
std::vector<int> blurred_image(const ImageParams& params);
Polynomial gen_image(const ImageParams& params);

// Random cycle hypergraph for tests: m >= 3 edges in a ring, consecutive
// overlaps drawn from overlap_size range, all other pairs disjoint.
struct CycleParams {
    int edge_count = 0; // m
    int min_edge_size = 2;
    int max_edge_size = 4;
    int min_overlap = 1;
    int max_overlap = 1;
    std::uint32_t seed = 0;
};

Hypergraph gen_cycle_hypergraph(const CycleParams& params);

} // namespace bpo
