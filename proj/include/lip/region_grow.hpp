#ifndef LIP_REGION_GROW_HPP
#define LIP_REGION_GROW_HPP

#include <cstddef>
#include <vector>

#include "lip/criteria.hpp"
#include "lip/image.hpp"

namespace lip {

/// Homogeneity-driven region growing: dilate the current region, then
/// accept, reduce + extend, or reduce + contract depending on whether
/// the dilated region stays homogeneous under the chosen criterion.
struct GrowConfig {
    CriterionKind criterion = CriterionKind::LipAdditive;
    double threshold = 200.0;
    StructuringElement se = StructuringElement::square(3);
    Connectivity connectivity = Connectivity::Four;
    /// 0 derives 10 * max(width, height) at grow() entry.
    int max_iterations = 0;
    /// Evaluate the criterion (and all growth decisions) on f^c rather
    /// than f, taking advantage of the LIP scale orientation.
    bool work_in_complement = true;
};

enum class StepKind { Grow, Reduce, Extend, Contract };

const char* step_name(StepKind kind);

/// One internal step of one outer iteration: the candidate region it
/// produced, its size and criterion value, and whether that candidate
/// was accepted as the next region.
struct GrowStep {
    int iteration = 0; // outer iteration, 1-based
    StepKind kind = StepKind::Grow;
    std::size_t region_size = 0;
    double criterion = 0.0;
    bool accepted = false;
};

struct GrowTrace {
    std::vector<GrowStep> steps;

    /// Sizes of the accepted regions, in iteration order. Non-decreasing.
    std::vector<std::size_t> accepted_sizes() const;
};

struct GrowResult {
    RegionMask region;
    GrowTrace trace;
    double criterion_value = 0.0; // of the final region, in the working domain
    int iterations = 0;           // accepted outer iterations
};

/// Grows the seed region until it stops growing or max_iterations is
/// reached. The final region contains the seed and satisfies
/// criterion <= threshold.
///
/// Throws std::domain_error when the seed is empty, lies outside the
/// support, or is not homogeneous (criterion(seed) > threshold).
GrowResult grow(const GreyImage& img, const RegionMask& seed, const GrowConfig& cfg);

/// Reduction step: keeps the pixels of `grown` whose value lies within
/// the dynamic range of `prev`, then keeps only the connected
/// components touching `prev`. Result always contains `prev`.
/// `img` must already be in the working domain.
RegionMask reduce(const GreyImage& img, const RegionMask& grown, const RegionMask& prev,
                  Connectivity conn = Connectivity::Four);

/// Extension step: repeatedly admits neighbouring pixels whose LIP
/// difference to the region's running maximum or minimum is at most 1
/// and whose admission keeps the region homogeneous. Raster order per
/// pass, iterated to a fixed point; the homogeneity and distance checks
/// see the region as it evolves, so the result is deterministic.
RegionMask extend(const GreyImage& img, const RegionMask& region, const GrowConfig& cfg);

/// Contraction step: removes one extremal unit-width histogram class
/// [k, k+1) per step until the region satisfies the criterion. At each
/// step the side (minimum or maximum class) giving the larger criterion
/// decrease is removed, ties toward the maximum side; a class holding a
/// seed pixel is never removed. After each removal only the components
/// touching the seed are kept.
///
/// Throws std::domain_error when the criterion still exceeds the
/// threshold once only seed classes remain (degenerate contraction).
RegionMask contract(const GreyImage& img, const RegionMask& region, const GrowConfig& cfg,
                    const RegionMask& seed);

} // namespace lip

#endif
