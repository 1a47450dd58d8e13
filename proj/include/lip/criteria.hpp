#ifndef LIP_CRITERIA_HPP
#define LIP_CRITERIA_HPP

#include <string>

#include "lip/image.hpp"

namespace lip {

/// Region-homogeneity measures. The two LIP criteria are insensitive to
/// the lighting changes modelled by their law (additive: exposure time
/// or source intensity; multiplicative: object opacity or thickness);
/// Variance and ClassicalDynamic are the usual baselines and are not.
enum class CriterionKind { LipAdditive, LipMultiplicative, Variance, ClassicalDynamic };

const char* criterion_name(CriterionKind kind);
CriterionKind criterion_from_name(const std::string& name);

/// LIP-additive homogeneity: the region's dynamic in the LIP sense,
/// lip_sub(sup_R f, inf_R f). Lies in [0, M); the maximal logarithmic
/// additive contrast observed in the region. Invariant under
/// f -> f (+) C for any constant C in [0, M).
double h_additive(const GreyImage& img, const RegionMask& region);

/// LIP-multiplicative homogeneity: the logarithmic multiplicative
/// contrast of the region's extrema, lmc(sup_R f, inf_R f), with an
/// infimum of 0 replaced by 1 before the logarithms. Result >= 1.
/// Invariant under f -> lambda (x) f for lambda > 0.
double h_multiplicative(const GreyImage& img, const RegionMask& region);

/// Population variance over the region.
double h_variance(const GreyImage& img, const RegionMask& region);

/// Plain dynamic sup_R f - inf_R f (the region's "diameter").
double h_classical_dynamic(const GreyImage& img, const RegionMask& region);

double criterion_value(CriterionKind kind, const GreyImage& img, const RegionMask& region);

/// Incremental accumulator over region pixel values, so candidate
/// "region plus one pixel" criterion checks cost O(1) during growth.
class RegionStats {
public:
    void add(double v);
    std::size_t count() const { return n_; }
    double min() const { return min_; }
    double max() const { return max_; }

    /// Criterion of the accumulated set; throws on an empty set.
    double value(CriterionKind kind, const GreyScale& scale) const;

    /// Criterion of the accumulated set extended by one extra value.
    double value_with(double extra, CriterionKind kind, const GreyScale& scale) const;

    static RegionStats over(const GreyImage& img, const RegionMask& region);

private:
    std::size_t n_ = 0;
    double min_ = 0.0, max_ = 0.0;
    double sum_ = 0.0, sum_sq_ = 0.0;
};

} // namespace lip

#endif
