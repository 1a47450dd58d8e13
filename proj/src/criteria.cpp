#include "lip/criteria.hpp"

#include <stdexcept>

#include "lip/algebra.hpp"

namespace lip {

const char* criterion_name(CriterionKind kind) {
    switch (kind) {
    case CriterionKind::LipAdditive: return "add";
    case CriterionKind::LipMultiplicative: return "mul";
    case CriterionKind::Variance: return "variance";
    case CriterionKind::ClassicalDynamic: return "dynamic";
    }
    return "?";
}

CriterionKind criterion_from_name(const std::string& name) {
    if (name == "add") return CriterionKind::LipAdditive;
    if (name == "mul") return CriterionKind::LipMultiplicative;
    if (name == "variance") return CriterionKind::Variance;
    if (name == "dynamic") return CriterionKind::ClassicalDynamic;
    throw std::domain_error("unknown criterion '" + name + "'");
}

void RegionStats::add(double v) {
    if (n_ == 0) {
        min_ = max_ = v;
    } else {
        if (v < min_) min_ = v;
        if (v > max_) max_ = v;
    }
    sum_ += v;
    sum_sq_ += v * v;
    ++n_;
}

double RegionStats::value(CriterionKind kind, const GreyScale& scale) const {
    if (n_ == 0) throw std::domain_error("criterion over empty region");
    switch (kind) {
    case CriterionKind::LipAdditive:
        return lip_sub(max_, min_, scale);
    case CriterionKind::LipMultiplicative:
        return lmc(max_, min_, scale);
    case CriterionKind::Variance: {
        const double mean = sum_ / static_cast<double>(n_);
        const double var = sum_sq_ / static_cast<double>(n_) - mean * mean;
        return var < 0.0 ? 0.0 : var; // guard rounding
    }
    case CriterionKind::ClassicalDynamic:
        return max_ - min_;
    }
    throw std::domain_error("unknown criterion kind");
}

double RegionStats::value_with(double extra, CriterionKind kind, const GreyScale& scale) const {
    RegionStats s = *this;
    s.add(extra);
    return s.value(kind, scale);
}

RegionStats RegionStats::over(const GreyImage& img, const RegionMask& region) {
    require_same_dims(img, region);
    RegionStats s;
    for (std::size_t i = 0; i < region.size(); ++i)
        if (region.test_index(i)) s.add(img.at_index(i));
    return s;
}

double h_additive(const GreyImage& img, const RegionMask& region) {
    return RegionStats::over(img, region).value(CriterionKind::LipAdditive, img.scale());
}

double h_multiplicative(const GreyImage& img, const RegionMask& region) {
    return RegionStats::over(img, region).value(CriterionKind::LipMultiplicative, img.scale());
}

double h_variance(const GreyImage& img, const RegionMask& region) {
    return RegionStats::over(img, region).value(CriterionKind::Variance, img.scale());
}

double h_classical_dynamic(const GreyImage& img, const RegionMask& region) {
    return RegionStats::over(img, region).value(CriterionKind::ClassicalDynamic, img.scale());
}

double criterion_value(CriterionKind kind, const GreyImage& img, const RegionMask& region) {
    return RegionStats::over(img, region).value(kind, img.scale());
}

} // namespace lip
