#include "lip/region_grow.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lip/algebra.hpp"

namespace lip {

const char* step_name(StepKind kind) {
    switch (kind) {
    case StepKind::Grow: return "grow";
    case StepKind::Reduce: return "reduce";
    case StepKind::Extend: return "extend";
    case StepKind::Contract: return "contract";
    }
    return "?";
}

std::vector<std::size_t> GrowTrace::accepted_sizes() const {
    std::vector<std::size_t> sizes;
    for (const GrowStep& s : steps)
        if (s.accepted) sizes.push_back(s.region_size);
    return sizes;
}

RegionMask reduce(const GreyImage& img, const RegionMask& grown, const RegionMask& prev,
                  Connectivity conn) {
    require_same_dims(img, grown);
    const DynamicRange dr = dynamic_range(img, prev);
    RegionMask filtered(grown.width(), grown.height());
    for (std::size_t i = 0; i < grown.size(); ++i)
        if (grown.test_index(i) && dr.contains(img.at_index(i))) filtered.set_index(i);
    return components_touching(filtered, prev, conn);
}

RegionMask extend(const GreyImage& img, const RegionMask& region, const GrowConfig& cfg) {
    require_same_dims(img, region);
    static constexpr int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int nn = cfg.connectivity == Connectivity::Four ? 4 : 8;
    const GreyScale& scale = img.scale();

    RegionMask mask = region;
    RegionStats stats = RegionStats::over(img, mask);
    if (stats.count() == 0) return mask;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < mask.height(); ++y) {
            for (int x = 0; x < mask.width(); ++x) {
                if (mask.test(x, y)) continue;
                bool adjacent = false;
                for (int k = 0; k < nn && !adjacent; ++k) {
                    const int ax = x + dx8[k], ay = y + dy8[k];
                    adjacent = mask.inside(ax, ay) && mask.test(ax, ay);
                }
                if (!adjacent) continue;
                const double v = img(x, y);
                const double to_max = std::fabs(lip_sub(v, stats.max(), scale));
                const double to_min = std::fabs(lip_sub(v, stats.min(), scale));
                if (std::min(to_max, to_min) > 1.0) continue;
                if (stats.value_with(v, cfg.criterion, scale) > cfg.threshold) continue;
                mask.set(x, y);
                stats.add(v);
                changed = true;
            }
        }
    }
    return mask;
}

namespace {

// Unit-width histogram class of a working-domain value.
long class_of(double v) { return static_cast<long>(std::floor(v)); }

struct ClassRange {
    long lo = 0, hi = 0;
};

ClassRange class_range(const GreyImage& img, const RegionMask& mask) {
    const DynamicRange dr = dynamic_range(img, mask);
    return {class_of(dr.lo), class_of(dr.hi)};
}

// Removes every pixel of `mask` whose value falls in class `cls`.
RegionMask without_class(const GreyImage& img, const RegionMask& mask, long cls) {
    RegionMask out = mask;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask.test_index(i) && class_of(img.at_index(i)) == cls) out.set_index(i, false);
    return out;
}

bool class_holds_any(const GreyImage& img, const RegionMask& mask, const RegionMask& which,
                     long cls) {
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask.test_index(i) && which.test_index(i) && class_of(img.at_index(i)) == cls)
            return true;
    return false;
}

} // namespace

RegionMask contract(const GreyImage& img, const RegionMask& region, const GrowConfig& cfg,
                    const RegionMask& seed) {
    require_same_dims(img, region);
    if (region.empty()) throw std::domain_error("contract: empty region");

    RegionMask cur = region;
    for (;;) {
        if (criterion_value(cfg.criterion, img, cur) <= cfg.threshold) return cur;

        const ClassRange classes = class_range(img, cur);
        const double inf = std::numeric_limits<double>::infinity();

        double score_min = inf, score_max = inf;
        RegionMask cand_min, cand_max;
        if (!class_holds_any(img, cur, seed, classes.lo)) {
            cand_min = components_touching(without_class(img, cur, classes.lo), seed,
                                           cfg.connectivity);
            if (!cand_min.empty())
                score_min = criterion_value(cfg.criterion, img, cand_min);
        }
        if (classes.hi != classes.lo && !class_holds_any(img, cur, seed, classes.hi)) {
            cand_max = components_touching(without_class(img, cur, classes.hi), seed,
                                           cfg.connectivity);
            if (!cand_max.empty())
                score_max = criterion_value(cfg.criterion, img, cand_max);
        }

        if (score_min == inf && score_max == inf) {
            std::ostringstream msg;
            msg << "contract: region still inhomogeneous (criterion "
                << criterion_value(cfg.criterion, img, cur) << " > " << cfg.threshold
                << ") but removing any further class would drop the seed";
            throw std::domain_error(msg.str());
        }
        if (score_max <= score_min)
            cur = std::move(cand_max);
        else
            cur = std::move(cand_min);
    }
}

GrowResult grow(const GreyImage& img, const RegionMask& seed, const GrowConfig& cfg) {
    require_same_dims(img, seed);
    if (seed.empty()) throw std::domain_error("grow: empty seed");
    if (!(cfg.threshold > 0.0)) throw std::domain_error("grow: threshold must be positive");
    if (cfg.max_iterations < 0) throw std::domain_error("grow: negative max_iterations");

    const GreyImage work = cfg.work_in_complement ? complement_image(img) : img;
    const auto value = [&](const RegionMask& r) {
        return criterion_value(cfg.criterion, work, r);
    };

    GrowResult res;
    res.region = seed;
    res.criterion_value = value(seed);
    if (res.criterion_value > cfg.threshold) {
        std::ostringstream msg;
        msg << "grow: seed region not homogeneous (criterion " << res.criterion_value
            << " > threshold " << cfg.threshold << ")";
        throw std::domain_error(msg.str());
    }

    const int max_iter = cfg.max_iterations > 0
                             ? cfg.max_iterations
                             : 10 * std::max(img.width(), img.height());

    for (int iter = 1; iter <= max_iter; ++iter) {
        const RegionMask dilated = dilate(res.region, cfg.se);
        const double h_dilated = value(dilated);

        RegionMask candidate;
        double h_candidate = 0.0;
        if (h_dilated <= cfg.threshold) {
            candidate = dilated;
            h_candidate = h_dilated;
            res.trace.steps.push_back(
                {iter, StepKind::Grow, candidate.count(), h_candidate, false});
        } else {
            res.trace.steps.push_back(
                {iter, StepKind::Grow, dilated.count(), h_dilated, false});
            const RegionMask reduced = reduce(work, dilated, res.region, cfg.connectivity);
            const double h_reduced = value(reduced);
            res.trace.steps.push_back(
                {iter, StepKind::Reduce, reduced.count(), h_reduced, false});
            if (h_reduced <= cfg.threshold) {
                candidate = extend(work, reduced, cfg);
                h_candidate = value(candidate);
                res.trace.steps.push_back(
                    {iter, StepKind::Extend, candidate.count(), h_candidate, false});
            } else {
                candidate = contract(work, reduced, cfg, seed);
                h_candidate = value(candidate);
                res.trace.steps.push_back(
                    {iter, StepKind::Contract, candidate.count(), h_candidate, false});
            }
        }

        const bool grew = res.region.subset_of(candidate) &&
                          candidate.count() > res.region.count();
        if (!grew) break; // the region does not grow any more
        res.trace.steps.back().accepted = true;
        res.region = std::move(candidate);
        res.criterion_value = h_candidate;
        res.iterations = iter;
    }
    return res;
}

} // namespace lip
