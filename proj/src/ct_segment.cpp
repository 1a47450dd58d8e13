#include "lip/ct_segment.hpp"

#include <algorithm>
#include <stdexcept>

namespace lip {

namespace {

void check_params(const CostParams& p) {
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
        throw std::domain_error("alpha must lie in [0, 1]");
}

} // namespace

double d_alpha(const RegionMask& x_mask, const RegionMask& g_mask, const CostParams& p) {
    check_params(p);
    if (x_mask.width() != g_mask.width() || x_mask.height() != g_mask.height())
        throw std::domain_error("d_alpha: dimension mismatch");
    std::size_t fp = 0, fn = 0;
    for (std::size_t i = 0; i < x_mask.size(); ++i) {
        const bool in_x = x_mask.test_index(i), in_g = g_mask.test_index(i);
        if (in_x && !in_g) ++fp;
        if (in_g && !in_x) ++fn;
    }
    return p.alpha * static_cast<double>(fp) + (1.0 - p.alpha) * static_cast<double>(fn);
}

CtSegmentation segment_ct(const MaxTree& tree, const RegionMask& g_mask, const CostParams& p) {
    check_params(p);
    if (tree.width != g_mask.width() || tree.height != g_mask.height())
        throw std::domain_error("segment_ct: dimension mismatch");
    if (tree.root < 0) throw std::domain_error("segment_ct: empty tree");

    const std::size_t nodes = tree.nodes.size();
    std::vector<std::size_t> fp_subtree(nodes, 0);   // |component \ G|
    std::vector<std::size_t> g_in_proper(nodes, 0);  // |G cap proper|
    for (std::size_t k = 0; k < nodes; ++k) {
        for (int px : tree.nodes[k].proper_pixels) {
            if (g_mask.test_index(static_cast<std::size_t>(px)))
                ++g_in_proper[k];
            else
                ++fp_subtree[k];
        }
    }

    std::vector<double> best(nodes, 0.0);
    std::vector<bool> take(nodes, false);
    // Nodes are sorted by level, so children precede parents in
    // reverse index order.
    for (std::size_t k = nodes; k-- > 0;) {
        if (tree.nodes[k].parent >= 0)
            fp_subtree[tree.nodes[k].parent] += fp_subtree[k];
        double skip = (1.0 - p.alpha) * static_cast<double>(g_in_proper[k]);
        for (int c : tree.children[k]) skip += best[c];
        const double taken = p.alpha * static_cast<double>(fp_subtree[k]);
        // Ties go to the node only when taking it is free at every
        // alpha (component inside G): a marker equal to a node is then
        // recovered as exactly that node.
        take[k] = taken < skip || (taken == skip && fp_subtree[k] == 0);
        best[k] = take[k] ? taken : skip;
    }

    CtSegmentation out;
    out.region = RegionMask(tree.width, tree.height);
    std::vector<int> stack{tree.root};
    while (!stack.empty()) {
        const int k = stack.back();
        stack.pop_back();
        if (take[k]) {
            out.selected_nodes.push_back(k);
            for (int px : tree.component_pixels(k))
                out.region.set_index(static_cast<std::size_t>(px));
        } else {
            for (int c : tree.children[k]) stack.push_back(c);
        }
    }
    std::sort(out.selected_nodes.begin(), out.selected_nodes.end());

    for (std::size_t i = 0; i < out.region.size(); ++i) {
        const bool in_x = out.region.test_index(i), in_g = g_mask.test_index(i);
        if (in_x && !in_g) ++out.false_positives;
        if (in_g && !in_x) ++out.false_negatives;
    }
    out.cost = p.alpha * static_cast<double>(out.false_positives) +
               (1.0 - p.alpha) * static_cast<double>(out.false_negatives);
    return out;
}

} // namespace lip
