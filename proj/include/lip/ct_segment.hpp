#ifndef LIP_CT_SEGMENT_HPP
#define LIP_CT_SEGMENT_HPP

#include <vector>

#include "lip/image.hpp"
#include "lip/max_tree.hpp"

namespace lip {

/// Weight of the pseudo-distance d^a(X, G) = a|X\G| + (1-a)|G\X|.
/// d^1 counts false positives, d^0 false negatives of X w.r.t. G.
struct CostParams {
    double alpha = 0.0;
};

double d_alpha(const RegionMask& x_mask, const RegionMask& g_mask, const CostParams& p);

struct CtSegmentation {
    RegionMask region;
    std::vector<int> selected_nodes; // maximal selected nodes, ascending index
    double cost = 0.0;               // d_alpha(region, g_mask)
    std::size_t false_positives = 0; // |region \ G|
    std::size_t false_negatives = 0; // |G \ region|
};

/// Picks the subset of max-tree nodes whose union minimizes d^alpha
/// against the marker G, by bottom-up dynamic programming over the
/// tree: a node is either taken (its whole component selected) or its
/// children are solved independently, forfeiting the G pixels among its
/// proper pixels. Ties prefer taking the node.
CtSegmentation segment_ct(const MaxTree& tree, const RegionMask& g_mask, const CostParams& p);

} // namespace lip

#endif
