#ifndef LIP_MAX_TREE_HPP
#define LIP_MAX_TREE_HPP

#include <string>
#include <vector>

#include "lip/image.hpp"

namespace lip {

/// Node of a max-tree: a connected component of an upper level set
/// X_v = { x | f(x) >= v }, identified by the level at which it first
/// appears. Proper pixels are those whose grey value is exactly the
/// node's level; they partition the image support across all nodes.
struct MaxTreeNode {
    int level = 0;
    int parent = -1; // node index; -1 for the root
    std::vector<int> proper_pixels;
    std::size_t area = 0; // proper pixels plus all descendants'
};

/// Max-tree (component tree) of the upper level sets of an
/// integer-valued image. Parent levels are strictly below child levels.
struct MaxTree {
    int width = 0, height = 0;
    GreyScale scale;
    int root = -1;
    std::vector<MaxTreeNode> nodes;      // sorted by (level, first pixel)
    std::vector<int> node_of_pixel;      // pixel index -> node index
    std::vector<std::vector<int>> children;

    /// All pixels of the node's component (proper + descendants).
    std::vector<int> component_pixels(int node) const;
};

/// Builds the max-tree by union-find immersion over pixels sorted by
/// decreasing level. Requires an integer-valued image (quantize first).
MaxTree build_max_tree(const GreyImage& img, Connectivity conn = Connectivity::Four);

/// Image whose pixels carry their node's level. Equals the source
/// image exactly.
GreyImage reconstruct(const MaxTree& tree);

/// Line-oriented debug dump: "id parent level area proper". Not a
/// stability contract.
std::string dump_tree(const MaxTree& tree);

} // namespace lip

#endif
