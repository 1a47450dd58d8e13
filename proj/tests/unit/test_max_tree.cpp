#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lip/max_tree.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lip;

namespace {

// Collect the full pixel set of every node, sorted, as sets.
std::vector<std::vector<int>> all_components(const MaxTree& tree) {
    std::vector<std::vector<int>> out(tree.nodes.size());
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        out[k] = tree.component_pixels(static_cast<int>(k));
        std::sort(out[k].begin(), out[k].end());
    }
    return out;
}

// Topology signature independent of node numbering: for every node,
// its sorted proper pixels plus the smallest proper pixel of its parent.
using Signature = std::set<std::pair<std::vector<int>, int>>;

Signature signature(const MaxTree& tree) {
    Signature sig;
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        std::vector<int> proper = tree.nodes[k].proper_pixels;
        std::sort(proper.begin(), proper.end());
        int parent_pixel = -1;
        if (tree.nodes[k].parent >= 0) {
            const auto& pp = tree.nodes[tree.nodes[k].parent].proper_pixels;
            parent_pixel = *std::min_element(pp.begin(), pp.end());
        }
        sig.insert({std::move(proper), parent_pixel});
    }
    return sig;
}

void check_against_oracle(const GreyImage& img, Connectivity conn) {
    const MaxTree tree = build_max_tree(img, conn);

    // reconstruct is the identity
    CHECK(reconstruct(tree).same_pixels(img));

    // proper pixels partition the support
    std::vector<int> owner(img.size(), -1);
    std::size_t total = 0;
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        for (int p : tree.nodes[k].proper_pixels) {
            CHECK(owner[p] == -1);
            owner[p] = static_cast<int>(k);
            CHECK(img.at_index(p) == tree.nodes[k].level);
        }
        total += tree.nodes[k].proper_pixels.size();
        CHECK(tree.node_of_pixel[tree.nodes[k].proper_pixels.front()] == static_cast<int>(k));
    }
    CHECK(total == img.size());

    // parent levels strictly increase toward leaves, areas are subtree sizes
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        if (tree.nodes[k].parent >= 0)
            CHECK(tree.nodes[tree.nodes[k].parent].level < tree.nodes[k].level);
        else
            CHECK(static_cast<int>(k) == tree.root);
        CHECK(tree.nodes[k].area == tree.component_pixels(static_cast<int>(k)).size());
    }

    // every level set decomposes exactly into the tree's components
    const auto comps = all_components(tree);
    std::set<int> levels;
    for (std::size_t i = 0; i < img.size(); ++i)
        levels.insert(static_cast<int>(img.at_index(i)));
    for (int v : levels) {
        std::vector<std::vector<int>> claimed;
        for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
            const bool starts_here =
                tree.nodes[k].level >= v &&
                (tree.nodes[k].parent < 0 || tree.nodes[tree.nodes[k].parent].level < v);
            if (starts_here) claimed.push_back(comps[k]);
        }
        std::sort(claimed.begin(), claimed.end());
        CHECK(claimed == oracle::level_set_components(img, v, conn));
    }
}

} // namespace

TEST_CASE("constant image yields a single node") {
    const GreyImage img(4, 3, GreyScale(), 7.0);
    const MaxTree tree = build_max_tree(img);
    REQUIRE(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].level == 7);
    CHECK(tree.nodes[0].parent == -1);
    CHECK(tree.nodes[0].area == 12);
    CHECK(tree.root == 0);
    CHECK(reconstruct(tree).same_pixels(img));
}

TEST_CASE("1x4 image [0,2,0,3] produces a root with two leaf children") {
    GreyImage img(4, 1);
    img(0, 0) = 0.0;
    img(1, 0) = 2.0;
    img(2, 0) = 0.0;
    img(3, 0) = 3.0;
    const MaxTree tree = build_max_tree(img, Connectivity::Four);
    REQUIRE(tree.nodes.size() == 3);

    const MaxTreeNode& root = tree.nodes[tree.root];
    CHECK(root.level == 0);
    CHECK(root.area == 4);
    REQUIRE(tree.children[tree.root].size() == 2);

    std::map<int, std::vector<int>> leaves; // level -> proper pixels
    for (int c : tree.children[tree.root]) {
        CHECK(tree.children[c].empty());
        leaves[tree.nodes[c].level] = tree.nodes[c].proper_pixels;
    }
    REQUIRE(leaves.count(2) == 1);
    REQUIRE(leaves.count(3) == 1);
    CHECK(leaves[2] == std::vector<int>{1});
    CHECK(leaves[3] == std::vector<int>{3});
}

TEST_CASE("max-tree matches the flood-fill oracle on random images") {
    testgen::Rng rng(701);
    for (int trial = 0; trial < 40; ++trial) {
        const int w = 2 + static_cast<int>(rng() % 7);
        const int h = 2 + static_cast<int>(rng() % 7);
        const GreyImage img = testgen::random_quantized_image(rng, w, h, 4);
        check_against_oracle(img, trial % 2 ? Connectivity::Four : Connectivity::Eight);
    }
}

TEST_CASE("build-reconstruct round trip on full 8-bit images") {
    testgen::Rng rng(702);
    for (int trial = 0; trial < 20; ++trial) {
        const GreyImage img = quantize(testgen::random_image(rng, 8, 8, 0.0, 255.0));
        CHECK(reconstruct(build_max_tree(img)).same_pixels(img));
    }
}

TEST_CASE("tree topology is invariant under increasing grey remaps") {
    testgen::Rng rng(703);
    for (int trial = 0; trial < 10; ++trial) {
        const GreyImage img = testgen::random_quantized_image(rng, 8, 8, 4);
        const Signature base = signature(build_max_tree(img));

        // strictly increasing remap of the levels actually present
        std::set<int> present;
        for (std::size_t i = 0; i < img.size(); ++i)
            present.insert(static_cast<int>(img.at_index(i)));
        std::set<int> targets;
        while (targets.size() < present.size()) targets.insert(static_cast<int>(rng() % 256));
        std::map<int, int> remap;
        auto t = targets.begin();
        for (int level : present) remap[level] = *t++;

        GreyImage mapped(img.width(), img.height());
        for (std::size_t i = 0; i < img.size(); ++i)
            mapped.at_index(i) = remap[static_cast<int>(img.at_index(i))];

        CHECK(signature(build_max_tree(mapped)) == base);
    }
}

TEST_CASE("max-tree refuses non-integer images") {
    GreyImage img(2, 2, GreyScale(), 1.5);
    CHECK_THROWS_AS(build_max_tree(img), std::domain_error);
}

TEST_CASE("dump_tree lists one line per node") {
    GreyImage img(4, 1);
    img(1, 0) = 2.0;
    const std::string dump = dump_tree(build_max_tree(img));
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 2);
}
