#include "lip/max_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lip {

std::vector<int> MaxTree::component_pixels(int node) const {
    std::vector<int> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        out.insert(out.end(), nodes[n].proper_pixels.begin(), nodes[n].proper_pixels.end());
        for (int c : children[n]) stack.push_back(c);
    }
    return out;
}

namespace {

int uf_find(std::vector<int>& zpar, int p) {
    int root = p;
    while (zpar[root] != root) root = zpar[root];
    while (zpar[p] != root) { // path compression
        const int next = zpar[p];
        zpar[p] = root;
        p = next;
    }
    return root;
}

} // namespace

MaxTree build_max_tree(const GreyImage& img, Connectivity conn) {
    const int w = img.width(), h = img.height();
    const std::size_t n = img.size();

    std::vector<int> level(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = img.at_index(i);
        if (v != std::floor(v))
            throw std::domain_error("build_max_tree: image must be integer-valued");
        level[i] = static_cast<int>(v);
    }

    // Pixels by decreasing level, raster order within a level.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return level[a] > level[b]; });

    static constexpr int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int nn = conn == Connectivity::Four ? 4 : 8;

    std::vector<int> parent(n, -1);
    std::vector<int> zpar(n, -1);
    for (const int p : order) {
        parent[p] = p;
        zpar[p] = p;
        const int px = p % w, py = p / w;
        for (int k = 0; k < nn; ++k) {
            const int nx = px + dx8[k], ny = py + dy8[k];
            if (!img.inside(nx, ny)) continue;
            const int q = ny * w + nx;
            if (zpar[q] < 0) continue; // not processed yet
            const int r = uf_find(zpar, q);
            if (r != p) {
                parent[r] = p;
                zpar[r] = p;
            }
        }
    }

    // Canonicalization: route every pixel to the canonical element of
    // its plateau component (the one whose parent sits at a lower level).
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int p = *it;
        const int q = parent[p];
        if (level[parent[q]] == level[q]) parent[p] = parent[q];
    }

    const auto canonical = [&](int p) { return parent[p] == p || level[parent[p]] != level[p]; };
    std::vector<int> canon(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (canon[i] >= 0) continue;
        // climb the (acyclic) same-level chain to a canonical pixel
        std::vector<int> chain;
        int p = static_cast<int>(i);
        while (!canonical(p) && canon[p] < 0) {
            chain.push_back(p);
            p = parent[p];
        }
        const int c = canonical(p) ? p : canon[p];
        canon[i] = c;
        for (int q : chain) canon[q] = c;
    }

    // Node table, deterministically ordered.
    std::vector<int> canonical_pixels;
    for (std::size_t i = 0; i < n; ++i)
        if (canon[i] == static_cast<int>(i)) canonical_pixels.push_back(static_cast<int>(i));
    std::sort(canonical_pixels.begin(), canonical_pixels.end(), [&](int a, int b) {
        if (level[a] != level[b]) return level[a] < level[b];
        return a < b;
    });
    std::vector<int> node_idx(n, -1);
    for (std::size_t k = 0; k < canonical_pixels.size(); ++k)
        node_idx[canonical_pixels[k]] = static_cast<int>(k);

    MaxTree tree;
    tree.width = w;
    tree.height = h;
    tree.scale = img.scale();
    tree.nodes.resize(canonical_pixels.size());
    tree.children.resize(canonical_pixels.size());
    tree.node_of_pixel.assign(n, -1);

    for (std::size_t k = 0; k < canonical_pixels.size(); ++k) {
        const int c = canonical_pixels[k];
        MaxTreeNode& node = tree.nodes[k];
        node.level = level[c];
        if (parent[c] == c) {
            node.parent = -1;
            tree.root = static_cast<int>(k);
        } else {
            node.parent = node_idx[canon[parent[c]]];
            tree.children[node.parent].push_back(static_cast<int>(k));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int k = node_idx[canon[i]];
        tree.node_of_pixel[i] = k;
        tree.nodes[k].proper_pixels.push_back(static_cast<int>(i));
    }
    // Areas, children before parents (nodes are sorted by level).
    for (std::size_t k = tree.nodes.size(); k-- > 0;) {
        tree.nodes[k].area += tree.nodes[k].proper_pixels.size();
        if (tree.nodes[k].parent >= 0) tree.nodes[tree.nodes[k].parent].area += tree.nodes[k].area;
    }
    return tree;
}

GreyImage reconstruct(const MaxTree& tree) {
    GreyImage img(tree.width, tree.height, tree.scale);
    for (std::size_t i = 0; i < img.size(); ++i)
        img.at_index(i) = tree.nodes[tree.node_of_pixel[i]].level;
    return img;
}

std::string dump_tree(const MaxTree& tree) {
    std::ostringstream out;
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
        const MaxTreeNode& node = tree.nodes[k];
        out << k << ' ' << node.parent << ' ' << node.level << ' ' << node.area << ' '
            << node.proper_pixels.size() << '\n';
    }
    return out.str();
}

} // namespace lip
