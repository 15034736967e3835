#ifndef LATTICEPLAN_TREE_HPP
#define LATTICEPLAN_TREE_HPP

#include "latticeplan/tuple.hpp"

#include <vector>

namespace latticeplan {

/// Ordered rooted tree stored in preorder. Children of a node appear in
/// index order, so the node sequence itself fixes the left-to-right child
/// ordering.
struct OrderedTree {
    struct Node {
        int child_count = 0;
        int parent = -1; ///< preorder index of the parent, -1 for the root
    };

    std::vector<Node> nodes;

    int size() const { return static_cast<int>(nodes.size()); }

    bool operator==(const OrderedTree&) const = default;
};

/// Stack-based construction: entries are visited in order, each new node is
/// attached to the deepest node that still has unfilled child slots. O(n).
OrderedTree tuple_to_tree(const TreeTuple& t);

/// Inverse of tuple_to_tree. Child counts are recomputed from the parent
/// links rather than read back from the stored fields, and the stored order
/// is verified to be the preorder of the linked structure. Throws
/// std::invalid_argument on malformed input.
TreeTuple tree_to_tuple(const OrderedTree& tree);

} // namespace latticeplan

#endif
