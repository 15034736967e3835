#include "latticeplan/tree.hpp"

#include <stdexcept>

namespace latticeplan {

OrderedTree tuple_to_tree(const TreeTuple& t)
{
    require_valid(t);
    const int n = t.size();

    OrderedTree tree;
    tree.nodes.resize(static_cast<std::size_t>(n));

    // Stack of nodes with unfilled child slots, deepest on top.
    std::vector<std::pair<int, int>> open; // (node index, remaining slots)
    for (int i = 0; i < n; ++i) {
        tree.nodes[static_cast<std::size_t>(i)].child_count = t.at(i);
        if (i == 0) {
            tree.nodes[0].parent = -1;
        } else {
            if (open.empty())
                throw std::invalid_argument("tuple_to_tree: no open node to attach to");
            auto& [parent, remaining] = open.back();
            tree.nodes[static_cast<std::size_t>(i)].parent = parent;
            if (--remaining == 0)
                open.pop_back();
        }
        if (t.at(i) > 0)
            open.emplace_back(i, t.at(i));
    }
    return tree;
}

TreeTuple tree_to_tuple(const OrderedTree& tree)
{
    const int n = tree.size();
    if (n == 0)
        throw std::invalid_argument("tree_to_tuple: empty tree");
    if (tree.nodes[0].parent != -1)
        throw std::invalid_argument("tree_to_tuple: node 0 is not a root");

    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        const int parent = tree.nodes[static_cast<std::size_t>(i)].parent;
        if (parent < 0 || parent >= i)
            throw std::invalid_argument("tree_to_tuple: parent must precede child in preorder");
        children[static_cast<std::size_t>(parent)].push_back(i);
        ++counts[static_cast<std::size_t>(parent)];
    }

    // The stored sequence must be the preorder of the linked structure.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack { 0 };
    while (!stack.empty()) {
        const int node = stack.back();
        stack.pop_back();
        order.push_back(node);
        const auto& kids = children[static_cast<std::size_t>(node)];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back(*it);
    }
    for (int i = 0; i < n; ++i) {
        if (order[static_cast<std::size_t>(i)] != i)
            throw std::invalid_argument("tree_to_tuple: node order is not preorder");
        if (tree.nodes[static_cast<std::size_t>(i)].child_count != counts[static_cast<std::size_t>(i)])
            throw std::invalid_argument("tree_to_tuple: stored child_count disagrees with links");
    }
    return TreeTuple(std::move(counts));
}

} // namespace latticeplan
