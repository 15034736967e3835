#ifndef LATTICEPLAN_TUPLE_HPP
#define LATTICEPLAN_TUPLE_HPP

#include <span>
#include <string>
#include <vector>

namespace latticeplan {

/// Preorder child-count sequence (t_1 .. t_n) of an ordered rooted tree with
/// n nodes. A sequence is valid when
///   - t_n = 0 and every t_i lies in [0, n-1],
///   - the entries sum to n-1 (one edge per non-root node),
///   - every proper prefix satisfies sum(t_1..t_i) >= i (the corresponding
///     lattice path never drops below the diagonal).
class TreeTuple {
public:
    TreeTuple() = default;
    explicit TreeTuple(std::vector<int> entries)
        : entries_(std::move(entries))
    {
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const int> entries() const { return entries_; }

    bool operator==(const TreeTuple&) const = default;

private:
    std::vector<int> entries_;
};

enum class TupleViolation {
    None,
    Empty,
    EntryOutOfRange, // some t_i outside [0, n-1]
    PrefixDeficit, // sum(t_1..t_i) < i for some i < n
    TerminalNonzero, // t_n != 0
    SumMismatch, // total != n-1
};

struct TupleVerdict {
    bool valid = false;
    TupleViolation violation = TupleViolation::None;
    int index = -1; ///< 1-based position of the first offending entry, -1 if global
    std::string message;

    explicit operator bool() const { return valid; }
};

/// Checks the three tuple invariants, scanning left to right and reporting
/// the first violation encountered (per-entry range and prefix checks first,
/// then the terminal zero and the total).
TupleVerdict validate_tuple(const TreeTuple& t);

/// Throwing form for operations whose precondition is a valid tuple.
void require_valid(const TreeTuple& t);

/// All valid tuples with n nodes, generated by depth-first walk of the
/// bounds recursion. Count equals Catalan(n-1). Guarded to 2 <= n <= 15.
std::vector<TreeTuple> enumerate_tuples(int n);

/// Comma-separated integer form, one tuple per line in list files.
std::string format_tuple(const TreeTuple& t);
TreeTuple parse_tuple(const std::string& line);

} // namespace latticeplan

#endif
