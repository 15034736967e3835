#ifndef LATTICEPLAN_BOUNDS_HPP
#define LATTICEPLAN_BOUNDS_HPP

#include <algorithm>
#include <cmath>

namespace latticeplan {

/// Feasible range [lower, upper] for the next tuple entry, together with the
/// accumulated slack sum(t_j - 1) of everything emitted so far. Slack zero
/// means the partial path sits on the diagonal, which forces lower = 1.
struct Bounds {
    int lower = 0;
    int upper = 0;
    int slack = 0;

    bool operator==(const Bounds&) const = default;
};

/// One step of the bounds recursion:
///   S' = S + t - 1,   U' = U - t,   L' = 1 - sgn(S').
/// Negative slack cannot occur in a valid run; it is clamped to L' = 1.
inline Bounds next_bounds(int prev_t, int prev_slack, int prev_upper)
{
    const int slack = prev_slack + prev_t - 1;
    const int upper = prev_upper - prev_t;
    const int lower = slack > 0 ? 0 : 1;
    return Bounds { lower, upper, slack };
}

/// Entry state for an n-node generation: the recursion seeded with
/// S = 0, U = n, t = 1 yields (L, U, S) = (1, n-1, 0), i.e. t_1 in [1, n-1].
inline Bounds initial_bounds(int n)
{
    return next_bounds(1, 0, n);
}

/// Maps a normalization factor in [0, 1] onto the integer range [lower,
/// upper]; halfway values round away from zero.
inline int quantize(int lower, int upper, double lambda)
{
    const int t = static_cast<int>(std::round(lower + lambda * (upper - lower)));
    return std::clamp(t, lower, upper);
}

/// Normalization factor lambda = r * (x/n)^alpha for the element at 1-based
/// position x of an n-node path. Small alpha pushes mass to the upper bound
/// early (L-shaped paths); large alpha pins entries to the lower bound
/// (diagonal-hugging staircase). alpha is clamped to 1e6 before
/// exponentiation.
inline double lambda_of(int x, int n, double alpha, double r)
{
    const double a = std::min(alpha, 1e6);
    return r * std::pow(static_cast<double>(x) / static_cast<double>(n), a);
}

} // namespace latticeplan

#endif
