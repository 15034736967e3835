#ifndef LATTICEPLAN_STATS_HPP
#define LATTICEPLAN_STATS_HPP

#include <span>
#include <vector>

namespace latticeplan {

/// Midranks of the concatenation of two samples: tied values share the
/// average of the rank positions they occupy. Returned in input order,
/// sample a first.
std::vector<double> midranks(std::span<const double> a, std::span<const double> b);

struct RankSumResult {
    double w_statistic = 0.0; ///< rank sum of sample a
    double u_statistic = 0.0; ///< W - n_a(n_a+1)/2
    double p_value = 1.0; ///< two-sided
    bool exact = false; ///< enumeration branch used
};

/// Exact two-sided p: enumerates every assignment of the combined midranks
/// to a subset of size |a| and counts those at least as far from the null
/// mean n_a(N+1)/2 as the observed rank sum.
double rank_sum_exact_p(std::span<const double> a, std::span<const double> b);

/// Normal approximation with midrank tie correction and 0.5 continuity
/// correction; degenerate all-tied samples return 1.0.
double rank_sum_normal_p(std::span<const double> a, std::span<const double> b);

/// Wilcoxon/Mann-Whitney rank-sum test. Exact enumeration up to combined
/// size 12, normal approximation beyond. Symmetric in its arguments.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b);

} // namespace latticeplan

#endif
