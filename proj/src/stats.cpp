#include "latticeplan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace latticeplan {

std::vector<double> midranks(std::span<const double> a, std::span<const double> b)
{
    const std::size_t total = a.size() + b.size();
    std::vector<std::pair<double, std::size_t>> tagged;
    tagged.reserve(total);
    for (std::size_t i = 0; i < a.size(); ++i)
        tagged.emplace_back(a[i], i);
    for (std::size_t i = 0; i < b.size(); ++i)
        tagged.emplace_back(b[i], a.size() + i);
    std::sort(tagged.begin(), tagged.end(),
        [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });

    std::vector<double> ranks(total, 0.0);
    std::size_t i = 0;
    while (i < total) {
        std::size_t j = i;
        while (j + 1 < total && tagged[j + 1].first == tagged[i].first)
            ++j;
        const double shared = 0.5 * static_cast<double>((i + 1) + (j + 1));
        for (std::size_t k = i; k <= j; ++k)
            ranks[tagged[k].second] = shared;
        i = j + 1;
    }
    return ranks;
}

namespace {

    double observed_w(std::span<const double> a, std::span<const double> b)
    {
        const std::vector<double> ranks = midranks(a, b);
        double w = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            w += ranks[i];
        return w;
    }

    // Counts size-na subsets of `ranks` whose sum is at least `threshold`
    // away from `mean`. Plain DFS; callers keep the combined size small.
    void count_extreme(const std::vector<double>& ranks, std::size_t next,
        std::size_t remaining, double partial, double mean, double threshold,
        long long& extreme, long long& total)
    {
        if (remaining == 0) {
            ++total;
            if (std::abs(partial - mean) >= threshold - 1e-9)
                ++extreme;
            return;
        }
        if (ranks.size() - next < remaining)
            return;
        count_extreme(ranks, next + 1, remaining - 1, partial + ranks[next], mean,
            threshold, extreme, total);
        count_extreme(ranks, next + 1, remaining, partial, mean, threshold,
            extreme, total);
    }

} // namespace

double rank_sum_exact_p(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_exact_p: samples must be nonempty");
    const std::vector<double> ranks = midranks(a, b);
    const auto n = static_cast<double>(ranks.size());
    const double mean = static_cast<double>(a.size()) * (n + 1.0) / 2.0;
    const double threshold = std::abs(observed_w(a, b) - mean);

    long long extreme = 0, total = 0;
    count_extreme(ranks, 0, a.size(), 0.0, mean, threshold, extreme, total);
    return static_cast<double>(extreme) / static_cast<double>(total);
}

double rank_sum_normal_p(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_normal_p: samples must be nonempty");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double n = na + nb;

    // Tie correction needs the tie group sizes of the combined sample.
    std::map<double, long long> groups;
    for (const double v : a)
        ++groups[v];
    for (const double v : b)
        ++groups[v];
    double tie_term = 0.0;
    for (const auto& [value, count] : groups) {
        (void)value;
        const double t = static_cast<double>(count);
        tie_term += t * t * t - t;
    }

    const double u = observed_w(a, b) - na * (na + 1.0) / 2.0;
    const double mean_u = na * nb / 2.0;
    const double variance = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (variance <= 0.0)
        return 1.0; // every value tied
    const double z = std::max(std::abs(u - mean_u) - 0.5, 0.0) / std::sqrt(variance);
    const double p = std::erfc(z / std::sqrt(2.0));
    return std::min(p, 1.0);
}

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_test: samples must be nonempty");

    RankSumResult result;
    result.w_statistic = observed_w(a, b);
    result.u_statistic = result.w_statistic
        - static_cast<double>(a.size()) * (static_cast<double>(a.size()) + 1.0) / 2.0;
    result.exact = a.size() + b.size() <= 12;
    result.p_value = result.exact ? rank_sum_exact_p(a, b) : rank_sum_normal_p(a, b);
    return result;
}

} // namespace latticeplan
