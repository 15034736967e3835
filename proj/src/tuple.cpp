#include "latticeplan/tuple.hpp"

#include "latticeplan/bounds.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace latticeplan {

namespace {

    TupleVerdict fail(TupleViolation v, int index, std::string message)
    {
        return TupleVerdict { false, v, index, std::move(message) };
    }

} // namespace

TupleVerdict validate_tuple(const TreeTuple& t)
{
    const int n = t.size();
    if (n == 0)
        return fail(TupleViolation::Empty, -1, "tuple is empty");

    long long prefix = 0;
    for (int i = 1; i <= n; ++i) {
        const int value = t.at(i - 1);
        if (value < 0 || value > n - 1) {
            std::ostringstream os;
            os << "entry t_" << i << " = " << value << " outside [0, " << n - 1 << "]";
            return fail(TupleViolation::EntryOutOfRange, i, os.str());
        }
        prefix += value;
        if (i < n && prefix < i) {
            std::ostringstream os;
            os << "prefix sum " << prefix << " < " << i << " at i=" << i;
            return fail(TupleViolation::PrefixDeficit, i, os.str());
        }
    }
    if (t.at(n - 1) != 0) {
        std::ostringstream os;
        os << "terminal entry t_" << n << " = " << t.at(n - 1) << " != 0";
        return fail(TupleViolation::TerminalNonzero, n, os.str());
    }
    if (prefix != n - 1) {
        std::ostringstream os;
        os << "entries sum to " << prefix << ", expected " << n - 1;
        return fail(TupleViolation::SumMismatch, -1, os.str());
    }
    return TupleVerdict { true, TupleViolation::None, -1, "" };
}

void require_valid(const TreeTuple& t)
{
    const TupleVerdict verdict = validate_tuple(t);
    if (!verdict.valid)
        throw std::invalid_argument("invalid tuple: " + verdict.message);
}

namespace {

    void enumerate_rec(int n, int position, int lower, int upper, int slack,
        std::vector<int>& prefix, std::vector<TreeTuple>& out)
    {
        if (position == n) {
            prefix.push_back(0); // t_n is forced
            out.emplace_back(prefix);
            prefix.pop_back();
            return;
        }
        for (int t = lower; t <= upper; ++t) {
            prefix.push_back(t);
            const Bounds next = next_bounds(t, slack, upper);
            enumerate_rec(n, position + 1, next.lower, next.upper, next.slack, prefix, out);
            prefix.pop_back();
        }
    }

} // namespace

std::vector<TreeTuple> enumerate_tuples(int n)
{
    if (n < 2 || n > 15)
        throw std::invalid_argument("enumerate_tuples: n must lie in [2, 15]");
    std::vector<TreeTuple> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    const Bounds first = initial_bounds(n);
    enumerate_rec(n, 1, first.lower, first.upper, first.slack, prefix, out);
    return out;
}

std::string format_tuple(const TreeTuple& t)
{
    std::ostringstream os;
    for (int i = 0; i < t.size(); ++i) {
        if (i)
            os << ',';
        os << t.at(i);
    }
    return os.str();
}

TreeTuple parse_tuple(const std::string& line)
{
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos)
            comma = line.size();
        const std::string token = line.substr(pos, comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_tuple: bad entry '" + token + "'");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        if (used != token.size())
            throw std::invalid_argument("parse_tuple: bad entry '" + token + "'");
        entries.push_back(value);
        pos = comma + 1;
        if (comma == line.size())
            break;
    }
    return TreeTuple(std::move(entries));
}

} // namespace latticeplan
