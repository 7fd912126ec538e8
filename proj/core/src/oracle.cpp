#include "vdb/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <thread>

#include "vdb/families.hpp"

namespace vdb {

namespace {

constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 6;

void require_order(int n) {
    if (n < kMinOrder || n > kMaxOrder)
        throw DomainError("exhaustive enumeration supports 2 <= n <= " +
                          std::to_string(kMaxOrder) + ", got n=" + std::to_string(n));
}

/// Per-order lookup tables for the bitmask hot loop.
struct SlotTables {
    int n = 0;
    int slots = 0;
    std::array<std::uint8_t, 64> tail{};
    std::array<std::uint8_t, 64> head{};
    std::array<std::uint64_t, 8> row{};    // arcs leaving u
    std::array<std::uint64_t, 8> col{};    // arcs entering v
    std::array<std::uint64_t, 8> cover{};  // row | col
};

SlotTables make_slot_tables(int n) {
    SlotTables t;
    t.n = n;
    t.slots = slot_count(n);
    for (int s = 0; s < t.slots; ++s) {
        const Arc a = slot_arc(n, s);
        t.tail[s] = static_cast<std::uint8_t>(a.tail);
        t.head[s] = static_cast<std::uint8_t>(a.head);
        t.row[a.tail] |= std::uint64_t{1} << s;
        t.col[a.head] |= std::uint64_t{1} << s;
    }
    for (int u = 0; u < n; ++u) t.cover[u] = t.row[u] | t.col[u];
    return t;
}

bool isolated_free(const SlotTables& t, std::uint64_t mask) {
    for (int u = 0; u < t.n; ++u)
        if ((mask & t.cover[u]) == 0) return false;
    return true;
}

double mask_value(const SlotTables& t, const std::vector<double>& weights,
                  std::uint64_t mask) {
    int out_deg[8];
    int in_deg[8];
    for (int u = 0; u < t.n; ++u) {
        out_deg[u] = std::popcount(mask & t.row[u]);
        in_deg[u] = std::popcount(mask & t.col[u]);
    }
    const int width = t.n - 1;
    double sum = 0.0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const int s = std::countr_zero(m);
        sum += weights[(out_deg[t.tail[s]] - 1) * width + (in_deg[t.head[s]] - 1)];
    }
    return 0.5 * sum;
}

struct WorkerResult {
    bool any = false;
    double best = 0.0;
    long long count = 0;
    std::vector<std::pair<std::uint64_t, double>> candidates;
};

/// Scans [lo, hi) keeping every mask whose value is within tol of the
/// block-local optimum; the final filter against the global optimum
/// happens at merge time, so the result is partition-independent.
WorkerResult scan_block(const SlotTables& t, const std::vector<double>& weights,
                        SearchDirection dir, double tol, std::uint64_t lo, std::uint64_t hi) {
    constexpr std::size_t kCompactAt = std::size_t{1} << 16;
    WorkerResult r;
    const bool minimize = dir == SearchDirection::Min;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (!isolated_free(t, mask)) continue;
        ++r.count;
        const double v = mask_value(t, weights, mask);
        const bool improves = !r.any || (minimize ? v < r.best : v > r.best);
        if (improves) r.best = v;
        r.any = true;
        if (std::abs(v - r.best) <= tol) r.candidates.emplace_back(mask, v);
        if (r.candidates.size() >= kCompactAt) {
            std::erase_if(r.candidates,
                          [&](const auto& c) { return std::abs(c.second - r.best) > tol; });
        }
    }
    return r;
}

std::vector<double> weight_table(int n, const PhiSpec& spec) {
    const int width = n - 1;
    std::vector<double> weights(static_cast<std::size_t>(width) * width);
    for (int i = 1; i <= width; ++i)
        for (int j = 1; j <= width; ++j) weights[(i - 1) * width + (j - 1)] = spec(i, j);
    return weights;
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::string search_direction_name(SearchDirection d) {
    return d == SearchDirection::Min ? "min" : "max";
}

long long nonisolated_count_closed_form(int n) {
    if (n < 2 || n > 8) throw DomainError("closed-form count supports 2 <= n <= 8");
    long long total = 0;
    for (int k = 0; k <= n; ++k) {
        const int m = n - k;
        const long long term = binomial(n, k) * (std::int64_t{1} << (m * (m - 1)));
        total += (k % 2 == 0) ? term : -term;
    }
    return total;
}

long long enumerate_nonisolated(int n, const std::function<void(std::uint64_t)>& fn) {
    require_order(n);
    const SlotTables t = make_slot_tables(n);
    const std::uint64_t end = std::uint64_t{1} << t.slots;
    long long count = 0;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        if (!isolated_free(t, mask)) continue;
        ++count;
        if (fn) fn(mask);
    }
    return count;
}

RawExtremal extremal_search_table(int n, const std::vector<double>& weights,
                                  SearchDirection direction, double tie_tolerance, int workers) {
    require_order(n);
    const int width = n - 1;
    if (weights.size() != static_cast<std::size_t>(width) * width)
        throw DomainError("weight table must be (n-1) x (n-1)");
    if (tie_tolerance < 0.0) throw DomainError("tie tolerance must be non-negative");

    const SlotTables t = make_slot_tables(n);
    const std::uint64_t end = std::uint64_t{1} << t.slots;
    const int w = std::max(1, workers);

    std::vector<WorkerResult> results(w);
    if (w == 1) {
        results[0] = scan_block(t, weights, direction, tie_tolerance, 0, end);
    } else {
        const std::uint64_t len = (end + w - 1) / w;
        std::vector<std::thread> threads;
        threads.reserve(w);
        for (int b = 0; b < w; ++b) {
            const std::uint64_t lo = std::min(end, len * b);
            const std::uint64_t hi = std::min(end, lo + len);
            threads.emplace_back([&, b, lo, hi] {
                results[b] = scan_block(t, weights, direction, tie_tolerance, lo, hi);
            });
        }
        for (auto& th : threads) th.join();
    }

    RawExtremal merged;
    bool any = false;
    for (const WorkerResult& r : results) {
        merged.enumerated_count += r.count;
        if (!r.any) continue;
        if (!any || (direction == SearchDirection::Min ? r.best < merged.value
                                                       : r.best > merged.value))
            merged.value = r.best;
        any = true;
    }
    if (!any) throw DomainError("no isolated-free digraph in range");
    // blocks are ascending and disjoint, so concatenation stays sorted
    for (const WorkerResult& r : results)
        for (const auto& [mask, v] : r.candidates)
            if (std::abs(v - merged.value) <= tie_tolerance) merged.attaining.push_back(mask);
    return merged;
}

ExtremalReport extremal_search(int n, const PhiSpec& spec, SearchDirection direction,
                               double tie_tolerance, int workers) {
    RawExtremal raw =
        extremal_search_table(n, weight_table(n, spec), direction, tie_tolerance, workers);
    ExtremalReport rep;
    rep.n = n;
    rep.spec = spec;
    rep.direction = direction;
    rep.extremal_value = raw.value;
    rep.attaining = std::move(raw.attaining);
    rep.enumerated_count = raw.enumerated_count;
    rep.tie_tolerance = tie_tolerance;
    return rep;
}

std::vector<std::uint64_t> condition_class_masks(int n, Condition c) {
    require_order(n);
    const SlotTables t = make_slot_tables(n);
    const std::uint64_t end = std::uint64_t{1} << t.slots;
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        if (!isolated_free(t, mask)) continue;
        int out_deg[8];
        int in_deg[8];
        for (int u = 0; u < t.n; ++u) {
            out_deg[u] = std::popcount(mask & t.row[u]);
            in_deg[u] = std::popcount(mask & t.col[u]);
        }
        bool diagonal_only = true;
        bool star_pair_only = true;
        for (std::uint64_t m = mask; m != 0; m &= m - 1) {
            const int s = std::countr_zero(m);
            const int i = out_deg[t.tail[s]];
            const int j = in_deg[t.head[s]];
            if (i != j) diagonal_only = false;
            if (!((i == 1 && j == n - 1) || (i == n - 1 && j == 1))) star_pair_only = false;
        }
        int zero_roles = 0;
        for (int u = 0; u < t.n; ++u) zero_roles += (out_deg[u] == 0) + (in_deg[u] == 0);

        bool keep = false;
        switch (c) {
            case Condition::Cond5: keep = star_pair_only && zero_roles == 0; break;
            case Condition::Cond6: keep = diagonal_only && zero_roles == n; break;
            case Condition::Cond7: keep = diagonal_only && zero_roles == 0; break;
        }
        if (keep) out.push_back(mask);
    }
    return out;
}

std::vector<std::uint64_t> equality_class_masks(int n, EqualityClass c) {
    if (!equality_class_realizable(c, n)) return {};
    switch (c) {
        case EqualityClass::StarOrientations: return star_orientation_masks(n);
        case EqualityClass::Cond5: return condition_class_masks(n, Condition::Cond5);
        case EqualityClass::Cond6: return condition_class_masks(n, Condition::Cond6);
        case EqualityClass::Cond7: return condition_class_masks(n, Condition::Cond7);
        case EqualityClass::SingleArc:
            return {std::uint64_t{1} << arc_slot(2, Arc{0, 1}),
                    std::uint64_t{1} << arc_slot(2, Arc{1, 0})};
        case EqualityClass::SymComplete:
            return {(std::uint64_t{1} << slot_count(n)) - 1};
        case EqualityClass::NoneStated: return {};
    }
    return {};
}

VerificationOutcome verify_bound(int n, const BoundStatement& st, int workers) {
    if (st.n != n) throw DomainError("statement was instantiated at a different n");
    require_order(n);

    constexpr double kTol = 1e-9;
    const SearchDirection dir = st.direction == BoundDirection::Lower ? SearchDirection::Min
                                                                      : SearchDirection::Max;
    VerificationOutcome out;
    out.statement = st;
    const ExtremalReport rep = extremal_search(n, st.spec, dir, kTol, workers);
    out.observed_extremal = rep.extremal_value;
    out.bound_respected = st.direction == BoundDirection::Lower
                              ? rep.extremal_value >= st.bound_value - kTol
                              : rep.extremal_value <= st.bound_value + kTol;
    out.tight = std::abs(rep.extremal_value - st.bound_value) < kTol;

    const bool claimed = equality_class_realizable(st.equality_class, n);
    if (!claimed) {
        // nothing of the class exists at this n; the bound may only be
        // attained if something is inconsistent
        out.equality_set_matches = !out.tight;
        if (out.tight) out.counterexamples = rep.attaining;
        return out;
    }
    if (!out.tight) {
        // the class exists, so its members should sit exactly on the bound
        out.equality_set_matches = false;
        out.counterexamples = equality_class_masks(n, st.equality_class);
        return out;
    }
    const std::vector<std::uint64_t> expected = equality_class_masks(n, st.equality_class);
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(rep.attaining.begin(), rep.attaining.end(), expected.begin(),
                                  expected.end(), std::back_inserter(diff));
    out.equality_set_matches = diff.empty();
    out.counterexamples = std::move(diff);
    return out;
}

}  // namespace vdb
