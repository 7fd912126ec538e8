#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vdb/digraph.hpp"
#include "vdb/phi.hpp"
#include "vdb/spectrum.hpp"
#include "vdb/theorems.hpp"

namespace vdb {

enum class SearchDirection { Min, Max };

std::string search_direction_name(SearchDirection d);

/// Number of labeled digraphs on n vertices without isolated vertices:
/// sum over k of (-1)^k C(n,k) 2^((n-k)(n-k-1)). Valid for 2 <= n <= 8.
long long nonisolated_count_closed_form(int n);

/// Streams every isolated-free arc-set bitmask on n vertices in ascending
/// order and returns how many were visited. Slot order as in arc_slot.
/// Requires 2 <= n <= 6.
long long enumerate_nonisolated(int n, const std::function<void(std::uint64_t)>& fn);

/// Result of an exhaustive extremal search over all isolated-free labeled
/// digraphs on n vertices.
struct ExtremalReport {
    int n = 0;
    PhiSpec spec = PhiSpec::harmonic();
    SearchDirection direction = SearchDirection::Min;
    double extremal_value = 0.0;
    std::vector<std::uint64_t> attaining;  // bitmask encodings, ascending
    long long enumerated_count = 0;
    double tie_tolerance = 0.0;
};

/// Exhaustive min/max of the index over all isolated-free digraphs on n
/// vertices, with the full attaining set (every digraph within
/// tie_tolerance of the extremum). Deterministic: the report is identical
/// for every worker count. Requires 2 <= n <= 6.
ExtremalReport extremal_search(int n, const PhiSpec& spec, SearchDirection direction,
                               double tie_tolerance = 1e-9, int workers = 1);

/// Table-driven core of extremal_search: weights[(i-1)*(n-1) + (j-1)]
/// holds the arc weight for an (i, j)-arc. The table must be symmetric.
struct RawExtremal {
    double value = 0.0;
    std::vector<std::uint64_t> attaining;
    long long enumerated_count = 0;
};

RawExtremal extremal_search_table(int n, const std::vector<double>& weights,
                                  SearchDirection direction, double tie_tolerance = 1e-9,
                                  int workers = 1);

/// Bitmasks of every isolated-free digraph on n vertices satisfying the
/// condition, ascending. Requires 2 <= n <= 6.
std::vector<std::uint64_t> condition_class_masks(int n, Condition c);

/// Expected attaining set of an equality class; empty when the class is
/// not realizable at n.
std::vector<std::uint64_t> equality_class_masks(int n, EqualityClass c);

/// Outcome of checking one bound statement against the exhaustive search.
struct VerificationOutcome {
    BoundStatement statement;
    double observed_extremal = 0.0;
    bool bound_respected = false;
    bool tight = false;
    bool equality_set_matches = false;
    std::vector<std::uint64_t> counterexamples;  // empty when consistent
};

/// Runs the exhaustive search in the statement's direction and checks the
/// bound, its tightness, and (when the equality class is realizable at n)
/// that the attaining set equals the class exactly. Counterexamples list
/// the symmetric difference. Requires st.n == n and 2 <= n <= 6.
VerificationOutcome verify_bound(int n, const BoundStatement& st, int workers = 1);

}  // namespace vdb
