#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "vdb/digraph.hpp"

namespace vdb {

/// Arc-type and degree-role counts of a digraph without isolated vertices.
///
/// All maps are sparse: an absent key means count zero. Keys of `a` are
/// ordered pairs (i, j) with 1 <= i, j <= n-1; keys of `p` satisfy i <= j.
struct DegreeSpectrum {
    int n = 0;
    long long arc_count = 0;

    /// a[(i,j)]: arcs whose tail has out-degree i and head has in-degree j.
    std::map<std::pair<int, int>, long long> a;

    /// p[(i,j)] for i < j is a(i,j) + a(j,i); p[(i,i)] is a(i,i).
    std::map<std::pair<int, int>, long long> p;

    /// n_class[i]: number of vertices of out-degree i plus number of
    /// vertices of in-degree i (a vertex with both roles equal to i
    /// counts twice). n_class[0] counts the zero-degree roles.
    std::map<int, long long> n_class;

    long long a_at(int i, int j) const;
    /// Symmetric lookup: p_at(i, j) == p_at(j, i).
    long long p_at(int i, int j) const;
    long long n_at(int i) const;
    long long zero_roles() const { return n_at(0); }
};

/// Throws DomainError when d has an isolated vertex (every 1-vertex
/// digraph is rejected this way).
DegreeSpectrum degree_spectrum(const Digraph& d);

/// The three extremal arc-type regimes:
///   cond5 - every arc type is (1, n-1) or (n-1, 1) and no degree role is 0;
///   cond6 - only diagonal (i, i) arc types and every vertex has one zero role;
///   cond7 - only diagonal (i, i) arc types and no degree role is 0.
enum class Condition { Cond5, Cond6, Cond7 };

std::string condition_name(Condition c);

std::set<Condition> classify_condition(const DegreeSpectrum& s);
/// Convenience overload; throws DomainError on isolated vertices.
std::set<Condition> classify_condition(const Digraph& d);

}  // namespace vdb
