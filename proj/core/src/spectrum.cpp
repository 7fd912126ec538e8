#include "vdb/spectrum.hpp"

#include <algorithm>

namespace vdb {

long long DegreeSpectrum::a_at(int i, int j) const {
    auto it = a.find({i, j});
    return it == a.end() ? 0 : it->second;
}

long long DegreeSpectrum::p_at(int i, int j) const {
    auto it = p.find({std::min(i, j), std::max(i, j)});
    return it == p.end() ? 0 : it->second;
}

long long DegreeSpectrum::n_at(int i) const {
    auto it = n_class.find(i);
    return it == n_class.end() ? 0 : it->second;
}

DegreeSpectrum degree_spectrum(const Digraph& d) {
    if (d.has_isolated_vertex()) throw DomainError("digraph has an isolated vertex");

    DegreeSpectrum s;
    s.n = d.vertex_count();
    s.arc_count = d.arc_count();
    for (const Arc& a : d.arcs()) ++s.a[{d.out_degree(a.tail), d.in_degree(a.head)}];
    for (const auto& [type, count] : s.a) {
        const auto [i, j] = type;
        s.p[{std::min(i, j), std::max(i, j)}] += count;
    }
    for (int u = 0; u < s.n; ++u) {
        ++s.n_class[d.out_degree(u)];
        ++s.n_class[d.in_degree(u)];
    }
    return s;
}

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::Cond5: return "cond5";
        case Condition::Cond6: return "cond6";
        case Condition::Cond7: return "cond7";
    }
    return "?";
}

std::set<Condition> classify_condition(const DegreeSpectrum& s) {
    bool off_diagonal_zero = true;
    bool star_pair_only = true;
    for (const auto& [pair, count] : s.p) {
        if (count == 0) continue;
        if (pair.first != pair.second) off_diagonal_zero = false;
        if (pair != std::pair{1, s.n - 1}) star_pair_only = false;
    }
    const long long n0 = s.zero_roles();

    std::set<Condition> out;
    if (star_pair_only && n0 == 0) out.insert(Condition::Cond5);
    if (off_diagonal_zero && n0 == s.n) out.insert(Condition::Cond6);
    if (off_diagonal_zero && n0 == 0) out.insert(Condition::Cond7);
    return out;
}

std::set<Condition> classify_condition(const Digraph& d) {
    return classify_condition(degree_spectrum(d));
}

}  // namespace vdb
