#include "vdb/indices.hpp"

#include <cmath>

namespace vdb {

namespace {

std::vector<int> edge_degrees(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n < 1) throw DomainError("vertex count must be positive");
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        if (u == v) throw DomainError("loop edge");
        if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("edge endpoint out of range");
        ++deg[u];
        ++deg[v];
    }
    for (int u = 0; u < n; ++u)
        if (deg[u] == 0) throw DomainError("graph has an isolated vertex");
    return deg;
}

}  // namespace

double index_arc_sum(const Digraph& d, const PhiSpec& spec) {
    if (d.has_isolated_vertex()) throw DomainError("digraph has an isolated vertex");
    double sum = 0.0;
    for (const Arc& a : d.arcs()) sum += spec(d.out_degree(a.tail), d.in_degree(a.head));
    return 0.5 * sum;
}

double index_spectrum_sum(const DegreeSpectrum& s, const PhiSpec& spec) {
    double sum = 0.0;
    for (const auto& [pair, count] : s.p)
        sum += static_cast<double>(count) * spec(pair.first, pair.second);
    return 0.5 * sum;
}

double graph_index(const std::vector<std::pair<int, int>>& edges, int n, const PhiSpec& spec) {
    const std::vector<int> deg = edge_degrees(edges, n);
    double sum = 0.0;
    for (const auto& [u, v] : edges) sum += spec(deg[u], deg[v]);
    return sum;
}

std::optional<long long> doubled_index_exact(const Digraph& d, const PhiSpec& spec) {
    if (!spec.integer_valued()) return std::nullopt;
    if (d.has_isolated_vertex()) throw DomainError("digraph has an isolated vertex");
    const bool product = spec.family() == PhiFamily::GeneralRandic;
    long long sum = 0;
    for (const Arc& a : d.arcs()) {
        const long long i = d.out_degree(a.tail);
        const long long j = d.in_degree(a.head);
        sum += product ? i * j : i + j;
    }
    return sum;
}

std::optional<long long> graph_index_exact(const std::vector<std::pair<int, int>>& edges, int n,
                                           const PhiSpec& spec) {
    if (!spec.integer_valued()) return std::nullopt;
    const std::vector<int> deg = edge_degrees(edges, n);
    const bool product = spec.family() == PhiFamily::GeneralRandic;
    long long sum = 0;
    for (const auto& [u, v] : edges) {
        const long long i = deg[u];
        const long long j = deg[v];
        sum += product ? i * j : i + j;
    }
    return sum;
}

double star_anchored_residual(const Digraph& d, const PhiSpec& spec) {
    const DegreeSpectrum s = degree_spectrum(d);
    const int n = s.n;
    const double anchor = spec(1, n - 1);
    double rhs = (2.0 * (n - 1) - static_cast<double>(n - 1) / n * s.zero_roles()) * anchor;
    for (const auto& [pair, count] : s.p) {
        const auto [i, j] = pair;
        if (i == 1 && j == n - 1) continue;
        const double coeff =
            static_cast<double>((n - 1) * (i + j)) / (static_cast<double>(n) * i * j);
        rhs += (spec(i, j) - coeff * anchor) * static_cast<double>(count);
    }
    return std::abs(2.0 * index_arc_sum(d, spec) - rhs);
}

double clique_anchored_residual(const Digraph& d, const PhiSpec& spec) {
    const DegreeSpectrum s = degree_spectrum(d);
    const int n = s.n;
    const double anchor = spec(n - 1, n - 1);
    double rhs = 0.5 * (2.0 * n - s.zero_roles()) * (n - 1) * anchor;
    for (const auto& [pair, count] : s.p) {
        const auto [i, j] = pair;
        if (i == n - 1 && j == n - 1) continue;
        const double coeff = static_cast<double>((n - 1) * (i + j)) / (2.0 * i * j);
        rhs += (spec(i, j) - coeff * anchor) * static_cast<double>(count);
    }
    return std::abs(2.0 * index_arc_sum(d, spec) - rhs);
}

double clique_anchored_split_residual(const Digraph& d, const PhiSpec& spec) {
    const DegreeSpectrum s = degree_spectrum(d);
    const int n = s.n;
    const double anchor = spec(n - 1, n - 1);
    double rhs = 0.5 * (2.0 * n - s.zero_roles()) * (n - 1) * anchor;
    for (const auto& [pair, count] : s.p) {
        const auto [i, j] = pair;
        if (i == n - 1 && j == n - 1) continue;
        double term;
        if (i == j) {
            term = spec(i, i) - static_cast<double>(n - 1) / i * anchor;
        } else {
            term = spec(i, j) - static_cast<double>((n - 1) * (i + j)) / (2.0 * i * j) * anchor;
        }
        rhs += term * static_cast<double>(count);
    }
    return std::abs(2.0 * index_arc_sum(d, spec) - rhs);
}

}  // namespace vdb
