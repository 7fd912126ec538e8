#include "vdb/digraph.hpp"

#include <algorithm>
#include <string>

namespace vdb {

namespace {

std::string arc_text(Arc a) {
    return "(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")";
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 1) throw DomainError("vertex count must be positive");
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw DomainError("arc endpoint out of range: " + arc_text(a) + " with n=" +
                              std::to_string(n_));
        if (a.tail == a.head) throw DomainError("loop arc " + arc_text(a));
    }
    std::sort(arcs_.begin(), arcs_.end());
    auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
    if (dup != arcs_.end()) throw DomainError("duplicate arc " + arc_text(*dup));

    out_deg_.assign(n_, 0);
    in_deg_.assign(n_, 0);
    for (const Arc& a : arcs_) {
        ++out_deg_[a.tail];
        ++in_deg_[a.head];
    }
}

Digraph Digraph::from_bitmask(int n, std::uint64_t mask) {
    if (n < 1 || n > 8) throw DomainError("bitmask form requires 1 <= n <= 8");
    const int slots = slot_count(n);
    if (slots < 64 && (mask >> slots) != 0)
        throw DomainError("bitmask has bits beyond the last slot");
    std::vector<Arc> arcs;
    for (int s = 0; s < slots; ++s)
        if ((mask >> s) & 1u) arcs.push_back(slot_arc(n, s));
    return Digraph(n, std::move(arcs));
}

int Digraph::out_degree(int u) const {
    if (u < 0 || u >= n_) throw DomainError("vertex id out of range");
    return out_deg_[u];
}

int Digraph::in_degree(int u) const {
    if (u < 0 || u >= n_) throw DomainError("vertex id out of range");
    return in_deg_[u];
}

bool Digraph::has_isolated_vertex() const noexcept {
    for (int u = 0; u < n_; ++u)
        if (out_deg_[u] == 0 && in_deg_[u] == 0) return true;
    return false;
}

std::uint64_t Digraph::to_bitmask() const {
    if (n_ > 8) throw DomainError("bitmask form requires n <= 8");
    std::uint64_t mask = 0;
    for (const Arc& a : arcs_) mask |= std::uint64_t{1} << arc_slot(n_, a);
    return mask;
}

int slot_count(int n) { return n * (n - 1); }

int arc_slot(int n, Arc a) {
    return a.tail * (n - 1) + (a.head > a.tail ? a.head - 1 : a.head);
}

Arc slot_arc(int n, int slot) {
    const int u = slot / (n - 1);
    const int r = slot % (n - 1);
    return Arc{u, r >= u ? r + 1 : r};
}

Digraph symmetrize(const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw DomainError("loop edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw DomainError("duplicate edge in edge set");

    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (const auto& [u, v] : normalized) {
        arcs.push_back(Arc{u, v});
        arcs.push_back(Arc{v, u});
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace vdb
