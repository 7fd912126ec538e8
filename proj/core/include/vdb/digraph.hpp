#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "vdb/errors.hpp"

namespace vdb {

struct Arc {
    int tail = 0;
    int head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Loop-free strict digraph on vertices 0..n-1.
///
/// Immutable after construction. Arcs are stored sorted row-major by
/// (tail, head), the same canonical order used by the dense bitmask
/// encoding, so the two representations round-trip exactly.
class Digraph {
public:
    /// Validates and canonicalizes the arc set. Throws DomainError on
    /// loops, duplicates, out-of-range endpoints, or n < 1.
    Digraph(int n, std::vector<Arc> arcs);

    /// Decodes a dense ordered-pair bitmask: bit k set means the k-th
    /// non-diagonal slot (row-major, diagonal skipped) is an arc. n <= 8.
    static Digraph from_bitmask(int n, std::uint64_t mask);

    int vertex_count() const noexcept { return n_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }

    /// Number of arcs with tail u (resp. head u). u must be < n.
    int out_degree(int u) const;
    int in_degree(int u) const;

    /// True iff some vertex has out-degree and in-degree both zero.
    bool has_isolated_vertex() const noexcept;

    /// Inverse of from_bitmask. n <= 8.
    std::uint64_t to_bitmask() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<int> out_deg_;
    std::vector<int> in_deg_;
};

/// Bitmask slot order shared by Digraph, the enumeration oracle and all
/// report encodings: slots enumerate ordered pairs (u, v), u != v,
/// row-major with the diagonal skipped.
int slot_count(int n);
int arc_slot(int n, Arc a);
Arc slot_arc(int n, int slot);

/// Replaces every undirected edge {u, v} with the pair of opposite arcs.
/// The edge set must be simple and loop-free.
Digraph symmetrize(const std::vector<std::pair<int, int>>& edges, int n);

}  // namespace vdb
