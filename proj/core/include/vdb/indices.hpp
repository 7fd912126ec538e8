#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vdb/digraph.hpp"
#include "vdb/phi.hpp"
#include "vdb/spectrum.hpp"

namespace vdb {

/// The digraph index I(D): half the sum over all arcs of
/// phi(out-degree of tail, in-degree of head). Throws DomainError when
/// the digraph has an isolated vertex.
double index_arc_sum(const Digraph& d, const PhiSpec& spec);

/// The same value computed from the pair counts:
/// (1/2) * sum over i <= j of p(i, j) * phi(i, j).
double index_spectrum_sum(const DegreeSpectrum& s, const PhiSpec& spec);

/// Classical graph index: the sum of phi(deg u, deg v) over edges of a
/// simple graph without isolated vertices. Equals
/// index_arc_sum(symmetrize(edges, n), spec).
double graph_index(const std::vector<std::pair<int, int>>& edges, int n, const PhiSpec& spec);

/// For integer-valued phi (zagreb1, zagreb2): 2 * I(D) in exact integer
/// arithmetic. Empty for the other families.
std::optional<long long> doubled_index_exact(const Digraph& d, const PhiSpec& spec);

/// For integer-valued phi: the classical graph index as an exact integer.
std::optional<long long> graph_index_exact(const std::vector<std::pair<int, int>>& edges,
                                           int n, const PhiSpec& spec);

/// Residuals of the two exact rewritings of 2*I(D) used as runtime
/// cross-checks; both are zero up to rounding for every digraph without
/// isolated vertices.
///
/// star_anchored_residual expands 2*I(D) around the (1, n-1) arc weight:
///   2I = [2(n-1) - (n-1)/n * n0] * phi(1,n-1)
///        + sum over pairs (i,j) != (1,n-1), i <= j, of
///          [phi(i,j) - (n-1)/n * (1/i + 1/j) * phi(1,n-1)] * p(i,j).
double star_anchored_residual(const Digraph& d, const PhiSpec& spec);

/// clique_anchored_residual expands 2*I(D) around the (n-1, n-1) weight:
///   2I = (1/2)(2n - n0)(n-1) * phi(n-1,n-1)
///        + sum over pairs (i,j) != (n-1,n-1), i <= j, of
///          [phi(i,j) - (n-1)/2 * (1/i + 1/j) * phi(n-1,n-1)] * p(i,j).
double clique_anchored_residual(const Digraph& d, const PhiSpec& spec);

/// Same anchor as clique_anchored_residual with the diagonal terms split
/// out as [phi(i,i) - (n-1)/i * phi(n-1,n-1)] * p(i,i) for i < n-1.
double clique_anchored_split_residual(const Digraph& d, const PhiSpec& spec);

}  // namespace vdb
