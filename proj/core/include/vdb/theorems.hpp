#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vdb/phi.hpp"

namespace vdb {

/// The six extremal-theorem variants. The "i" variants are lower bounds,
/// the "ii" variants upper bounds.
///
///   T1*: compares phi(i,j) against the star-pair threshold over the grid
///        S1 = {1 <= i <= j <= n-1} minus (1, n-1);
///   T2*: compares against the clique-pair threshold over
///        S2 = {1 <= i <= j <= n-1} minus (n-1, n-1);
///   T3*: the same comparison restricted to off-diagonal pairs, plus the
///        diagonal identity i * phi(i,i) = (n-1) * phi(n-1,n-1).
enum class TheoremVariant { T1i, T1ii, T2i, T2ii, T3i, T3ii };

enum class BoundDirection { Lower, Upper };

std::string theorem_name(TheoremVariant t);
/// Accepts "T1i" or the bare "1i" spelling.
std::optional<TheoremVariant> theorem_from_name(std::string_view name);
BoundDirection theorem_direction(TheoremVariant t);

/// Star-pair threshold (n-1)/n * (1/i + 1/j) * phi(1, n-1).
/// The coefficient is evaluated as one integer ratio, so the excluded
/// pair (1, n-1) sits exactly at its threshold.
double star_pair_threshold(int i, int j, int n, const PhiSpec& spec);

/// Clique-pair threshold (n-1)/2 * (1/i + 1/j) * phi(n-1, n-1); likewise
/// exact at (n-1, n-1).
double clique_pair_threshold(int i, int j, int n, const PhiSpec& spec);

struct HypothesisViolation {
    int i = 0;
    int j = 0;
    double phi = 0.0;
    double threshold = 0.0;
};

struct HypothesisReport {
    TheoremVariant theorem;
    int n = 0;
    PhiSpec spec;
    bool holds = false;
    std::vector<HypothesisViolation> violations;  // sorted by (i, j)
    std::optional<bool> diagonal_ok;              // T3 variants only
};

/// Scans the theorem's full integer grid at the given n. Strict
/// comparisons pass when the margin exceeds 1e-12; the T3 diagonal
/// identity is checked to relative 1e-9. n = 2 yields empty grids and a
/// vacuous pass.
HypothesisReport check_hypothesis(TheoremVariant t, int n, const PhiSpec& spec);

/// The theorem's bound at (n, spec):
///   T1i: (n-1)/2 * phi(1,n-1)      T1ii: (n-1) * phi(1,n-1)
///   T2i, T3i: n(n-1)/4 * phi(n-1,n-1)
///   T2ii, T3ii: n(n-1)/2 * phi(n-1,n-1)
double bound_value(TheoremVariant t, int n, const PhiSpec& spec);

/// Equality characterizations attached to bound statements.
enum class EqualityClass {
    StarOrientations,  // the 2n labeled one-direction stars
    Cond5,
    Cond6,
    Cond7,
    SingleArc,  // the two labeled one-arc digraphs (n = 2)
    SymComplete,
    NoneStated,
};

std::string equality_class_name(EqualityClass c);

/// Whether any digraph of the class exists on n vertices (single-arc
/// needs n = 2, cond6 needs even n).
bool equality_class_realizable(EqualityClass c, int n);

/// One catalog entry: a closed-form bound with its applicability note,
/// equality characterization and the hypothesis that gates it.
struct BoundStatement {
    std::string id;  // "COR4a", "COR9min", ...
    BoundDirection direction = BoundDirection::Lower;
    PhiSpec spec = PhiSpec::harmonic();
    int n = 0;
    double bound_value = 0.0;
    std::string applicability;
    EqualityClass equality_class = EqualityClass::NoneStated;
    TheoremVariant gating_theorem = TheoremVariant::T1i;
};

/// Every cataloged bound whose exponent range covers the given spec,
/// instantiated at n. Bounds whose validity threshold had to be found
/// empirically carry the scanned minimal n in their applicability note.
/// Requires n >= 2.
std::vector<BoundStatement> corollary_catalog(int n, const PhiSpec& spec);

/// Smallest n in [3, n_max] from which check_hypothesis holds at every
/// scanned size up to n_max; empty when no such threshold exists. The
/// vacuous n = 2 pass is excluded from the scan.
std::optional<int> minimal_n(TheoremVariant t, const PhiSpec& spec, int n_max);

}  // namespace vdb
