#include "vdb/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace vdb {

namespace {

constexpr double kStrictMargin = 1e-12;
constexpr double kDiagonalRelTol = 1e-9;

bool strict_side_ok(BoundDirection dir, double phi, double threshold) {
    // lower-bound variants need phi strictly above the threshold,
    // upper-bound variants strictly below
    return dir == BoundDirection::Lower ? phi - threshold > kStrictMargin
                                        : threshold - phi > kStrictMargin;
}

bool diagonal_identity_holds(int n, const PhiSpec& spec) {
    const double rhs = (n - 1) * spec(n - 1, n - 1);
    for (int i = 1; i <= n - 2; ++i) {
        const double lhs = i * spec(i, i);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > kDiagonalRelTol * scale) return false;
    }
    return true;
}

std::string alpha_note(const PhiSpec& spec) {
    return spec.has_alpha() ? " at alpha=" + spec.name() : "";
}

/// Appends the empirically scanned validity threshold when it exceeds the
/// smallest meaningful size (or is absent altogether).
std::string with_scan_note(std::string applicability, TheoremVariant gate, const PhiSpec& spec) {
    const std::optional<int> m = minimal_n(gate, spec, 100);
    if (m && *m <= 3) return applicability;
    if (m)
        return applicability + "; hypothesis scan: holds for n >= " + std::to_string(*m) +
               " (scanned to 100)";
    return applicability + "; hypothesis scan: holds for no n <= 100";
}

}  // namespace

std::string theorem_name(TheoremVariant t) {
    switch (t) {
        case TheoremVariant::T1i: return "T1i";
        case TheoremVariant::T1ii: return "T1ii";
        case TheoremVariant::T2i: return "T2i";
        case TheoremVariant::T2ii: return "T2ii";
        case TheoremVariant::T3i: return "T3i";
        case TheoremVariant::T3ii: return "T3ii";
    }
    return "?";
}

std::optional<TheoremVariant> theorem_from_name(std::string_view name) {
    if (name.starts_with("T") || name.starts_with("t")) name.remove_prefix(1);
    if (name == "1i") return TheoremVariant::T1i;
    if (name == "1ii") return TheoremVariant::T1ii;
    if (name == "2i") return TheoremVariant::T2i;
    if (name == "2ii") return TheoremVariant::T2ii;
    if (name == "3i") return TheoremVariant::T3i;
    if (name == "3ii") return TheoremVariant::T3ii;
    return std::nullopt;
}

BoundDirection theorem_direction(TheoremVariant t) {
    switch (t) {
        case TheoremVariant::T1i:
        case TheoremVariant::T2i:
        case TheoremVariant::T3i: return BoundDirection::Lower;
        default: return BoundDirection::Upper;
    }
}

double star_pair_threshold(int i, int j, int n, const PhiSpec& spec) {
    // (n-1)/n * (1/i + 1/j) as the single ratio (n-1)(i+j) / (n i j); at
    // (1, n-1) numerator and denominator coincide, making the threshold
    // exactly phi(1, n-1).
    const double coeff = static_cast<double>((n - 1) * (i + j)) / (static_cast<double>(n) * i * j);
    return coeff * spec(1, n - 1);
}

double clique_pair_threshold(int i, int j, int n, const PhiSpec& spec) {
    const double coeff = static_cast<double>((n - 1) * (i + j)) / (2.0 * i * j);
    return coeff * spec(n - 1, n - 1);
}

HypothesisReport check_hypothesis(TheoremVariant t, int n, const PhiSpec& spec) {
    if (n < 2) throw DomainError("hypothesis grids need n >= 2");

    HypothesisReport rep{t, n, spec, true, {}, std::nullopt};
    const BoundDirection dir = theorem_direction(t);
    const bool star_anchor = t == TheoremVariant::T1i || t == TheoremVariant::T1ii;
    const bool diagonal_split = t == TheoremVariant::T3i || t == TheoremVariant::T3ii;

    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n - 1; ++j) {
            if (star_anchor && i == 1 && j == n - 1) continue;
            if (!star_anchor && i == n - 1 && j == n - 1) continue;
            if (diagonal_split && i == j) continue;
            const double threshold = star_anchor ? star_pair_threshold(i, j, n, spec)
                                                 : clique_pair_threshold(i, j, n, spec);
            const double phi = spec(i, j);
            if (!strict_side_ok(dir, phi, threshold))
                rep.violations.push_back({i, j, phi, threshold});
        }
    }
    if (diagonal_split) rep.diagonal_ok = diagonal_identity_holds(n, spec);
    rep.holds = rep.violations.empty() && rep.diagonal_ok.value_or(true);
    return rep;
}

double bound_value(TheoremVariant t, int n, const PhiSpec& spec) {
    if (n < 2) throw DomainError("bounds need n >= 2");
    switch (t) {
        case TheoremVariant::T1i: return 0.5 * (n - 1) * spec(1, n - 1);
        case TheoremVariant::T1ii: return static_cast<double>(n - 1) * spec(1, n - 1);
        case TheoremVariant::T2i:
        case TheoremVariant::T3i: return 0.25 * n * (n - 1) * spec(n - 1, n - 1);
        case TheoremVariant::T2ii:
        case TheoremVariant::T3ii: return 0.5 * n * (n - 1) * spec(n - 1, n - 1);
    }
    throw DomainError("unknown theorem variant");
}

std::string equality_class_name(EqualityClass c) {
    switch (c) {
        case EqualityClass::StarOrientations: return "star-orientations";
        case EqualityClass::Cond5: return "cond5";
        case EqualityClass::Cond6: return "cond6";
        case EqualityClass::Cond7: return "cond7";
        case EqualityClass::SingleArc: return "single-arc";
        case EqualityClass::SymComplete: return "sym-complete";
        case EqualityClass::NoneStated: return "none-stated";
    }
    return "?";
}

bool equality_class_realizable(EqualityClass c, int n) {
    switch (c) {
        case EqualityClass::SingleArc: return n == 2;
        // cond6 forces each component to pair equally many pure sources
        // and pure sinks, so an odd order admits no such digraph
        case EqualityClass::Cond6: return n % 2 == 0;
        case EqualityClass::NoneStated: return false;
        default: return n >= 2;
    }
}

std::vector<BoundStatement> corollary_catalog(int n, const PhiSpec& spec) {
    if (n < 2) throw DomainError("the catalog needs n >= 2");

    std::vector<BoundStatement> out;
    auto add = [&](std::string id, TheoremVariant gate, EqualityClass cls,
                   std::string applicability) {
        out.push_back(BoundStatement{std::move(id), theorem_direction(gate), spec, n,
                                     bound_value(gate, n, spec), std::move(applicability), cls,
                                     gate});
    };

    switch (spec.family()) {
        case PhiFamily::GeneralRandic: {
            const double a = spec.alpha();
            if (a > -0.5)
                add("COR4a", TheoremVariant::T2ii, EqualityClass::SymComplete,
                    "alpha in (-1/2, inf)");
            if (a == -0.5) {
                add("COR4b", TheoremVariant::T3ii, EqualityClass::Cond7, "alpha = -1/2");
                if (n >= 3)
                    add("COR6a", TheoremVariant::T1i, EqualityClass::StarOrientations, "n >= 3");
            }
            if (a <= -1.0)
                add("COR5", TheoremVariant::T2i, EqualityClass::SingleArc, "alpha <= -1");
            if (a > -0.5 && a < 0.0)
                add("COR6b", TheoremVariant::T1i, EqualityClass::StarOrientations,
                    with_scan_note("alpha in (-1/2, 0)" + alpha_note(spec), TheoremVariant::T1i,
                                   spec));
            break;
        }
        case PhiFamily::GeneralSumConnectivity: {
            const double a = spec.alpha();
            if (a > -0.5)
                add("COR7a", TheoremVariant::T2ii, EqualityClass::SymComplete,
                    "alpha in (-1/2, inf)");
            if (a == -1.0) add("COR7b", TheoremVariant::T3ii, EqualityClass::Cond7, "alpha = -1");
            if (a >= -1.0 && a <= -0.5)
                add("COR8", TheoremVariant::T1i, EqualityClass::StarOrientations,
                    with_scan_note("alpha in [-1, -1/2], n >= 6", TheoremVariant::T1i, spec));
            else if (a > -0.5 && a < 0.0)
                add("COR8", TheoremVariant::T1i, EqualityClass::StarOrientations,
                    with_scan_note("alpha in (-1/2, 0)" + alpha_note(spec), TheoremVariant::T1i,
                                   spec));
            break;
        }
        case PhiFamily::GeometricArithmetic:
            add("COR9max", TheoremVariant::T2ii, EqualityClass::SymComplete, "any n");
            add("COR9min", TheoremVariant::T1i, EqualityClass::StarOrientations,
                with_scan_note("any n", TheoremVariant::T1i, spec));
            break;
        case PhiFamily::AtomBondConnectivity:
            add("COR10", TheoremVariant::T2ii, EqualityClass::SymComplete, "any n");
            break;
        case PhiFamily::Harmonic:
            add("COR11max", TheoremVariant::T3ii, EqualityClass::Cond7, "any n");
            add("COR11min", TheoremVariant::T1i, EqualityClass::StarOrientations,
                with_scan_note("any n", TheoremVariant::T1i, spec));
            break;
    }
    return out;
}

std::optional<int> minimal_n(TheoremVariant t, const PhiSpec& spec, int n_max) {
    if (n_max < 3) return std::nullopt;
    int candidate = -1;
    for (int n = 3; n <= n_max; ++n) {
        if (check_hypothesis(t, n, spec).holds) {
            if (candidate < 0) candidate = n;
        } else {
            candidate = -1;
        }
    }
    if (candidate < 0) return std::nullopt;
    return candidate;
}

}  // namespace vdb
