#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vdb/errors.hpp"

namespace vdb {

enum class PhiFamily {
    GeneralRandic,           // (i*j)^alpha
    GeneralSumConnectivity,  // (i+j)^alpha
    GeometricArithmetic,     // 2*sqrt(i*j) / (i+j)
    AtomBondConnectivity,    // sqrt((i+j-2) / (i*j))
    Harmonic,                // 2 / (i+j)
};

/// A symmetric, non-negative arc-weight function phi(i, j) on positive
/// degree pairs. Immutable value type; safe to share across threads.
class PhiSpec {
public:
    static PhiSpec general_randic(double alpha);
    static PhiSpec general_sum_connectivity(double alpha);
    static PhiSpec geometric_arithmetic();
    static PhiSpec atom_bond_connectivity();
    static PhiSpec harmonic();

    // Named special cases of the two parametric families.
    static PhiSpec randic() { return general_randic(-0.5); }
    static PhiSpec second_zagreb() { return general_randic(1.0); }
    static PhiSpec modified_second_zagreb() { return general_randic(-1.0); }
    static PhiSpec sum_connectivity() { return general_sum_connectivity(-0.5); }
    static PhiSpec first_zagreb() { return general_sum_connectivity(1.0); }

    /// Accepts the command-line spellings: harmonic, ga, abc, randic,
    /// randic:ALPHA, sumconn, sumconn:ALPHA, zagreb1, zagreb2, mzagreb2.
    /// Throws DomainError on unknown names or malformed exponents.
    static PhiSpec parse(std::string_view name);

    PhiFamily family() const noexcept { return family_; }
    bool has_alpha() const noexcept;
    /// Exponent of the general families; throws DomainError otherwise.
    double alpha() const;

    /// Canonical command-line spelling ("randic", "sumconn:-1", ...).
    std::string name() const;
    std::string family_name() const;

    /// phi(i, j); requires i, j >= 1.
    double operator()(int i, int j) const;

    /// True when phi is integer-valued on the whole degree grid (the
    /// alpha = 1 families); the doubled index is then an exact integer.
    bool integer_valued() const noexcept;

    friend bool operator==(const PhiSpec&, const PhiSpec&) = default;

private:
    PhiSpec(PhiFamily f, double a) : family_(f), alpha_(a) {}

    PhiFamily family_;
    double alpha_;  // zero outside the general families
};

double phi_eval(const PhiSpec& spec, int i, int j);

/// The nine index specs shipped with the tool: the eight fixed names plus
/// the sumconn:-1 variant used by the bounds catalog.
const std::vector<PhiSpec>& shipped_indices();

}  // namespace vdb
