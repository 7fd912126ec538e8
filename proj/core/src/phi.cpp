#include "vdb/phi.hpp"

#include <charconv>
#include <cmath>

namespace vdb {

namespace {

double power(double base, double alpha) {
    if (alpha == 1.0) return base;
    if (alpha == -1.0) return 1.0 / base;
    if (alpha == -0.5) return 1.0 / std::sqrt(base);
    return std::pow(base, alpha);
}

std::string format_alpha(double alpha) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, alpha);
    return std::string(buf, ptr);
}

double parse_alpha(std::string_view text, std::string_view full_name) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw DomainError("malformed exponent in index name '" + std::string(full_name) + "'");
    return value;
}

}  // namespace

PhiSpec PhiSpec::general_randic(double alpha) {
    return PhiSpec(PhiFamily::GeneralRandic, alpha);
}

PhiSpec PhiSpec::general_sum_connectivity(double alpha) {
    return PhiSpec(PhiFamily::GeneralSumConnectivity, alpha);
}

PhiSpec PhiSpec::geometric_arithmetic() {
    return PhiSpec(PhiFamily::GeometricArithmetic, 0.0);
}

PhiSpec PhiSpec::atom_bond_connectivity() {
    return PhiSpec(PhiFamily::AtomBondConnectivity, 0.0);
}

PhiSpec PhiSpec::harmonic() { return PhiSpec(PhiFamily::Harmonic, 0.0); }

PhiSpec PhiSpec::parse(std::string_view name) {
    if (name == "harmonic") return harmonic();
    if (name == "ga") return geometric_arithmetic();
    if (name == "abc") return atom_bond_connectivity();
    if (name == "randic") return randic();
    if (name == "sumconn") return sum_connectivity();
    if (name == "zagreb1") return first_zagreb();
    if (name == "zagreb2") return second_zagreb();
    if (name == "mzagreb2") return modified_second_zagreb();
    if (name.starts_with("randic:"))
        return general_randic(parse_alpha(name.substr(7), name));
    if (name.starts_with("sumconn:"))
        return general_sum_connectivity(parse_alpha(name.substr(8), name));
    throw DomainError("unknown index name '" + std::string(name) + "'");
}

bool PhiSpec::has_alpha() const noexcept {
    return family_ == PhiFamily::GeneralRandic || family_ == PhiFamily::GeneralSumConnectivity;
}

double PhiSpec::alpha() const {
    if (!has_alpha()) throw DomainError("index family has no exponent");
    return alpha_;
}

std::string PhiSpec::name() const {
    switch (family_) {
        case PhiFamily::Harmonic: return "harmonic";
        case PhiFamily::GeometricArithmetic: return "ga";
        case PhiFamily::AtomBondConnectivity: return "abc";
        case PhiFamily::GeneralRandic:
            if (alpha_ == -0.5) return "randic";
            if (alpha_ == 1.0) return "zagreb2";
            if (alpha_ == -1.0) return "mzagreb2";
            return "randic:" + format_alpha(alpha_);
        case PhiFamily::GeneralSumConnectivity:
            if (alpha_ == -0.5) return "sumconn";
            if (alpha_ == 1.0) return "zagreb1";
            return "sumconn:" + format_alpha(alpha_);
    }
    return "?";
}

std::string PhiSpec::family_name() const {
    switch (family_) {
        case PhiFamily::GeneralRandic: return "general-randic";
        case PhiFamily::GeneralSumConnectivity: return "general-sumconn";
        case PhiFamily::GeometricArithmetic: return "ga";
        case PhiFamily::AtomBondConnectivity: return "abc";
        case PhiFamily::Harmonic: return "harmonic";
    }
    return "?";
}

double PhiSpec::operator()(int i, int j) const {
    if (i < 1 || j < 1) throw DomainError("phi is defined on positive degrees only");
    const double x = i;
    const double y = j;
    switch (family_) {
        case PhiFamily::GeneralRandic: return power(x * y, alpha_);
        case PhiFamily::GeneralSumConnectivity: return power(x + y, alpha_);
        case PhiFamily::GeometricArithmetic: return 2.0 * std::sqrt(x * y) / (x + y);
        case PhiFamily::AtomBondConnectivity: return std::sqrt((x + y - 2.0) / (x * y));
        case PhiFamily::Harmonic: return 2.0 / (x + y);
    }
    return 0.0;
}

bool PhiSpec::integer_valued() const noexcept {
    return has_alpha() && alpha_ == 1.0;
}

double phi_eval(const PhiSpec& spec, int i, int j) { return spec(i, j); }

const std::vector<PhiSpec>& shipped_indices() {
    static const std::vector<PhiSpec> specs = {
        PhiSpec::harmonic(),
        PhiSpec::geometric_arithmetic(),
        PhiSpec::atom_bond_connectivity(),
        PhiSpec::randic(),
        PhiSpec::sum_connectivity(),
        PhiSpec::first_zagreb(),
        PhiSpec::second_zagreb(),
        PhiSpec::modified_second_zagreb(),
        PhiSpec::general_sum_connectivity(-1.0),
    };
    return specs;
}

}  // namespace vdb
