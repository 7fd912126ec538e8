#include "vdb/families.hpp"

#include <algorithm>

namespace vdb {

namespace {

void require_n(bool ok, FamilyKind kind, int n) {
    if (!ok)
        throw DomainError("vertex count " + std::to_string(n) + " out of range for family '" +
                          family_name(kind) + "'");
}

std::vector<Arc> star_out_arcs(int n, int center) {
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v)
        if (v != center) arcs.push_back(Arc{center, v});
    return arcs;
}

std::vector<Arc> star_in_arcs(int n, int center) {
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v)
        if (v != center) arcs.push_back(Arc{v, center});
    return arcs;
}

}  // namespace

FamilyKind family_kind_from_name(std::string_view name) {
    if (name == "star-out") return FamilyKind::StarOut;
    if (name == "star-in") return FamilyKind::StarIn;
    if (name == "sym-star") return FamilyKind::SymStar;
    if (name == "single-arc") return FamilyKind::SingleArc;
    if (name == "d1") return FamilyKind::D1;
    if (name == "d2") return FamilyKind::D2;
    if (name == "d3") return FamilyKind::D3;
    if (name == "dicycle") return FamilyKind::Dicycle;
    if (name == "sym-complete") return FamilyKind::SymComplete;
    throw DomainError("unknown family name '" + std::string(name) + "'");
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::StarOut: return "star-out";
        case FamilyKind::StarIn: return "star-in";
        case FamilyKind::SymStar: return "sym-star";
        case FamilyKind::SingleArc: return "single-arc";
        case FamilyKind::D1: return "d1";
        case FamilyKind::D2: return "d2";
        case FamilyKind::D3: return "d3";
        case FamilyKind::Dicycle: return "dicycle";
        case FamilyKind::SymComplete: return "sym-complete";
    }
    return "?";
}

Digraph construct(FamilyId f) {
    const int n = f.n;
    switch (f.kind) {
        case FamilyKind::StarOut:
            require_n(n >= 2, f.kind, n);
            return Digraph(n, star_out_arcs(n, 0));
        case FamilyKind::StarIn:
            require_n(n >= 2, f.kind, n);
            return Digraph(n, star_in_arcs(n, 0));
        case FamilyKind::SymStar: {
            require_n(n >= 2, f.kind, n);
            std::vector<Arc> arcs = star_out_arcs(n, 0);
            const std::vector<Arc> back = star_in_arcs(n, 0);
            arcs.insert(arcs.end(), back.begin(), back.end());
            return Digraph(n, std::move(arcs));
        }
        case FamilyKind::SingleArc:
            require_n(n == 2, f.kind, n);
            return Digraph(2, {Arc{0, 1}});
        case FamilyKind::D1: {
            require_n(n >= 3, f.kind, n);
            std::vector<Arc> arcs = {Arc{0, 1}, Arc{1, 0}};
            for (int v = 2; v < n; ++v) {
                arcs.push_back(Arc{v, 0});
                arcs.push_back(Arc{1, v});
            }
            return Digraph(n, std::move(arcs));
        }
        case FamilyKind::D2:
            require_n(n == 4, f.kind, n);
            return Digraph(4, {Arc{0, 2}, Arc{0, 3}, Arc{1, 2}, Arc{1, 3}});
        case FamilyKind::D3:
            require_n(n == 4, f.kind, n);
            return Digraph(4, {Arc{0, 2}, Arc{0, 3}, Arc{1, 2}, Arc{1, 3}, Arc{2, 0}, Arc{3, 1}});
        case FamilyKind::Dicycle: {
            require_n(n >= 2, f.kind, n);
            std::vector<Arc> arcs;
            for (int v = 0; v < n; ++v) arcs.push_back(Arc{v, (v + 1) % n});
            return Digraph(n, std::move(arcs));
        }
        case FamilyKind::SymComplete: {
            require_n(n >= 2, f.kind, n);
            std::vector<Arc> arcs;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v) arcs.push_back(Arc{u, v});
            return Digraph(n, std::move(arcs));
        }
    }
    throw DomainError("unknown family kind");
}

double family_index(FamilyId f, const PhiSpec& spec) {
    const int n = f.n;
    switch (f.kind) {
        case FamilyKind::StarOut:
        case FamilyKind::StarIn:
            require_n(n >= 2, f.kind, n);
            return 0.5 * (n - 1) * spec(1, n - 1);
        case FamilyKind::SymStar:
            require_n(n >= 2, f.kind, n);
            return static_cast<double>(n - 1) * spec(1, n - 1);
        case FamilyKind::SingleArc:
            require_n(n == 2, f.kind, n);
            return 0.5 * spec(1, 1);
        case FamilyKind::D1:
            // one (1,1)-arc, one (n-1,n-1)-arc, 2(n-2) star-pair arcs
            require_n(n >= 3, f.kind, n);
            return 0.5 * (spec(1, 1) + spec(n - 1, n - 1) + 2.0 * (n - 2) * spec(1, n - 1));
        case FamilyKind::D2:
            require_n(n == 4, f.kind, n);
            return 2.0 * spec(2, 2);
        case FamilyKind::D3:
            require_n(n == 4, f.kind, n);
            return 2.0 * spec(2, 2) + spec(1, 1);
        case FamilyKind::Dicycle:
            require_n(n >= 2, f.kind, n);
            return 0.5 * n * spec(1, 1);
        case FamilyKind::SymComplete:
            require_n(n >= 2, f.kind, n);
            return 0.5 * n * (n - 1) * spec(n - 1, n - 1);
    }
    throw DomainError("unknown family kind");
}

std::vector<Digraph> labeled_star_out_copies(int n) {
    require_n(n >= 2, FamilyKind::StarOut, n);
    std::vector<Digraph> out;
    out.reserve(n);
    for (int c = 0; c < n; ++c) out.emplace_back(n, star_out_arcs(n, c));
    return out;
}

std::vector<Digraph> labeled_star_in_copies(int n) {
    require_n(n >= 2, FamilyKind::StarIn, n);
    std::vector<Digraph> out;
    out.reserve(n);
    for (int c = 0; c < n; ++c) out.emplace_back(n, star_in_arcs(n, c));
    return out;
}

std::vector<std::uint64_t> star_orientation_masks(int n) {
    std::vector<std::uint64_t> masks;
    for (const Digraph& d : labeled_star_out_copies(n)) masks.push_back(d.to_bitmask());
    for (const Digraph& d : labeled_star_in_copies(n)) masks.push_back(d.to_bitmask());
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

}  // namespace vdb
