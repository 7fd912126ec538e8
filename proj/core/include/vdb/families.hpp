#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vdb/digraph.hpp"
#include "vdb/phi.hpp"

namespace vdb {

/// The named digraph families whose indices have closed forms. All
/// constructed instances are free of isolated vertices.
enum class FamilyKind {
    StarOut,      // all arcs center -> leaf              (n >= 2)
    StarIn,       // all arcs leaf -> center              (n >= 2)
    SymStar,      // star with both arc directions        (n >= 2)
    SingleArc,    // the one-arc digraph                  (n == 2)
    D1,           // mutual pair 0<->1 plus i->0 and 1->i (n >= 3)
    D2,           // complete bipartite {0,1} -> {2,3}    (n == 4)
    D3,           // D2 plus the arcs 2->0 and 3->1       (n == 4)
    Dicycle,      // directed cycle                       (n >= 2)
    SymComplete,  // all ordered pairs                    (n >= 2)
};

struct FamilyId {
    FamilyKind kind;
    int n = 0;
};

/// Command-line spellings: star-out, star-in, sym-star, single-arc, d1,
/// d2, d3, dicycle, sym-complete.
FamilyKind family_kind_from_name(std::string_view name);
std::string family_name(FamilyKind kind);

/// Builds the family's exact arc set; throws DomainError when n is out of
/// range for the kind.
Digraph construct(FamilyId f);

/// Closed-form index of the family, equal to index_arc_sum(construct(f)).
double family_index(FamilyId f, const PhiSpec& spec);

/// All labeled copies obtained by varying the center choice.
std::vector<Digraph> labeled_star_out_copies(int n);
std::vector<Digraph> labeled_star_in_copies(int n);

/// Bitmask encodings of every labeled star orientation (both directions,
/// all centers), deduplicated and sorted ascending. 2n masks for n >= 3,
/// two for n = 2.
std::vector<std::uint64_t> star_orientation_masks(int n);

}  // namespace vdb
