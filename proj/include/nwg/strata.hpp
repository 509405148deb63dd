#pragma once

#include "nwg/sigma.hpp"

namespace nwg {

// One isotypic slot of a semisimple representation: `mult` copies of a simple
// of dimension vector `dim`. Slots with equal dims may repeat in a type; the
// copies then stand for pairwise non-isomorphic simples of the same dimension.
struct RepSlot {
    Vec dim;
    Int mult = 1;

    friend bool operator==(const RepSlot& a, const RepSlot& b) {
        return a.dim == b.dim && a.mult == b.mult;
    }
};

// A representation type indexes a stratum of the subgeneric variety: the
// closed orbits whose semisimplification decomposes per `slots`. `dimension`
// is the stratum dimension 2 * sum of p over the slot dimensions (one summand
// per slot, independent of the multiplicity).
struct RepresentationType {
    std::vector<RepSlot> slots;
    Int dimension = 0;
};

// All representation types of the subgeneric setting, sorted by dimension
// descending, ties broken by the slot list. Throws empty_variety_error when
// tilde_v is not a root of the extended quiver.
std::vector<RepresentationType> enumerate_representation_types(const SubgenericContext& ctx);

// True when some stratum sits exactly two below the top dimension.
bool has_codim2_leaf_bruteforce(const SubgenericContext& ctx);

// True when the maximal-dimension type is unique. Expected to hold on every
// valid context; exposed separately so callers can surface violations as a
// diagnostic rather than an error.
bool max_dimension_type_unique(const std::vector<RepresentationType>& types);

}
