#pragma once

#include <optional>
#include <string>

#include "nwg/quiver.hpp"

namespace nwg {

struct CartanType {
    char letter = 'A';
    int rank = 0;

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.letter == b.letter && a.rank == b.rank;
    }
};

std::string to_string(CartanType t);

using Matrix = std::vector<std::vector<Int>>;

// Entry convention for i != j:
//   cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
//                = -(largest k such that alpha_i + k * alpha_j is a root).
Matrix cartan_matrix(CartanType t);

Int positive_root_count(CartanType t);
BigInt weyl_group_order(CartanType t);

struct RootDatum {
    std::vector<Vec> positive;  // simple-basis coordinates, lex sorted
    std::vector<Int> norm;      // invariant form values, aligned with positive
    Int min_norm = 0;
    Int max_norm = 0;
};

// Positive roots of a finite-type Cartan matrix by reflection closure.
// Throws theorem_error when the closure exceeds the finite-type budget or the
// matrix is not symmetrizable.
RootDatum generate_root_system(const Matrix& cartan);

// Recognize a Cartan matrix up to simultaneous permutation of the index set.
// A rank-2 double bond reports as B2; W(B2) = W(C2), so the group order is
// insensitive to the choice.
std::optional<CartanType> classify_cartan(const Matrix& cartan);

// Type of the full subgraph of q induced by `component`, which must be a
// connected set of loop-free vertices joined by single edges; nullopt when the
// induced diagram is not one of A, D, E.
std::optional<CartanType> diagram_type(const Quiver& q, const std::vector<int>& component);

// Every connected component of q is a simply-laced Dynkin diagram.
bool is_dynkin_type(const Quiver& q);

// q is a connected affine diagram: a cycle, a double edge on two vertices, one
// of the affine D or E trees, or the one-loop one-vertex quiver.
bool is_affine_type(const Quiver& q);

// Primitive positive radical vector of an affine quiver.
Vec affine_delta(const Quiver& q);

}  // namespace nwg
