#pragma once

#include "nwg/cartan.hpp"
#include "nwg/roots.hpp"

namespace nwg {

// A positive root of the base quiver whose wall survives in the Namikawa
// space, together with the clause of the classification that admits it.
struct CodimTwoRoot {
    Vec root;
    RootKind kind = RootKind::real;
    int leaf_type = 0;  // 1..4

    friend bool operator==(const CodimTwoRoot& a, const CodimTwoRoot& b) {
        return a.root == b.root && a.kind == b.kind && a.leaf_type == b.leaf_type;
    }
};

// ci * roots[i] + cj * roots[j] == ck * roots[k]; the form letter fixes the
// coefficient pattern: a: 1,1,1  b: 1,2,1  c: 1,1,2  d: 1,3,1  e: 1,1,3.
struct Relation {
    char form = 'a';
    Int ci = 1, cj = 1, ck = 1;
    int i = 0, j = 0, k = 0;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.form == b.form && a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

// m[i]*r[i] + m[j]*r[j] == m[k]*r[k] among a factor's members (local indices).
struct FoldedAddition {
    int i = 0, j = 0, k = 0;

    friend bool operator==(const FoldedAddition& a, const FoldedAddition& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

struct WeylFactor {
    CartanType type;
    std::vector<int> members;  // indices into the codim-2 root list, ascending
    std::vector<Int> m;        // aligned with members
    std::vector<FoldedAddition> additions;
    std::vector<int> simples;  // local indices into members, ascending
    Matrix cartan;             // rows and columns follow simples

    bool operator==(const WeylFactor&) const = default;
};

struct NamikawaGroup {
    FramedSetting reduced;
    ReductionTrace trace;
    std::vector<CodimTwoRoot> roots;  // lex order
    std::vector<Relation> relations;
    std::vector<WeylFactor> factors;  // rank desc, letter asc, first member asc
    BigInt order = 1;

    bool operator==(const NamikawaGroup&) const = default;
};

// Which clause of the wall classification v1 satisfies, if any. v1 must be a
// positive root of fs.q; the parameter must be dominant (contract error
// otherwise), as the clause boundaries assume it.
std::optional<int> classify_codim2_root(const FramedSetting& fs, const Vec& v1);

// All primitive positive roots <= v admitting a clause, in lex order.
// Requires a dominant parameter; throws empty_variety_error when v + alpha_inf
// is not a root of the framed quiver.
std::vector<CodimTwoRoot> find_codim2_roots_serial(const FramedSetting& fs);
std::vector<CodimTwoRoot> find_codim2_roots(const FramedSetting& fs);

// Scan member triples for the five admissible coefficient patterns. Other
// integer identities among the vectors are consequences of these and are
// neither emitted nor errors.
std::vector<Relation> find_relations(const std::vector<CodimTwoRoot>& roots);

// Check every relation's leaf-type triple against the classification table;
// type (2) members may not participate at all.
void validate_relation_types(const std::vector<CodimTwoRoot>& roots,
                             const std::vector<Relation>& relations);

// Folding multiplicities by root strings: m(x) is the longest x-string
// through another member, clamped to at least 1.
std::vector<Int> assign_multiplicities(const std::vector<Vec>& members);

// Unordered pairs i < j with m_i r_i + m_j r_j equal to some m_k r_k.
std::vector<FoldedAddition> folded_additions(const std::vector<Vec>& members,
                                             const std::vector<Int>& m);

// Simples are the members never produced by an addition; entry [a][b] is minus
// the length of the chain repeatedly adding simple b onto simple a.
std::pair<Matrix, std::vector<int>> reconstruct_cartan(const std::vector<Vec>& members,
                                                       const std::vector<Int>& m,
                                                       const std::vector<FoldedAddition>& additions);

// Round trip: generate the abstract positive system of f.cartan, map members
// onto it along the additions, and insist the folded additions, member count,
// and multiplicities-by-length all match. Throws theorem_error on any defect.
void validate_weyl_factor(const WeylFactor& f, const std::vector<CodimTwoRoot>& roots);

// Full pipeline: normalize, reduce to the dominant chamber, classify walls,
// detect relations, group into factors, and multiply the factor orders.
NamikawaGroup namikawa_weyl_group(const FramedSetting& fs);

// Closed forms for finite-type and affine quivers with a dominant parameter.
// Both produce the same structure the pipeline does, member for member.
NamikawaGroup dynkin_fast_path(const FramedSetting& fs);
NamikawaGroup affine_fast_path(const FramedSetting& fs);

}  // namespace nwg
