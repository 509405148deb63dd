#include "nwg/namikawa.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#ifdef NWG_HAVE_OPENMP
#include <omp.h>
#endif

namespace nwg {

namespace {

Int max_multiple_leq(const Vec& v1, const Vec& v) {
    Int k = -1;
    for (size_t i = 0; i < v1.size(); ++i)
        if (v1[i] > 0) {
            Int q = v[i] / v1[i];
            if (k < 0 || q < k) k = q;
        }
    return k < 0 ? 0 : k;
}

std::optional<int> classify_inner(const FramedSetting& fs, const Quiver& qx, const Vec& tilde,
                                  const Vec& v1, RootKind kind) {
    Vec v1x = embed(v1);
    Int pairing = nu_pairing(fs, v1);
    Int kmax = max_multiple_leq(v1, fs.v);
    auto root_at = [&](Int k) {
        Vec u = sub(tilde, scale(k, v1x));
        return all_nonneg(u) && classify_root(qx, u).has_value();
    };
    bool root1 = kmax >= 1 && root_at(1);
    switch (kind) {
    case RootKind::real:
        if (pairing == 0 && root1) return 1;
        return std::nullopt;
    case RootKind::isotropic:
        if (pairing == 1) {
            for (Int k = 2; k <= kmax; ++k)
                if (root_at(k)) return 2;
            return std::nullopt;
        }
        if (pairing == 2 && root1) return 3;
        return std::nullopt;
    case RootKind::nonisotropic:
    default: {
        Int target = 2 - tits_form(fs.q, v1, v1);
        if (pairing != target || !root1) return std::nullopt;
        for (Int k = 2; k <= kmax; ++k)
            if (root_at(k)) return std::nullopt;
        return 4;
    }
    }
}

std::optional<CodimTwoRoot> classify_candidate(const FramedSetting& fs, const Quiver& qx,
                                               const Vec& tilde, const Vec& x) {
    auto kind = classify_root(fs.q, x);
    if (!kind || !is_primitive_root(fs.q, x)) return std::nullopt;
    auto type = classify_inner(fs, qx, tilde, x, *kind);
    if (!type) return std::nullopt;
    return CodimTwoRoot{x, *kind, *type};
}

void require_dominant(const FramedSetting& fs, const char* who) {
    if (!nu_dominant(fs)) throw contract_error(std::string(who) + " requires a dominant parameter");
}

// The five coefficient patterns p*r_i + q*r_j == s*r_k that realize additions
// of the underlying abstract root systems (the coefficients are the roots'
// length multipliers). Other integer identities can hold among the vectors,
// but they are consequences of these and carry no extra structure.
struct Pattern {
    Int p, q, s;
    char form;
};

constexpr Pattern kPatterns[] = {
    {1, 1, 1, 'a'}, {1, 2, 1, 'b'}, {1, 1, 2, 'c'}, {1, 3, 1, 'd'}, {1, 1, 3, 'e'},
};

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

WeylFactor build_factor(std::vector<int> member_ids, const std::vector<CodimTwoRoot>& roots) {
    WeylFactor f;
    f.members = std::move(member_ids);
    std::vector<Vec> vecs;
    vecs.reserve(f.members.size());
    for (int id : f.members) vecs.push_back(roots[id].root);
    f.m = assign_multiplicities(vecs);
    f.additions = folded_additions(vecs, f.m);
    auto [cartan, simples] = reconstruct_cartan(vecs, f.m, f.additions);
    f.cartan = std::move(cartan);
    f.simples = std::move(simples);
    auto type = classify_cartan(f.cartan);
    if (!type) throw theorem_error("relation component is not of finite type");
    f.type = *type;
    if (static_cast<Int>(f.members.size()) != positive_root_count(f.type))
        throw theorem_error("member count differs from the positive system of " + to_string(f.type));
    validate_weyl_factor(f, roots);
    return f;
}

// Relations, factors, and order from an already sorted root list.
void assemble_group(NamikawaGroup& out) {
    out.relations = find_relations(out.roots);
    validate_relation_types(out.roots, out.relations);
    int n = static_cast<int>(out.roots.size());
    DisjointSet ds(n);
    for (const auto& rel : out.relations) {
        ds.unite(rel.i, rel.j);
        ds.unite(rel.i, rel.k);
    }
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < n; ++i) comps[ds.find(i)].push_back(i);
    std::vector<std::vector<int>> ordered;
    for (auto& [root, ids] : comps) ordered.push_back(ids);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.factors.clear();
    out.order = 1;
    for (auto& ids : ordered) out.factors.push_back(build_factor(std::move(ids), out.roots));
    std::sort(out.factors.begin(), out.factors.end(), [](const WeylFactor& a, const WeylFactor& b) {
        if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
        if (a.type.letter != b.type.letter) return a.type.letter < b.type.letter;
        return a.members.front() < b.members.front();
    });
    for (const auto& f : out.factors) out.order *= weyl_group_order(f.type);
}

// Positive roots of a simply-laced component of q, embedded into q coordinates.
std::vector<Vec> component_positive_roots(const Quiver& q, const std::vector<int>& component) {
    int m = static_cast<int>(component.size());
    Matrix cartan(m, std::vector<Int>(m, 0));
    for (int a = 0; a < m; ++a) {
        cartan[a][a] = 2;
        for (int b = 0; b < m; ++b)
            if (a != b) cartan[a][b] = -q.edges[component[a]][component[b]];
    }
    RootDatum rd = generate_root_system(cartan);
    std::vector<Vec> out;
    out.reserve(rd.positive.size());
    for (const auto& x : rd.positive) {
        Vec v(q.n, 0);
        for (int a = 0; a < m; ++a) v[component[a]] = x[a];
        out.push_back(std::move(v));
    }
    return out;
}

// Vertices where the parameter vanishes, grouped into components of the full
// subgraph they induce. Only loop-free vertices can satisfy the condition.
std::vector<std::vector<int>> parameter_kernel_components(const FramedSetting& fs) {
    std::vector<int> v0;
    for (int i = 0; i < fs.q.n; ++i)
        if (fs.q.loop_free(i) && nu_pairing(fs, unit_vec(fs.q.n, i)) == 0) v0.push_back(i);
    std::vector<char> in_v0(fs.q.n, 0), seen(fs.q.n, 0);
    for (int i : v0) in_v0[i] = 1;
    std::vector<std::vector<int>> comps;
    for (int s : v0) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (int j = 0; j < fs.q.n; ++j)
                if (in_v0[j] && !seen[j] && fs.q.edges[comp[qi]][j] > 0) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

NamikawaGroup trivial_group(FramedSetting fs0) {
    NamikawaGroup out;
    out.trace.v_before = fs0.v;
    out.trace.v_after = fs0.v;
    out.reduced = std::move(fs0);
    return out;
}

}  // namespace

std::optional<int> classify_codim2_root(const FramedSetting& fs, const Vec& v1) {
    fs.validate();
    require_dominant(fs, "classify_codim2_root");
    if (v1.size() != static_cast<size_t>(fs.q.n) || !all_nonneg(v1) || is_zero(v1))
        throw input_error("candidate root must be a nonzero nonnegative vector on the base quiver");
    auto kind = classify_root(fs.q, v1);
    if (!kind) throw input_error("candidate is not a positive root");
    return classify_inner(fs, extended_quiver(fs), extended_dim(fs), v1, *kind);
}

std::vector<CodimTwoRoot> find_codim2_roots_serial(const FramedSetting& fs) {
    fs.validate();
    require_dominant(fs, "find_codim2_roots");
    Quiver qx = extended_quiver(fs);
    Vec tilde = extended_dim(fs);
    if (!classify_root(qx, tilde))
        throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");
    std::vector<CodimTwoRoot> out;
    Box box{fs.v};
    size_t total = box.size();
    for (size_t idx = 1; idx < total; ++idx)
        if (auto c = classify_candidate(fs, qx, tilde, box.at(idx))) out.push_back(*c);
    return out;
}

std::vector<CodimTwoRoot> find_codim2_roots(const FramedSetting& fs) {
#ifdef NWG_HAVE_OPENMP
    fs.validate();
    require_dominant(fs, "find_codim2_roots");
    Quiver qx = extended_quiver(fs);
    Vec tilde = extended_dim(fs);
    if (!classify_root(qx, tilde))
        throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");
    Box box{fs.v};
    size_t total = box.size();
    if (total < 4096) return find_codim2_roots_serial(fs);
    int nt = omp_get_max_threads();
    std::vector<std::vector<CodimTwoRoot>> parts(nt);
    // Static contiguous chunks in index order, same scheme as the root scan,
    // so the concatenation equals the serial output exactly.
#pragma omp parallel num_threads(nt)
    {
        int t = omp_get_thread_num();
        size_t lo = 1 + (total - 1) * (size_t)t / nt;
        size_t hi = 1 + (total - 1) * (size_t)(t + 1) / nt;
        for (size_t idx = lo; idx < hi; ++idx)
            if (auto c = classify_candidate(fs, qx, tilde, box.at(idx)))
                parts[t].push_back(*c);
    }
    std::vector<CodimTwoRoot> out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
#else
    return find_codim2_roots_serial(fs);
#endif
}

std::vector<Relation> find_relations(const std::vector<CodimTwoRoot>& roots) {
    int n = static_cast<int>(roots.size());
    std::vector<Relation> out;
    auto try_match = [&](const Pattern& pat, int i, int j) {
        Vec lhs = add(scale(pat.p, roots[i].root), scale(pat.q, roots[j].root));
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            if (scale(pat.s, roots[k].root) == lhs)
                out.push_back(Relation{pat.form, pat.p, pat.q, pat.s, i, j, k});
        }
    };
    for (const auto& pat : kPatterns) {
        if (pat.p == pat.q) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) try_match(pat, i, j);
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) try_match(pat, i, j);
        }
    }
    std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
        if (a.form != b.form) return a.form < b.form;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    });
    return out;
}

void validate_relation_types(const std::vector<CodimTwoRoot>& roots,
                             const std::vector<Relation>& relations) {
    auto allowed = [](int lo, int hi, int target) {
        if (lo == 1 && hi == 1) return target == 1;
        if (lo == 1 && (hi == 3 || hi == 4)) return target == 3 || target == 4;
        if (lo >= 3) return target == 4;
        return false;
    };
    for (const auto& rel : relations) {
        int ti = roots[rel.i].leaf_type, tj = roots[rel.j].leaf_type, tk = roots[rel.k].leaf_type;
        if (ti == 2 || tj == 2 || tk == 2)
            throw theorem_error("a type (2) codimension 2 root entered a relation");
        int lo = std::min(ti, tj), hi = std::max(ti, tj);
        if (!allowed(lo, hi, tk))
            throw theorem_error("relation type triple (" + std::to_string(ti) + "," +
                                std::to_string(tj) + " -> " + std::to_string(tk) +
                                ") is outside the classification table");
    }
}

std::vector<Int> assign_multiplicities(const std::vector<Vec>& members) {
    std::set<Vec> phi;
    for (const auto& x : members) {
        phi.insert(x);
        phi.insert(negate(x));
    }
    std::vector<Int> out(members.size(), 1);
    for (size_t a = 0; a < members.size(); ++a) {
        const Vec& x = members[a];
        Int best = 1;
        for (size_t b = 0; b < members.size(); ++b) {
            if (b == a) continue;
            Int up = 0;
            for (Vec t = add(members[b], x); phi.count(t) && up <= 4; t = add(t, x)) ++up;
            Int down = 0;
            for (Vec t = sub(members[b], x); phi.count(t) && down <= 4; t = sub(t, x)) ++down;
            best = std::max(best, std::abs(down - up));
        }
        if (best > 3) throw theorem_error("root string longer than any finite type allows");
        out[a] = best;
    }
    return out;
}

std::vector<FoldedAddition> folded_additions(const std::vector<Vec>& members,
                                             const std::vector<Int>& m) {
    int n = static_cast<int>(members.size());
    std::vector<FoldedAddition> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec target = add(scale(m[i], members[i]), scale(m[j], members[j]));
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (scale(m[k], members[k]) == target) {
                    out.push_back(FoldedAddition{i, j, k});
                    break;  // m_k r_k are pairwise distinct
                }
            }
        }
    return out;
}

std::pair<Matrix, std::vector<int>> reconstruct_cartan(const std::vector<Vec>& members,
                                                       const std::vector<Int>& m,
                                                       const std::vector<FoldedAddition>& additions) {
    int n = static_cast<int>(members.size());
    (void)m;
    std::map<std::pair<int, int>, int> addmap;
    std::vector<char> is_target(n, 0);
    for (const auto& ad : additions) {
        auto key = std::minmax(ad.i, ad.j);
        if (!addmap.emplace(std::pair<int, int>(key.first, key.second), ad.k).second)
            throw theorem_error("two folded additions share a left-hand pair");
        is_target[ad.k] = 1;
    }
    std::vector<int> simples;
    for (int i = 0; i < n; ++i)
        if (!is_target[i]) simples.push_back(i);
    int rank = static_cast<int>(simples.size());
    if (rank == 0) throw theorem_error("every member is an addition target");
    Matrix cartan(rank, std::vector<Int>(rank, 0));
    for (int a = 0; a < rank; ++a) cartan[a][a] = 2;
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b) {
            if (a == b) continue;
            int cur = simples[a], steps = 0;
            for (;;) {
                auto key = std::minmax(simples[b], cur);
                auto it = addmap.find(std::pair<int, int>(key.first, key.second));
                if (it == addmap.end()) break;
                cur = it->second;
                if (++steps > 3) throw theorem_error("addition chain longer than any finite type allows");
            }
            cartan[a][b] = -steps;
        }
    return {cartan, simples};
}

void validate_weyl_factor(const WeylFactor& f, const std::vector<CodimTwoRoot>& roots) {
    size_t n = f.members.size();
    if (f.m.size() != n || n == 0) throw theorem_error("factor member data is inconsistent");
    for (int id : f.members)
        if (id < 0 || id >= static_cast<int>(roots.size()))
            throw theorem_error("factor member index out of range");

    RootDatum rd = generate_root_system(f.cartan);
    if (rd.positive.size() != n)
        throw theorem_error("member count differs from the abstract positive system");

    int rank = static_cast<int>(f.simples.size());
    std::vector<Vec> img(n);
    std::vector<char> done(n, 0);
    for (int s = 0; s < rank; ++s) {
        img[f.simples[s]] = unit_vec(rank, s);
        done[f.simples[s]] = 1;
    }
    std::set<Vec> abstract_roots(rd.positive.begin(), rd.positive.end());
    size_t assigned = rank;
    for (bool progress = true; progress;) {
        progress = false;
        for (const auto& ad : f.additions) {
            if (done[ad.k] || !done[ad.i] || !done[ad.j]) continue;
            Vec x = add(img[ad.i], img[ad.j]);
            if (!abstract_roots.count(x))
                throw theorem_error("folded addition leaves the abstract root system");
            img[ad.k] = x;
            done[ad.k] = 1;
            ++assigned;
            progress = true;
        }
    }
    if (assigned != n) throw theorem_error("folded additions do not generate every member");
    if (std::set<Vec>(img.begin(), img.end()).size() != n)
        throw theorem_error("member images collide in the abstract system");

    if (rd.min_norm <= 0 || rd.max_norm % rd.min_norm != 0)
        throw theorem_error("abstract root norms are not those of a finite system");
    Int ratio = rd.max_norm / rd.min_norm;
    std::map<Vec, Int> norm_of;
    for (size_t i = 0; i < rd.positive.size(); ++i) norm_of[rd.positive[i]] = rd.norm[i];
    for (size_t a = 0; a < n; ++a) {
        Int expect = (ratio > 1 && norm_of[img[a]] == rd.max_norm) ? ratio : 1;
        if (f.m[a] != expect)
            throw theorem_error("member multiplicity contradicts the abstract root length");
    }

    std::set<std::array<Vec, 3>> folded;
    for (const auto& ad : f.additions) {
        Vec x = img[ad.i], y = img[ad.j];
        if (y < x) std::swap(x, y);
        folded.insert({x, y, img[ad.k]});
    }
    std::set<std::array<Vec, 3>> abstract_adds;
    for (size_t i = 0; i < rd.positive.size(); ++i)
        for (size_t j = i + 1; j < rd.positive.size(); ++j) {
            Vec s = add(rd.positive[i], rd.positive[j]);
            if (abstract_roots.count(s)) abstract_adds.insert({rd.positive[i], rd.positive[j], s});
        }
    if (folded != abstract_adds)
        throw theorem_error("folded additions do not match the abstract additions");
}

NamikawaGroup namikawa_weyl_group(const FramedSetting& fs) {
    fs.validate();
    FramedSetting fs0 = normalized(fs);
    if (fs0.q.n == 0) return trivial_group(std::move(fs0));
    NamikawaGroup out;
    out.reduced = dominance_reduce(fs0, &out.trace);
    out.roots = find_codim2_roots(out.reduced);
    assemble_group(out);
    return out;
}

NamikawaGroup dynkin_fast_path(const FramedSetting& fs) {
    fs.validate();
    if (!is_dynkin_type(fs.q)) throw contract_error("dynkin_fast_path requires a finite-type quiver");
    require_dominant(fs, "dynkin_fast_path");
    FramedSetting fs0 = normalized(fs);
    if (fs0.q.n == 0) return trivial_group(std::move(fs0));
    if (!classify_root(extended_quiver(fs0), extended_dim(fs0)))
        throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");
    NamikawaGroup out = trivial_group(fs0);
    for (const auto& comp : parameter_kernel_components(fs0))
        for (auto& x : component_positive_roots(fs0.q, comp))
            out.roots.push_back(CodimTwoRoot{std::move(x), RootKind::real, 1});
    std::sort(out.roots.begin(), out.roots.end(),
              [](const CodimTwoRoot& a, const CodimTwoRoot& b) { return a.root < b.root; });
    assemble_group(out);
    return out;
}

NamikawaGroup affine_fast_path(const FramedSetting& fs) {
    fs.validate();
    if (!is_affine_type(fs.q)) throw contract_error("affine_fast_path requires an affine quiver");
    require_dominant(fs, "affine_fast_path");
    Vec delta = affine_delta(fs.q);
    Int d = dot(fs.w, delta);
    FramedSetting fs0 = normalized(fs);
    if (d == 0 || fs0.q.n == 0) return trivial_group(std::move(fs0));  // a point either way
    if (!classify_root(extended_quiver(fs0), extended_dim(fs0)))
        throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");

    Int n_delta = 0;
    if (d == 1) {
        // With pairing one against delta, dominance forces v to be a multiple.
        n_delta = max_multiple_leq(delta, fs.v);
        if (fs.v != scale(n_delta, delta))
            throw theorem_error("dominant parameter with unit delta pairing forces v = n delta");
    }

    NamikawaGroup out = trivial_group(fs0);
    for (const auto& comp : parameter_kernel_components(fs0))
        for (auto& x : component_positive_roots(fs0.q, comp))
            out.roots.push_back(CodimTwoRoot{std::move(x), RootKind::real, 1});
    if (d == 1 && n_delta >= 2) {
        out.roots.push_back(CodimTwoRoot{delta, RootKind::isotropic, 2});
    } else if (d == 2 && leq(delta, fs.v)) {
        Vec t = sub(extended_dim(fs), embed(delta));
        if (support_connected(extended_quiver(fs), t))
            out.roots.push_back(CodimTwoRoot{delta, RootKind::isotropic, 3});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const CodimTwoRoot& a, const CodimTwoRoot& b) { return a.root < b.root; });
    assemble_group(out);
    return out;
}

}  // namespace nwg
