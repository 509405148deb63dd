#include "nwg/strata.hpp"

#include <algorithm>

#include "nwg/roots.hpp"

namespace nwg {

namespace {

bool slot_less(const RepSlot& a, const RepSlot& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.mult > b.mult;
}

bool type_less(const RepresentationType& a, const RepresentationType& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    size_t n = std::min(a.slots.size(), b.slots.size());
    for (size_t i = 0; i < n; ++i)
        if (!(a.slots[i] == b.slots[i])) return slot_less(a.slots[i], b.slots[i]);
    return a.slots.size() < b.slots.size();
}

// Partitions of n with parts <= maxpart, non-increasing.
void partitions(Int n, Int maxpart, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int part = std::min(n, maxpart); part >= 1; --part) {
        cur.push_back(part);
        partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}

// Multisets of pairs (m, c) with sum of m*c equal to n, listed non-increasing
// so each multiset appears once. A repeated pair is meaningful: it selects
// another simple of the same dimension.
void pair_multisets(Int n, Int max_m, Int max_c_at_max_m, std::vector<std::pair<Int, Int>>& cur,
                    std::vector<std::vector<std::pair<Int, Int>>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int m = std::min(n, max_m); m >= 1; --m) {
        Int cmax = n / m;
        if (m == max_m) cmax = std::min(cmax, max_c_at_max_m);
        for (Int c = cmax; c >= 1; --c) {
            cur.emplace_back(m, c);
            pair_multisets(n - m * c, m, c, cur, out);
            cur.pop_back();
        }
    }
}

RepresentationType finish_type(const Quiver& qx, std::vector<RepSlot> slots) {
    std::sort(slots.begin(), slots.end(), slot_less);
    Int d = 0;
    for (const auto& s : slots) d += p_value(qx, s.dim);
    return RepresentationType{std::move(slots), 2 * d};
}

}  // namespace

std::vector<RepresentationType> enumerate_representation_types(const SubgenericContext& ctx) {
    if (!classify_root(ctx.qx, ctx.tilde_v))
        throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");

    Int kmax = -1;
    for (size_t i = 0; i < ctx.v1x.size(); ++i)
        if (ctx.v1x[i] > 0) {
            Int q = ctx.tilde_v[i] / ctx.v1x[i];
            if (kmax < 0 || q < kmax) kmax = q;
        }

    std::vector<RepresentationType> types;
    for (Int n = 0; n <= kmax; ++n) {
        if (!sigma_complement(ctx, n)) continue;
        Vec u = sub(ctx.tilde_v, scale(n, ctx.v1x));

        if (n == 0) {
            types.push_back(finish_type(ctx.qx, {{u, 1}}));
            continue;
        }

        switch (ctx.v1_kind) {
        case RootKind::real: {
            // A real dimension carries a unique simple, so the n copies share
            // one slot; splitting them would repeat that simple.
            types.push_back(finish_type(ctx.qx, {{u, 1}, {ctx.v1x, n}}));
            break;
        }
        case RootKind::isotropic: {
            // Simples of dimension v1x form a positive-dimensional family:
            // choose distinct ones with multiplicities, i.e. a partition of n.
            std::vector<std::vector<Int>> parts;
            std::vector<Int> cur;
            partitions(n, n, cur, parts);
            for (const auto& lambda : parts) {
                std::vector<RepSlot> slots{{u, 1}};
                for (Int c : lambda) slots.push_back({ctx.v1x, c});
                types.push_back(finish_type(ctx.qx, std::move(slots)));
            }
            break;
        }
        case RootKind::nonisotropic: {
            // Simples exist in every multiple m*v1x; a type distributes n as a
            // multiset of (dimension multiple, multiplicity) pairs.
            std::vector<std::vector<std::pair<Int, Int>>> choices;
            std::vector<std::pair<Int, Int>> cur;
            pair_multisets(n, n, n, cur, choices);
            for (const auto& ms : choices) {
                std::vector<RepSlot> slots{{u, 1}};
                for (auto [m, c] : ms) slots.push_back({scale(m, ctx.v1x), c});
                types.push_back(finish_type(ctx.qx, std::move(slots)));
            }
            break;
        }
        }
    }

    std::sort(types.begin(), types.end(), type_less);
    return types;
}

bool has_codim2_leaf_bruteforce(const SubgenericContext& ctx) {
    auto types = enumerate_representation_types(ctx);
    if (types.empty()) return false;
    Int dmax = types.front().dimension;
    for (const auto& t : types)
        if (t.dimension == dmax - 2) return true;
    return false;
}

bool max_dimension_type_unique(const std::vector<RepresentationType>& types) {
    return types.size() < 2 || types[1].dimension != types[0].dimension;
}

}  // namespace nwg
