#include "nwg/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nwg {

namespace {

void check_rank(CartanType t) {
    int n = t.rank;
    bool ok = false;
    switch (t.letter) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 3; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
    }
    if (!ok) throw input_error("unsupported Cartan type " + to_string(t));
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

bool valid_cartan_shape(const Matrix& a) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (a[i][i] != 2) return false;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) return false;
            if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
        }
    }
    return true;
}

// Shape of a connected tree given by adjacency lists: a path or one of the
// single-branch diagrams D and E.
std::optional<CartanType> tree_shape(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() >= 4) return std::nullopt;
        if (adj[i].size() == 3) {
            if (branch >= 0) return std::nullopt;
            branch = i;
        }
    }
    if (branch < 0) return CartanType{'A', n};
    Int arms[3];
    for (int k = 0; k < 3; ++k) {
        int prev = branch, cur = adj[branch][k];
        Int len = 1;
        while (adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms[k] = len;
    }
    std::sort(arms, arms + 3);
    if (arms[0] == 1 && arms[1] == 1) return CartanType{'D', static_cast<int>(arms[2]) + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return CartanType{'E', static_cast<int>(arms[2]) + 4};
    return std::nullopt;
}

Matrix tits_matrix(const Quiver& q) {
    Matrix c(q.n, std::vector<Int>(q.n, 0));
    for (int i = 0; i < q.n; ++i) {
        c[i][i] = 2 - 2 * q.loops[i];
        for (int j = 0; j < q.n; ++j)
            if (i != j) c[i][j] = -q.edges[i][j];
    }
    return c;
}

// Bareiss fraction-free determinant.
Int det_int(Matrix m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Matrix delete_row_col(const Matrix& m, int row, int col) {
    int n = static_cast<int>(m.size());
    Matrix out;
    out.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Int> r;
        r.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != col) r.push_back(m[i][j]);
        out.push_back(std::move(r));
    }
    return out;
}

// A kernel vector of a singular matrix of rank n-1, via a nonzero adjugate
// column; nullopt when the rank drops further.
std::optional<Vec> rank_deficient_kernel(const Matrix& c) {
    int n = static_cast<int>(c.size());
    for (int col = 0; col < n; ++col) {
        Vec v(n);
        bool nonzero = false;
        for (int row = 0; row < n; ++row) {
            Int minor = det_int(delete_row_col(c, col, row));
            v[row] = ((row + col) % 2 ? -minor : minor);
            if (v[row] != 0) nonzero = true;
        }
        if (nonzero) return v;
    }
    return std::nullopt;
}

Quiver induced_subquiver(const Quiver& q, const std::vector<int>& keep) {
    Quiver sub = Quiver::make(static_cast<int>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a) {
        sub.loops[a] = q.loops[keep[a]];
        for (size_t b = 0; b < keep.size(); ++b)
            if (a != b) sub.edges[a][b] = q.edges[keep[a]][keep[b]];
    }
    return sub;
}

std::vector<std::vector<int>> graph_components(const Quiver& q) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(q.n, 0);
    for (int s = 0; s < q.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (int j = 0; j < q.n; ++j)
                if (!seen[j] && q.edges[comp[qi]][j] > 0) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

std::string to_string(CartanType t) { return std::string(1, t.letter) + std::to_string(t.rank); }

Matrix cartan_matrix(CartanType t) {
    check_rank(t);
    int n = t.rank;
    Matrix a(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    auto path = [&](int last) {
        for (int i = 0; i < last; ++i) bond(i, i + 1);
    };
    switch (t.letter) {
    case 'A': path(n - 1); break;
    case 'B': path(n - 1); a[n - 2][n - 1] = -2; break;  // last simple short
    case 'C': path(n - 1); a[n - 1][n - 2] = -2; break;  // last simple long
    case 'D': path(n - 2); bond(n - 3, n - 1); break;
    case 'E': path(n - 2); bond(2, n - 1); break;
    case 'F': path(3); a[1][2] = -2; break;
    case 'G': a[0][1] = -1; a[1][0] = -3; break;
    }
    return a;
}

Int positive_root_count(CartanType t) {
    check_rank(t);
    Int n = t.rank;
    switch (t.letter) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;  // G2
    }
}

BigInt weyl_group_order(CartanType t) {
    check_rank(t);
    int n = t.rank;
    switch (t.letter) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return factorial(n) << n;
    case 'D': return factorial(n) << (n - 1);
    case 'E': return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
    case 'F': return 1152;
    default: return 12;  // G2
    }
}

RootDatum generate_root_system(const Matrix& a) {
    int n = static_cast<int>(a.size());
    if (!valid_cartan_shape(a)) throw input_error("malformed Cartan matrix");
    if (n == 0) return {};

    // Symmetrizer d with (alpha_i, alpha_j) proportional to a[i][j] * d[j]:
    // propagate the ratio d_j / d_i = a[j][i] / a[i][j] over each component.
    std::vector<Int> num(n, 0), den(n, 1);
    for (int s = 0; s < n; ++s) {
        if (num[s] != 0) continue;
        num[s] = 1;
        std::vector<int> bfs{s};
        for (size_t qi = 0; qi < bfs.size(); ++qi) {
            int i = bfs[qi];
            for (int j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0 || num[j] != 0) continue;
                Int nu = num[i] * a[j][i], de = den[i] * a[i][j];
                if (de < 0) {
                    de = -de;
                    nu = -nu;
                }
                Int g = std::gcd(nu, de);
                num[j] = nu / g;
                den[j] = de / g;
                bfs.push_back(j);
            }
        }
    }
    Int lcm = 1;
    for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, den[i]);
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = num[i] * (lcm / den[i]);
    Int g = 0;
    for (Int x : d) g = std::gcd(g, x);
    for (Int& x : d) x /= g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i][j] * d[j] != a[j][i] * d[i])
                throw theorem_error("Cartan matrix is not symmetrizable");

    auto norm_of = [&](const Vec& x) {
        Int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += x[i] * a[i][j] * d[j] * x[j];
        return s;
    };

    std::set<Vec> seen;
    std::vector<Vec> queue_;
    for (int i = 0; i < n; ++i) {
        Vec e = unit_vec(n, i);
        seen.insert(e);
        queue_.push_back(e);
    }
    const size_t budget = 4096;
    for (size_t qi = 0; qi < queue_.size(); ++qi) {
        Vec x = queue_[qi];
        for (int j = 0; j < n; ++j) {
            Int c = 0;
            for (int i = 0; i < n; ++i) c += x[i] * a[i][j];
            if (c == 0) continue;
            Vec y = x;
            y[j] -= c;
            if (!all_nonneg(y) || is_zero(y)) continue;
            if (seen.insert(y).second) {
                if (seen.size() > budget) throw theorem_error("root closure exceeds the finite-type budget");
                queue_.push_back(y);
            }
        }
    }

    RootDatum out;
    out.positive.assign(seen.begin(), seen.end());
    out.norm.reserve(out.positive.size());
    for (const auto& x : out.positive) out.norm.push_back(norm_of(x));
    out.min_norm = *std::min_element(out.norm.begin(), out.norm.end());
    out.max_norm = *std::max_element(out.norm.begin(), out.norm.end());
    return out;
}

std::optional<CartanType> classify_cartan(const Matrix& a) {
    int n = static_cast<int>(a.size());
    if (n == 0 || !valid_cartan_shape(a)) return std::nullopt;

    std::vector<std::vector<int>> adj(n);
    int doubles = 0, triples = 0, heavy_x = -1, heavy_y = -1;
    int edge_count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a[i][j] == 0) continue;
            Int prod = a[i][j] * a[j][i];
            if (prod >= 4) return std::nullopt;
            ++edge_count;
            adj[i].push_back(j);
            adj[j].push_back(i);
            if (prod == 2) {
                ++doubles;
                heavy_x = i;
                heavy_y = j;
            } else if (prod == 3) {
                ++triples;
                heavy_x = i;
                heavy_y = j;
            }
        }

    std::vector<char> seen(n, 0);
    std::vector<int> bfs{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < bfs.size(); ++qi)
        for (int j : adj[bfs[qi]])
            if (!seen[j]) {
                seen[j] = 1;
                bfs.push_back(j);
            }
    if (static_cast<int>(bfs.size()) != n) return std::nullopt;
    if (edge_count != n - 1) return std::nullopt;  // a cycle is affine, not finite

    if (triples > 0) {
        if (n == 2 && triples == 1 && doubles == 0) return CartanType{'G', 2};
        return std::nullopt;
    }
    if (doubles == 0) return tree_shape(adj);
    if (doubles > 1) return std::nullopt;

    for (int i = 0; i < n; ++i)
        if (adj[i].size() > 2) return std::nullopt;
    int x = heavy_x, y = heavy_y;
    if (a[x][y] != -2) std::swap(x, y);  // a[x][y] == -2 marks alpha_y as the short simple
    if (n == 2) return CartanType{'B', 2};
    if (adj[y].size() == 1) return CartanType{'B', n};
    if (adj[x].size() == 1) return CartanType{'C', n};
    if (n == 4) return CartanType{'F', 4};  // interior double bond on a path of four
    return std::nullopt;
}

std::optional<CartanType> diagram_type(const Quiver& q, const std::vector<int>& component) {
    int m = static_cast<int>(component.size());
    if (m == 0) return std::nullopt;
    std::vector<std::vector<int>> adj(m);
    int edge_count = 0;
    for (int a = 0; a < m; ++a) {
        if (q.loops[component[a]] != 0) return std::nullopt;
        for (int b = a + 1; b < m; ++b) {
            Int mult = q.edges[component[a]][component[b]];
            if (mult == 0) continue;
            if (mult > 1) return std::nullopt;
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++edge_count;
        }
    }
    std::vector<char> seen(m, 0);
    std::vector<int> bfs{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < bfs.size(); ++qi)
        for (int j : adj[bfs[qi]])
            if (!seen[j]) {
                seen[j] = 1;
                bfs.push_back(j);
            }
    if (static_cast<int>(bfs.size()) != m || edge_count != m - 1) return std::nullopt;
    return tree_shape(adj);
}

bool is_dynkin_type(const Quiver& q) {
    for (const auto& comp : graph_components(q))
        if (!diagram_type(q, comp)) return false;
    return true;
}

bool is_affine_type(const Quiver& q) {
    if (q.n == 0) return false;
    if (q.n == 1) return q.loops[0] == 1;
    for (Int l : q.loops)
        if (l != 0) return false;
    if (!support_connected(q, Vec(q.n, 1))) return false;
    Matrix c = tits_matrix(q);
    if (det_int(c) != 0) return false;
    if (!rank_deficient_kernel(c)) return false;
    std::vector<int> keep;
    for (int r = 0; r < q.n; ++r) {
        keep.clear();
        for (int i = 0; i < q.n; ++i)
            if (i != r) keep.push_back(i);
        if (!is_dynkin_type(induced_subquiver(q, keep))) return false;
    }
    return true;
}

Vec affine_delta(const Quiver& q) {
    if (!is_affine_type(q)) throw input_error("quiver is not of affine type");
    if (q.n == 1) return Vec{1};
    Vec d = *rank_deficient_kernel(tits_matrix(q));
    Int g = content(d);
    for (Int& x : d) x /= g;
    Int lead = 0;
    for (Int x : d)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead < 0)
        for (Int& x : d) x = -x;
    for (Int x : d)
        if (x <= 0) throw theorem_error("affine radical vector is not positive");
    return d;
}

}  // namespace nwg
