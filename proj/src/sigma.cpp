#include "nwg/sigma.hpp"

#include <algorithm>
#include <map>

namespace nwg {

bool SigmaSpace::annihilates(const Vec& x) const {
  if (every_root) return true;
  // y = x - x_f * reference has framing coefficient 0; annihilated iff y is a
  // rational multiple of generator (cross products vanish).
  Vec y = sub(x, scale(x.back(), reference));
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t j = i + 1; j < y.size(); ++j)
      if (y[i] * generator[j] != y[j] * generator[i]) return false;
  return true;
}

std::vector<Vec> SigmaSpace::members_leq(const Vec& bound) const {
  std::vector<Vec> out;
  for (auto& cr : positive_roots_leq(q, bound))
    if (annihilates(cr.root)) out.push_back(cr.root);
  return out;
}

SigmaSpace zero_parameter_space(const Quiver& q) {
  SigmaSpace sp;
  sp.q = q;
  sp.every_root = true;
  return sp;
}

SubgenericContext make_subgeneric(const FramedSetting& fs, const Vec& v1) {
  fs.validate();
  if ((int)v1.size() != fs.q.n) throw input_error("v1: size mismatch");
  if (!all_nonneg(v1) || is_zero(v1)) throw input_error("v1 must be a positive vector");
  if (!leq(v1, fs.v)) throw input_error("v1 must be bounded by v");
  auto kind = classify_root(fs.q, v1);
  if (!kind) throw input_error("v1 is not a root");
  if (!is_primitive_root(fs.q, v1))
    throw input_error("v1 must be primitive: no proper integer divisor may be a root");
  SubgenericContext ctx;
  ctx.fs = fs;
  ctx.v1 = v1;
  ctx.v1_kind = *kind;
  ctx.qx = extended_quiver(fs);
  ctx.tilde_v = extended_dim(fs);
  ctx.v1x = embed(v1);
  return ctx;
}

SigmaSpace subgeneric_space(const SubgenericContext& ctx) {
  SigmaSpace sp;
  sp.q = ctx.qx;
  sp.every_root = false;
  sp.reference = ctx.tilde_v;
  sp.generator = ctx.v1x;
  return sp;
}

namespace {

// Best total p-value over decompositions of a vector into one or more family
// members, memoized; nullopt when no decomposition exists.
struct DecompSearch {
  const Quiver& q;
  std::vector<Vec> members;
  std::vector<Int> pval;
  std::map<Vec, std::optional<Int>> memo;

  DecompSearch(const SigmaSpace& sp, const Vec& bound) : q(sp.q), members(sp.members_leq(bound)) {
    pval.reserve(members.size());
    for (auto& m : members) pval.push_back(p_value(q, m));
  }

  std::optional<Int> best(const Vec& y) {
    if (is_zero(y)) return 0;
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    std::optional<Int> r;
    for (size_t i = 0; i < members.size(); ++i) {
      if (!leq(members[i], y)) continue;
      if (auto t = best(sub(y, members[i]))) {
        Int c = pval[i] + *t;
        if (!r || c > *r) r = c;
      }
    }
    memo.emplace(y, r);
    return r;
  }

  // Membership of a family member in Sigma: no split into two or more members
  // reaches total p >= p(x).
  bool member_in_sigma(const Vec& x) {
    Int px = p_value(q, x);
    for (size_t i = 0; i < members.size(); ++i) {
      if (members[i] == x || !leq(members[i], x)) continue;
      if (auto t = best(sub(x, members[i])))
        if (pval[i] + *t >= px) return false;
    }
    return true;
  }
};

}  // namespace

bool in_sigma(const SigmaSpace& space, const Vec& x) {
  if ((int)x.size() != space.q.n) throw contract_error("in_sigma: dimension mismatch");
  if (!all_nonneg(x) || is_zero(x)) return false;
  if (!space.annihilates(x)) return false;
  if (!classify_root(space.q, x)) return false;
  DecompSearch dp(space, x);
  return dp.member_in_sigma(x);
}

bool sigma_multiple(const SubgenericContext& ctx, Int n) {
  if (n < 1) return false;
  // Real: n v1 is a root only for n = 1. Isotropic: n v1 is a root but splits
  // into n singletons with total p = n > 1 = p(n v1) once n >= 2.
  // Non-isotropic: p(k v1) = 1 - k^2 (v1,v1)/2 is strictly superadditive.
  if (ctx.v1_kind == RootKind::nonisotropic) return true;
  return n == 1;
}

bool sigma_complement(const SubgenericContext& ctx, Int n) {
  if (n < 0) return false;
  Vec u = sub(ctx.tilde_v, scale(n, ctx.v1x));
  if (!all_nonneg(u)) return false;
  if (!classify_root(ctx.qx, u)) return false;
  Int pu = p_value(ctx.qx, u);
  // A decomposition of u keeps exactly one part with framing coefficient 1,
  // namely u - k v1 for some k >= 1; the remaining parts are multiples of v1
  // whose best total p-value is closed-form per kind.
  for (Int k = 1;; ++k) {
    Vec uk = sub(u, scale(k, ctx.v1x));
    if (!all_nonneg(uk)) break;
    if (!classify_root(ctx.qx, uk)) continue;
    Int tail;
    switch (ctx.v1_kind) {
      case RootKind::real: tail = 0; break;               // k singleton parts, each p = 0
      case RootKind::isotropic: tail = k; break;          // k singleton parts, each p = 1
      case RootKind::nonisotropic:
      default: tail = p_value(ctx.qx, scale(k, ctx.v1x)); // one part k v1 beats any split
    }
    if (p_value(ctx.qx, uk) + tail >= pu) return false;
  }
  return true;
}

std::vector<CanonicalPart> canonical_decomposition(const SigmaSpace& space, const Vec& x) {
  if ((int)x.size() != space.q.n) throw contract_error("canonical_decomposition: dimension mismatch");
  if (!all_nonneg(x) || is_zero(x)) throw input_error("canonical_decomposition: target must be positive");
  if (!space.annihilates(x)) throw input_error("canonical_decomposition: target is not annihilated");
  DecompSearch dp(space, x);
  std::vector<size_t> sigma_idx;
  for (size_t i = 0; i < dp.members.size(); ++i)
    if (dp.member_in_sigma(dp.members[i])) sigma_idx.push_back(i);

  // First pass: any decomposition of x into Sigma members, parts chosen with
  // non-decreasing member index. Memoized failure on (remainder, start).
  std::map<std::pair<Vec, size_t>, bool> fail;
  std::vector<Vec> parts;
  auto dfs = [&](auto&& self, const Vec& rem, size_t start) -> bool {
    if (is_zero(rem)) return true;
    auto key = std::make_pair(rem, start);
    if (fail.count(key)) return false;
    for (size_t s = start; s < sigma_idx.size(); ++s) {
      const Vec& beta = dp.members[sigma_idx[s]];
      if (!leq(beta, rem)) continue;
      parts.push_back(beta);
      if (self(self, sub(rem, beta), s)) return true;
      parts.pop_back();
    }
    fail[key] = true;
    return false;
  };
  if (!dfs(dfs, x, 0))
    throw empty_variety_error("no decomposition into the annihilated simple family");

  // Merge sub-multisets whose sum is again in Sigma until none remains.
  for (;;) {
    if (parts.size() > 20) throw input_error("canonical_decomposition: too many parts");
    bool merged = false;
    size_t m = parts.size();
    for (size_t mask = 3; mask < ((size_t)1 << m) && !merged; ++mask) {
      if (__builtin_popcountll(mask) < 2) continue;
      Vec s(x.size(), 0);
      for (size_t i = 0; i < m; ++i)
        if (mask >> i & 1) s = add(s, parts[i]);
      if (!classify_root(space.q, s)) continue;
      if (!dp.member_in_sigma(s)) continue;
      std::vector<Vec> next;
      for (size_t i = 0; i < m; ++i)
        if (!(mask >> i & 1)) next.push_back(parts[i]);
      next.push_back(s);
      parts = std::move(next);
      merged = true;
    }
    if (!merged) break;
  }

  std::sort(parts.begin(), parts.end());
  std::vector<CanonicalPart> out;
  for (auto& p : parts) {
    if (!out.empty() && out.back().root == p)
      ++out.back().multiplicity;
    else
      out.push_back({p, 1});
  }
  return out;
}

bool part_admits_resolution(const Quiver& q, const Vec& root) {
  Int g = content(root);
  if (g == 1) return true;
  if (g != 2) return false;
  Vec half(root.size());
  for (size_t i = 0; i < root.size(); ++i) half[i] = root[i] / 2;
  return p_value(q, half) == 2;
}

bool admits_symplectic_resolution(const SigmaSpace& space, const Vec& x) {
  for (auto& part : canonical_decomposition(space, x))
    if (!part_admits_resolution(space.q, part.root)) return false;
  return true;
}

bool affinization_is_affine(const SubgenericContext& ctx) {
  if (!classify_root(ctx.qx, ctx.tilde_v))
    throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");
  bool res = ctx.v1_kind != RootKind::real || nu_pairing(ctx.fs, ctx.v1) >= -1;
  if (!res && nu_dominant(ctx.fs))
    throw theorem_error("affinization_is_affine: dominant parameter yet negative pairing");
  return res;
}

}  // namespace nwg
