#include "nwg/roots.hpp"

#include <algorithm>

#ifdef NWG_HAVE_OPENMP
#include <omp.h>
#endif

namespace nwg {

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::real: return "real";
    case RootKind::isotropic: return "isotropic";
    case RootKind::nonisotropic: return "nonisotropic";
  }
  return "?";
}

Vec reflect(const Quiver& q, const Vec& a, int i) {
  if (!q.loop_free(i)) throw contract_error("reflect: vertex carries a loop");
  Vec b = a;
  b[i] -= pairing_with_simple(q, a, i);
  return b;
}

std::optional<RootKind> classify_root(const Quiver& q, const Vec& a) {
  if ((int)a.size() != q.n) throw contract_error("classify_root: dimension mismatch");
  if (is_zero(a)) return std::nullopt;
  Vec x = a;
  if (all_nonpos(x)) x = negate(x);
  if (!all_nonneg(x)) return std::nullopt;  // mixed signs
  // Descent: reflecting at the smallest improving loop-free vertex strictly
  // decreases the height, so this terminates.
  for (;;) {
    int pick = -1;
    for (int i = 0; i < q.n; ++i)
      if (q.loop_free(i) && x[i] > 0 && pairing_with_simple(q, x, i) > 0) {
        pick = i;
        break;
      }
    if (pick < 0) {
      // Fundamental region candidate; a root iff the support is connected.
      if (!support_connected(q, x)) return std::nullopt;
      Int norm = tits_form(q, x, x);
      if (norm > 0) throw theorem_error("classify_root: positive norm in the fundamental region");
      return norm == 0 ? RootKind::isotropic : RootKind::nonisotropic;
    }
    bool simple = true;
    for (int j = 0; j < q.n && simple; ++j) simple = (x[j] == (j == pick ? 1 : 0));
    if (simple) return RootKind::real;
    x = reflect(q, x, pick);
    if (!all_nonneg(x)) return std::nullopt;
  }
}

bool is_primitive_root(const Quiver& q, const Vec& a) {
  if (!classify_root(q, a)) return false;
  Int g = content(a);
  for (Int k = 2; k <= g; ++k) {
    if (g % k != 0) continue;
    Vec b(a.size());
    for (size_t i = 0; i < a.size(); ++i) b[i] = a[i] / k;
    if (classify_root(q, b)) return false;
  }
  return true;
}

size_t Box::size() const {
  const size_t limit = 50'000'000;
  size_t s = 1;
  for (Int b : bound) {
    if (b < 0) return 0;
    size_t f = (size_t)b + 1;
    if (s > limit / f) throw input_error("scan box exceeds 5e7 points; reduce the dimension vector");
    s *= f;
  }
  return s;
}

Vec Box::at(size_t index) const {
  Vec x(bound.size(), 0);
  for (size_t i = bound.size(); i-- > 0;) {
    size_t f = (size_t)bound[i] + 1;
    x[i] = (Int)(index % f);
    index /= f;
  }
  return x;
}

std::vector<ClassifiedRoot> positive_roots_leq_serial(const Quiver& q, const Vec& bound) {
  if ((int)bound.size() != q.n) throw contract_error("positive_roots_leq: dimension mismatch");
  std::vector<ClassifiedRoot> out;
  if (!all_nonneg(bound)) return out;
  Box box{bound};
  size_t total = box.size();
  for (size_t idx = 1; idx < total; ++idx) {
    Vec x = box.at(idx);
    if (auto k = classify_root(q, x)) out.push_back({std::move(x), *k});
  }
  return out;
}

std::vector<ClassifiedRoot> positive_roots_leq(const Quiver& q, const Vec& bound) {
#ifdef NWG_HAVE_OPENMP
  if ((int)bound.size() != q.n) throw contract_error("positive_roots_leq: dimension mismatch");
  std::vector<ClassifiedRoot> out;
  if (!all_nonneg(bound)) return out;
  Box box{bound};
  size_t total = box.size();
  if (total < 4096) return positive_roots_leq_serial(q, bound);
  int nt = omp_get_max_threads();
  std::vector<std::vector<ClassifiedRoot>> parts(nt);
  // Static contiguous chunks in index order; concatenation preserves the
  // lexicographic order, so the result matches the serial kernel exactly.
#pragma omp parallel num_threads(nt)
  {
    int t = omp_get_thread_num();
    size_t lo = 1 + (total - 1) * (size_t)t / nt;
    size_t hi = 1 + (total - 1) * (size_t)(t + 1) / nt;
    auto& mine = parts[t];
    for (size_t idx = lo; idx < hi; ++idx) {
      Vec x = box.at(idx);
      if (auto k = classify_root(q, x)) mine.push_back({std::move(x), *k});
    }
  }
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
#else
  return positive_roots_leq_serial(q, bound);
#endif
}

FramedSetting dominance_reduce(const FramedSetting& fs, ReductionTrace* trace) {
  fs.validate();
  Quiver qx = extended_quiver(fs);
  Vec t = extended_dim(fs);
  if (!classify_root(qx, t))
    throw empty_variety_error("v + alpha_inf is not a root of the framed quiver");
  ReductionTrace tr;
  tr.v_before = fs.v;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < fs.q.n; ++i)
      if (fs.q.loop_free(i) && pairing_with_simple(qx, t, i) > 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    t = reflect(qx, t, pick);
    tr.word.push_back(pick);
  }
  FramedSetting out = fs;
  out.v = restrict_to_base(t);
  tr.v_after = out.v;
  if (!all_nonneg(out.v))
    throw theorem_error("dominance_reduce: reduced dimension vector has a negative entry");
  if (trace) *trace = std::move(tr);
  return out;
}

}  // namespace nwg
