#include "nwg/quiver.hpp"

namespace nwg {

void Quiver::validate() const {
  if (n < 0) throw input_error("quiver: negative vertex count");
  if ((int)loops.size() != n || (int)edges.size() != n)
    throw input_error("quiver: loops/edges size mismatch");
  for (int i = 0; i < n; ++i) {
    if (loops[i] < 0) throw input_error("quiver: negative loop count");
    if ((int)edges[i].size() != n) throw input_error("quiver: edge matrix not square");
    if (edges[i][i] != 0)
      throw input_error("quiver: diagonal edge entry; loops belong in the loop vector");
    for (int j = 0; j < n; ++j) {
      if (edges[i][j] < 0) throw input_error("quiver: negative edge multiplicity");
      if (edges[i][j] != edges[j][i]) throw input_error("quiver: edge matrix not symmetric");
    }
  }
}

Int tits_form(const Quiver& q, const Vec& a, const Vec& b) {
  Int s = 0;
  for (int i = 0; i < q.n; ++i) {
    s += (2 - 2 * q.loops[i]) * a[i] * b[i];
    for (int j = 0; j < q.n; ++j)
      if (j != i) s -= q.edges[i][j] * a[i] * b[j];
  }
  return s;
}

Int pairing_with_simple(const Quiver& q, const Vec& a, int i) {
  Int s = (2 - 2 * q.loops[i]) * a[i];
  for (int j = 0; j < q.n; ++j)
    if (j != i) s -= q.edges[i][j] * a[j];
  return s;
}

Int p_value(const Quiver& q, const Vec& a) { return 1 - tits_form(q, a, a) / 2; }

bool support_connected(const Quiver& q, const Vec& a) {
  int start = -1;
  for (int i = 0; i < q.n; ++i)
    if (a[i] != 0) {
      start = i;
      break;
    }
  if (start < 0) return false;
  std::vector<char> seen(q.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    ++reached;
    for (int j = 0; j < q.n; ++j)
      if (!seen[j] && a[j] != 0 && q.edges[i][j] > 0) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  int total = 0;
  for (int i = 0; i < q.n; ++i)
    if (a[i] != 0) ++total;
  return reached == total;
}

void FramedSetting::validate() const {
  q.validate();
  if ((int)v.size() != q.n || (int)w.size() != q.n)
    throw input_error("framed setting: v/w size mismatch");
  if (!all_nonneg(v)) throw input_error("framed setting: v has a negative entry");
  if (!all_nonneg(w)) throw input_error("framed setting: w has a negative entry");
}

FramedSetting normalized(const FramedSetting& fs, std::vector<int>* kept) {
  std::vector<int> keep;
  for (int i = 0; i < fs.q.n; ++i)
    if (fs.v[i] != 0) keep.push_back(i);
  if (kept) *kept = keep;
  FramedSetting out;
  out.q = Quiver::make((int)keep.size());
  out.v.resize(keep.size());
  out.w.resize(keep.size());
  for (size_t a = 0; a < keep.size(); ++a) {
    out.q.loops[a] = fs.q.loops[keep[a]];
    out.v[a] = fs.v[keep[a]];
    out.w[a] = fs.w[keep[a]];
    for (size_t b = 0; b < keep.size(); ++b) out.q.edges[a][b] = fs.q.edges[keep[a]][keep[b]];
  }
  return out;
}

Quiver extended_quiver(const FramedSetting& fs) {
  Quiver q = Quiver::make(fs.q.n + 1);
  for (int i = 0; i < fs.q.n; ++i) {
    q.loops[i] = fs.q.loops[i];
    for (int j = 0; j < fs.q.n; ++j) q.edges[i][j] = fs.q.edges[i][j];
    q.edges[i][fs.q.n] = q.edges[fs.q.n][i] = fs.w[i];
  }
  return q;
}

Vec extended_dim(const FramedSetting& fs) {
  Vec t = fs.v;
  t.push_back(1);
  return t;
}

Vec embed(const Vec& x) {
  Vec y = x;
  y.push_back(0);
  return y;
}

Vec restrict_to_base(const Vec& x) { return Vec(x.begin(), x.end() - 1); }

Int nu_pairing(const FramedSetting& fs, const Vec& x) {
  return dot(fs.w, x) - tits_form(fs.q, fs.v, x);
}

bool nu_dominant(const FramedSetting& fs) {
  for (int i = 0; i < fs.q.n; ++i)
    if (fs.q.loop_free(i) && fs.w[i] - pairing_with_simple(fs.q, fs.v, i) < 0) return false;
  return true;
}

}  // namespace nwg
