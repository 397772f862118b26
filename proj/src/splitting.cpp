#include "hv/splitting.hpp"

#include <algorithm>
#include <functional>

#include "hv/vmrt.hpp"

namespace hv {

std::vector<int> splitting_residuals(const SplittingInput& in, const std::vector<int>& a, const std::vector<int>& b) {
  int dv = in.dim_v, dw = in.dim_w;
  // Q0 = Sym^2 V_0 (x) W_0.
  int e0 = 2 * a[0] + b[0] - 2;
  // V_0 + V_0 o V_0^(1) (x) W_0 + Sym^2 V_0 (x) W_0^(1).
  int d1 = a[0];
  for (int i = 1; i < dv; ++i) d1 += a[0] + a[i] + b[0];
  for (int j = 1; j < dw; ++j) d1 += 2 * a[0] + b[j];
  // V_0^(1) + Sym^2 V_0^(1) (x) W_0 + V_0 o V_0^(1) (x) W_0^(1).
  int d2 = 0;
  for (int i = 1; i < dv; ++i) d2 += a[i];
  for (int i = 1; i < dv; ++i)
    for (int k = i; k < dv; ++k) d2 += a[i] + a[k] + b[0];
  for (int i = 1; i < dv; ++i)
    for (int j = 1; j < dw; ++j) d2 += a[0] + a[i] + b[j];
  // Sym^2 V_0^(1) (x) W_0^(1).
  int d3 = 0;
  for (int i = 1; i < dv; ++i)
    for (int k = i; k < dv; ++k)
      for (int j = 1; j < dw; ++j) d3 += a[i] + a[k] + b[j];
  return {e0, d1 - in.p, d2, d3 + in.s};
}

namespace {

std::string splitting_string(const std::vector<int>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += "+";
    out += d[i] == 0 ? std::string("O") : "O(" + std::to_string(d[i]) + ")";
  }
  return out;
}

}  // namespace

SplittingSolution splitting_solver(const SplittingInput& in, int bound) {
  int dv = in.dim_v, dw = in.dim_w;
  SplittingSolution sol;
  std::vector<int> a(dv), b(dw);
  // Summands of V/V_0 and W/W_0 are unordered, so only non-increasing tuples are enumerated.
  std::function<void(int)> rec = [&](int pos) {
    if (pos == dv + dw) {
      for (int i = 1; i < dv; ++i)
        if (a[i] > 0) return;
      for (int i = 1; i < dv; ++i)
        for (int k = i; k < dv; ++k)
          for (int j = 1; j < dw; ++j)
            if (a[i] + a[k] + b[j] != -1) return;
      for (int e : splitting_residuals(in, a, b))
        if (e != 0) return;
      if (sol.solutions++ == 0) {
        sol.a = a;
        sol.b = b;
      }
      return;
    }
    int& x = pos < dv ? a[pos] : b[pos - dv];
    int hi = bound;
    if (pos >= 2 && pos < dv) hi = a[pos - 1];
    if (pos >= dv + 2) hi = b[pos - dv - 1];
    for (int v = -bound; v <= hi; ++v) {
      x = v;
      rec(pos + 1);
    }
  };
  rec(0);
  if (sol.solutions == 0) throw Error("NO_SOLUTION", "no integer degrees satisfy the splitting equations");
  if (sol.solutions > 1) throw Error("NON_UNIQUE", std::to_string(sol.solutions) + " solutions");
  std::vector<int> v = sol.a, w = sol.b;
  std::sort(v.rbegin(), v.rend());
  std::sort(w.rbegin(), w.rend());
  sol.v_splitting = splitting_string(v);
  sol.w_splitting = splitting_string(w);
  return sol;
}

SplittingSolution splitting_solver(const CaseData& c) {
  auto e = exact_sequence_dims(c);
  SplittingInput in;
  in.dim_v = c.hc.dim_v;
  in.dim_w = c.hc.dim_w;
  in.p = static_cast<int>(e.p);
  in.r = static_cast<int>(e.r);
  in.s = static_cast<int>(e.s);
  return splitting_solver(in);
}

}  // namespace hv
