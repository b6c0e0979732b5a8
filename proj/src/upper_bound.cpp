#include "dl/dlgraph.hpp"

namespace dl {

Path upper_bound_path(const DLVertex& v, const DLVertex& w, const GraphParams& params) {
  require_valid(v, params);
  require_valid(w, params);
  const int d = params.d();

  // Compensating tree: smallest height change (always <= 0).
  int k = 0;
  for (int i = 1; i < d; ++i) {
    if (w[i].height - v[i].height < w[k].height - v[k].height) k = i;
  }

  Path path{v, {}};
  DLVertex cur = v;
  auto step = [&](const Move& m) {
    path.moves.push_back(m);
    cur = apply(cur, m, params);
  };
  // Ascent label in T_k: back towards v_k while below it, 0 otherwise.
  auto compensating_label = [&] {
    const TreeVertex& x = cur[k];
    return x.height < v[k].height ? v[k].branch.at(x.height) : 0;
  };

  for (int i = 0; i < d; ++i) {
    if (i == k) continue;
    const TreeVertex meet = gca(cur[i], w[i]);
    while (cur[i].height > meet.height) step({k, compensating_label(), i});
    while (cur[i].height < w[i].height) step({i, w[i].branch.at(cur[i].height), k});
  }

  // cur[k] now sits at height h_k(w) on the ray from v_k to the
  // distinguished end; one other tree absorbs the final T_k excursion.
  if (cur[k] != w[k]) {
    const int m = (k == 0) ? 1 : 0;
    const TreeVertex meet = gca(cur[k], w[k]);
    while (cur[k].height > meet.height) step({m, 0, k});
    while (cur[k].height < w[k].height) step({k, w[k].branch.at(cur[k].height), m});
  }
  return path;
}

}  // namespace dl
