#include <sstream>

#include "dl/dlgraph.hpp"
#include "scanner.hpp"

namespace dl {

void require_valid(const Move& m, const GraphParams& params) {
  const int d = params.d();
  if (m.up_tree < 0 || m.up_tree >= d || m.down_tree < 0 || m.down_tree >= d) {
    throw Error("move " + to_word({m}) + " names a tree outside [0, " + std::to_string(d) + ")");
  }
  if (m.up_tree == m.down_tree) throw Error("move " + to_word({m}) + " ascends and descends in one tree");
  if (m.up_label < 0 || m.up_label >= params.q(m.up_tree)) {
    throw Error("move " + to_word({m}) + " has a label outside [0, q)");
  }
}

DLVertex apply(const DLVertex& v, const Move& m, const GraphParams& params) {
  require_valid(m, params);
  DLVertex w = v;
  w[m.up_tree] = successor(v[m.up_tree], m.up_label, params.q(m.up_tree));
  w[m.down_tree] = predecessor(v[m.down_tree]);
  return w;
}

std::optional<Move> move_between(const DLVertex& v, const DLVertex& w) {
  if (v.d() != w.d()) return std::nullopt;
  std::optional<Move> m = Move{-1, 0, -1};
  for (int i = 0; i < v.d(); ++i) {
    if (v[i] == w[i]) continue;
    if (w[i].height == v[i].height + 1 && predecessor(w[i]) == v[i]) {
      if (m->up_tree != -1) return std::nullopt;
      m->up_tree = i;
      m->up_label = w[i].branch.at(v[i].height);
    } else if (w[i].height == v[i].height - 1 && predecessor(v[i]) == w[i]) {
      if (m->down_tree != -1) return std::nullopt;
      m->down_tree = i;
    } else {
      return std::nullopt;
    }
  }
  if (m->up_tree == -1 || m->down_tree == -1) return std::nullopt;
  return m;
}

std::vector<Move> all_moves(const GraphParams& params) {
  std::vector<Move> result;
  for (int i = 0; i < params.d(); ++i) {
    for (Label a = 0; a < params.q(i); ++a) {
      for (int j = 0; j < params.d(); ++j) {
        if (i != j) result.push_back({i, a, j});
      }
    }
  }
  return result;
}

void require_valid(const Path& p, const GraphParams& params) {
  require_valid(p.base, params);
  for (const auto& m : p.moves) require_valid(m, params);
}

std::vector<DLVertex> vertices(const Path& p, const GraphParams& params) {
  std::vector<DLVertex> result;
  result.reserve(p.moves.size() + 1);
  result.push_back(p.base);
  for (const auto& m : p.moves) result.push_back(apply(result.back(), m, params));
  return result;
}

DLVertex endpoint(const Path& p, const GraphParams& params) {
  DLVertex v = p.base;
  for (const auto& m : p.moves) v = apply(v, m, params);
  return v;
}

Path path_through(const std::vector<DLVertex>& vs) {
  if (vs.empty()) throw Error("path needs at least one vertex");
  Path p{vs.front(), {}};
  for (std::size_t k = 1; k < vs.size(); ++k) {
    auto m = move_between(vs[k - 1], vs[k]);
    if (!m) throw Error("vertices " + std::to_string(k - 1) + " and " + std::to_string(k) + " are not adjacent");
    p.moves.push_back(*m);
  }
  return p;
}

std::string to_word(const std::vector<Move>& moves) {
  std::ostringstream out;
  bool first = true;
  for (const auto& m : moves) {
    if (!first) out << ' ';
    first = false;
    out << m.up_tree << '(' << m.up_label << ")-" << m.down_tree;
  }
  return out.str();
}

std::vector<Move> parse_word(std::string_view text, const GraphParams& params) {
  Scanner in(text, "edge word");
  std::vector<Move> moves;
  while (!in.at_end()) {
    Move m;
    m.up_tree = static_cast<int>(in.integer());
    in.expect('(');
    m.up_label = static_cast<Label>(in.integer());
    in.expect(')');
    in.expect('-');
    m.down_tree = static_cast<int>(in.integer());
    require_valid(m, params);
    moves.push_back(m);
  }
  return moves;
}

}  // namespace dl
