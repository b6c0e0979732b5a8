#include "dl/trees.hpp"

#include "scanner.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace dl {

namespace {

Label mod(std::int64_t x, int q) {
  const auto r = static_cast<Label>(x % q);
  return r < 0 ? r + q : r;
}


}  // namespace

Label Branch::at(Height level) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), level,
                             [](const Entry& e, Height l) { return e.first < l; });
  return (it != entries_.end() && it->first == level) ? it->second : 0;
}

void Branch::set(Height level, Label label) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), level,
                             [](const Entry& e, Height l) { return e.first < l; });
  const bool present = it != entries_.end() && it->first == level;
  if (label == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = label;
  } else {
    entries_.insert(it, {level, label});
  }
}

void Branch::truncate(Height level) {
  while (!entries_.empty() && entries_.back().first >= level) entries_.pop_back();
}

Height Branch::first_difference(const Branch& a, const Branch& b, Height limit) {
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    Height level;
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      level = ia->first;  // only a has a nonzero label here
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      level = ib->first;
    } else {
      if (ia->second != ib->second) {
        level = ia->first;
      } else {
        ++ia;
        ++ib;
        continue;
      }
    }
    return std::min(level, limit);
  }
  return limit;
}

bool is_canonical(const TreeVertex& v, int q) {
  for (const auto& [level, label] : v.branch.entries()) {
    if (level >= v.height || label <= 0 || label >= q) return false;
  }
  return true;
}

TreeVertex predecessor(const TreeVertex& v) {
  TreeVertex result = v;
  result.height = v.height - 1;
  result.branch.truncate(result.height);
  return result;
}

TreeVertex successor(const TreeVertex& v, Label alpha, int q) {
  if (alpha < 0 || alpha >= q) {
    throw Error("successor label " + std::to_string(alpha) + " outside [0, " + std::to_string(q) +
                ")");
  }
  TreeVertex result = v;
  result.branch.set(v.height, alpha);
  result.height = v.height + 1;
  return result;
}

TreeVertex gca(const TreeVertex& v, const TreeVertex& w) {
  const Height m = Branch::first_difference(v.branch, w.branch, std::min(v.height, w.height));
  TreeVertex result;
  result.height = m;
  result.branch = v.branch;
  result.branch.truncate(m);
  return result;
}

Height tree_distance(const TreeVertex& v, const TreeVertex& w) {
  const Height m = Branch::first_difference(v.branch, w.branch, std::min(v.height, w.height));
  return (v.height - m) + (w.height - m);
}

bool is_ancestor(const TreeVertex& a, const TreeVertex& b) {
  return a.height <= b.height && Branch::first_difference(a.branch, b.branch, a.height) == a.height;
}

TreeVertex relative_to(const TreeVertex& v, const TreeVertex& w, int q) {
  TreeVertex result;
  result.height = w.height - v.height;
  // Levels where either vertex may carry a nonzero label below w's height.
  std::vector<Height> levels;
  for (const auto& e : v.branch.entries())
    if (e.first < w.height) levels.push_back(e.first);
  for (const auto& e : w.branch.entries()) levels.push_back(e.first);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (Height level : levels) {
    result.branch.set(level - v.height, mod(w.branch.at(level) - v.branch.at(level), q));
  }
  return result;
}

TreeVertex absolute_from(const TreeVertex& v, const TreeVertex& rel, int q) {
  TreeVertex result;
  result.height = rel.height + v.height;
  std::vector<Height> levels;
  for (const auto& e : v.branch.entries())
    if (e.first < result.height) levels.push_back(e.first);
  for (const auto& e : rel.branch.entries()) levels.push_back(e.first + v.height);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (Height level : levels) {
    result.branch.set(level, mod(rel.branch.at(level - v.height) + v.branch.at(level), q));
  }
  return result;
}

std::string to_string(const TreeVertex& v) {
  std::ostringstream out;
  out << '(' << v.height;
  bool first = true;
  for (const auto& [level, label] : v.branch.entries()) {
    out << (first ? "; " : ", ") << level << ':' << label;
    first = false;
  }
  out << ')';
  return out.str();
}

TreeVertex parse_tree_vertex(std::string_view text, int q) {
  Scanner in(text, "tree vertex");
  TreeVertex v;
  in.expect('(');
  v.height = in.integer();
  if (in.consume(';')) {
    bool first = true;
    std::optional<Height> previous;
    while (!in.consume(')')) {
      if (!first) in.expect(',');
      first = false;
      const Height level = in.integer();
      in.expect(':');
      const auto label = in.integer();
      if (previous && level <= *previous) in.fail("levels must be strictly increasing");
      if (level >= v.height) in.fail("level " + std::to_string(level) + " not below height");
      if (label <= 0) in.fail("labels must be nonzero in canonical form");
      if (label >= q) in.fail("label " + std::to_string(label) + " not below q");
      v.branch.set(level, static_cast<Label>(label));
      previous = level;
    }
  } else {
    in.expect(')');
  }
  if (!in.at_end()) in.fail("trailing characters");
  return v;
}

std::size_t hash_value(const TreeVertex& v) {
  std::size_t h = std::hash<Height>{}(v.height);
  for (const auto& [level, label] : v.branch.entries()) {
    h ^= std::hash<Height>{}(level * 31 + label) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dl
