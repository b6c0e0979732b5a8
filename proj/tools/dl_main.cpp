// Command-line front end: one subcommand per operation, JSON on stdout.
//
// Exit codes: 0 success, 1 a check failed (or a computation hit a limit),
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dl/boundary2.hpp"
#include "dl/boundary_d.hpp"
#include "dl/io.hpp"
#include "dl/lamplighter.hpp"
#include "dl/paths.hpp"
#include "dl/verify.hpp"

namespace {

using dl::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs a parser for one flag so that its errors name the flag.
template <typename F>
auto from_flag(const std::string& flag, F&& parse) {
  try {
    return parse();
  } catch (const dl::Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

dl::GraphParams graph_params(int d, int q) {
  if (d < 2) throw UsageError("--d: need at least two trees, got " + std::to_string(d));
  if (q < 2) throw UsageError("--q: branching must be at least 2, got " + std::to_string(q));
  return dl::GraphParams(d, q);
}

int check_q(int q) {
  if (q < 2) throw UsageError("--q: branching must be at least 2, got " + std::to_string(q));
  return q;
}

// A JSON argument is either inline ("{...}") or a path to a file.
Json json_argument(const std::string& flag, const std::string& value) {
  return from_flag(flag, [&] {
    const auto start = value.find_first_not_of(" \t\n");
    if (start != std::string::npos && (value[start] == '{' || value[start] == '[')) return dl::parse_json(value, "inline JSON");
    std::ifstream in(value);
    if (!in) throw dl::Error("cannot read file '" + value + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return dl::parse_json(buf.str(), value);
  });
}

void check_epsilon(double eps) {
  // Basis neighbourhoods do not depend on it inside (0, 1).
  if (!(eps > 0 && eps < 1)) throw UsageError("--epsilon: must lie strictly between 0 and 1");
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

struct Args {
  int d = 2;
  int q = 2;
  int radius = 3;
  int cap = dl::kGeodesicCap;
  std::string format = "json";
  std::string center = "o";
  std::string from = "o";
  std::string to = "o";
  std::string path;
  std::string word;
  std::string g;
  std::string h;
  std::string x;
  std::string y;
  int k = 0;
  int n = 15;
  double epsilon = 0.5;
  std::string kind;
  std::string gamma;
  std::string gamma2;
  std::string suite = "all";
  std::string seed;
  std::string scale = "desk";
  std::size_t limit = 0;
};

int cmd_ball(const Args& a) {
  const auto params = graph_params(a.d, a.q);
  if (a.radius < 0) throw UsageError("--radius: must be nonnegative");
  const auto center = from_flag("--center", [&] { return dl::parse_dl_vertex(a.center, params); });
  const dl::Ball b = dl::ball(center, a.radius, params);
  if (a.format == "dot") {
    std::cout << dl::to_dot(b, params);
    return 0;
  }
  Json vertices = Json::array();
  for (const auto& v : b.vertices) vertices.push_back({{"vertex", dl::to_string(v)}, {"distance", b.distance.at(v)}});
  emit({{"d", a.d}, {"q", a.q}, {"center", dl::to_string(center)}, {"radius", a.radius}, {"size", b.size()},
        {"sphere_sizes", b.sphere_sizes()}, {"vertices", vertices}});
  return 0;
}

std::optional<int> distance(const dl::DLVertex& v, const dl::DLVertex& w, const dl::GraphParams& params, int cap) {
  return params.d() == 2 ? dl::bfs_distance(v, w, params, cap) : dl::search_distance(v, w, params, cap);
}

int cmd_dist(const Args& a) {
  const auto params = graph_params(a.d, a.q);
  const auto v = from_flag("--from", [&] { return dl::parse_dl_vertex(a.from, params); });
  const auto w = from_flag("--to", [&] { return dl::parse_dl_vertex(a.to, params); });
  const auto dist = distance(v, w, params, a.cap);
  Json out{{"from", dl::to_string(v)},
           {"to", dl::to_string(w)},
           {"distance", dist ? Json(*dist) : Json(nullptr)},
           {"lower_bound", dl::projection_lower_bound(v, w)},
           {"upper_bound", dl::projection_upper_bound(v, w)}};
  if (!dist) out["error"] = "distance exceeds --cap " + std::to_string(a.cap);
  emit(out);
  return dist ? 0 : 1;
}

int cmd_geodesics(const Args& a) {
  const auto params = graph_params(a.d, a.q);
  const auto v = from_flag("--from", [&] { return dl::parse_dl_vertex(a.from, params); });
  const auto w = from_flag("--to", [&] { return dl::parse_dl_vertex(a.to, params); });
  const auto all = dl::enumerate_geodesics(v, w, params, a.cap);
  Json list = Json::array();
  for (std::size_t i = 0; i < all.size() && (a.limit == 0 || i < a.limit); ++i) {
    list.push_back({{"word", dl::to_word(all[i].moves)}, {"turns", dl::turns_per_tree(all[i])}});
  }
  emit({{"from", dl::to_string(v)},
        {"to", dl::to_string(w)},
        {"distance", all.empty() ? 0 : all.front().length()},
        {"count", all.size()},
        {"geodesics", list}});
  return 0;
}

const char* step_name(dl::RewriteStep::Kind k) {
  switch (k) {
    case dl::RewriteStep::Kind::kCommute: return "commute";
    case dl::RewriteStep::Kind::kShorten: return "shorten";
    case dl::RewriteStep::Kind::kCancel: return "cancel";
  }
  return "?";
}

int cmd_rewrite(const Args& a) {
  const auto params = graph_params(a.d, a.q);
  dl::Path p;
  p.base = from_flag("--from", [&] { return dl::parse_dl_vertex(a.from, params); });
  p.moves = from_flag("--path", [&] { return dl::parse_word(a.path, params); });
  const auto result = dl::shorten_pass(p, params);
  const auto before = dl::endpoint(p, params);
  const auto after = dl::endpoint(result.path, params);
  Json steps = Json::array();
  for (const auto& s : result.steps) steps.push_back({{"kind", step_name(s.kind)}, {"index", s.index}});
  const bool preserved = before == after;
  emit({{"input", dl::to_word(p.moves)},
        {"normalized", dl::to_word(result.path.moves)},
        {"length_before", p.length()},
        {"length_after", result.path.length()},
        {"reductions", result.reductions},
        {"steps", steps},
        {"endpoint", dl::to_string(after)},
        {"endpoint_preserved", preserved}});
  return preserved ? 0 : 1;
}

dl::LampStand word_flag(const std::string& flag, const std::string& word, int q) {
  return from_flag(flag, [&] { return dl::eval_word(word, q); });
}

int cmd_eval(const Args& a) {
  emit(dl::to_json(word_flag("--word", a.word, check_q(a.q))));
  return 0;
}

int cmd_mul(const Args& a) {
  const int q = check_q(a.q);
  emit(dl::to_json(dl::multiply(word_flag("--g", a.g, q), word_flag("--h", a.h, q), q)));
  return 0;
}

int cmd_order(const Args& a) {
  const int q = check_q(a.q);
  const auto g = word_flag("--g", a.g, q);
  const auto ord = dl::order(g, q);
  emit({{"element", dl::to_json(g)}, {"exp_t", dl::exp_t(g)}, {"order", ord ? Json(*ord) : Json(nullptr)}});
  return 0;
}

dl::BoundaryPoint point_flag(const std::string& flag, const std::string& value, int q) {
  const Json j = json_argument(flag, value);
  return from_flag(flag, [&] { return dl::boundary_point_from_json(j, q); });
}

int cmd_classify(const Args& a) {
  const int q = check_q(a.q);
  emit(dl::to_json(dl::classify(point_flag("--x", a.x, q))));
  return 0;
}

int cmd_act(const Args& a) {
  const int q = check_q(a.q);
  emit(dl::to_json(dl::act(word_flag("--g", a.g, q), point_flag("--x", a.x, q), q)));
  return 0;
}

dl::LampStand hyperbolic_flag(const std::string& word, int q) {
  const auto g = word_flag("--g", word, q);
  if (dl::exp_t(g) == 0) throw UsageError("--g: element has exp_t = 0 and no attracting fixed point");
  return g;
}

int cmd_ginf(const Args& a) {
  const int q = check_q(a.q);
  emit(dl::to_json(dl::power_infinity(hyperbolic_flag(a.g, q), q)));
  return 0;
}

int cmd_dynamics(const Args& a) {
  const int q = check_q(a.q);
  const auto g = hyperbolic_flag(a.g, q);
  const auto x = point_flag("--x", a.x, q);
  if (a.n < 1) throw UsageError("--n: must be positive");
  const auto attractor = dl::power_infinity(g, q);
  if (x.side != attractor.side) {
    throw UsageError("--x: point lies on side " + std::to_string(x.side) + ", the attractor on side " +
                     std::to_string(attractor.side));
  }
  const auto report = dl::dynamics_report(g, x, a.n, q);
  Json steps = Json::array();
  dl::BoundaryPoint current = x;
  for (int n = 1; n <= a.n; ++n) {
    current = dl::act(g, current, q);
    const auto diff = report.first_disagreement[static_cast<std::size_t>(n - 1)];
    steps.push_back({{"n", n}, {"point", dl::to_json(current)}, {"first_disagreement", diff ? Json(*diff) : Json(nullptr)}});
  }
  emit({{"attractor", dl::to_json(report.attractor)}, {"steps", steps}});
  return 0;
}

int witness_nonhausdorff(const Args& a) {
  check_epsilon(a.epsilon);
  const int q = check_q(a.q);
  const auto x = point_flag("--x", a.x, q);
  const auto y = point_flag("--y", a.y, q);
  if (a.k < 0) throw UsageError("--k: must be nonnegative");
  const auto cx = dl::classify(x);
  if (x == y || x.side != y.side || cx.n != 0 || dl::classify(y).n != 0) {
    throw UsageError("--x/--y: need two distinct points of the same class C_0");
  }
  const auto z = dl::non_hausdorff_witness(x, y, a.k, q);
  const bool in_x = dl::basis_membership(z, x, a.k);
  const bool in_y = dl::basis_membership(z, y, a.k);
  emit({{"witness", dl::to_json(z)}, {"class", dl::to_json(dl::classify(z))}, {"k", a.k},
        {"in_neighbourhood_of_x", in_x}, {"in_neighbourhood_of_y", in_y}});
  return in_x && in_y ? 0 : 1;
}

int witness_t1(const Args& a) {
  check_epsilon(a.epsilon);
  const int q = check_q(a.q);
  const auto x = point_flag("--x", a.x, q);
  const auto y = point_flag("--y", a.y, q);
  if (x == y) throw UsageError("--x/--y: points must differ");
  const auto w = dl::separation_witness(x, y);
  const bool separated = !dl::basis_membership(y, x, w.k) && !dl::basis_membership(x, y, w.k);
  Json out{{"k", w.k}, {"separated", separated}, {"clopen", nullptr}};
  bool ok = separated;
  if (w.clopen) {
    const bool clopen_ok = dl::clopen_separates(*w.clopen, x, y);
    out["clopen"] = dl::to_json(*w.clopen);
    out["clopen_separates"] = clopen_ok;
    ok = ok && clopen_ok;
  }
  emit(out);
  return ok ? 0 : 1;
}

int witness_indiscrete(const Args& a) {
  check_epsilon(a.epsilon);
  const auto params = graph_params(a.d, a.q);
  if (params.d() < 3) throw UsageError("--d: indiscrete witnesses need at least three trees");
  const Json jg = json_argument("--gamma", a.gamma);
  const Json jg2 = json_argument("--gamma2", a.gamma2);
  const auto gamma = from_flag("--gamma", [&] { return dl::ray_from_json(jg, params); });
  const auto gamma2 = from_flag("--gamma2", [&] { return dl::ray_from_json(jg2, params); });
  const auto w = from_flag("--n", [&] { return dl::indiscrete_witness(gamma, gamma2, a.n, params); });
  const int cap = std::min(a.cap, 12);
  const bool geodesic = dl::truncations_geodesic(w.tau, cap, params) && dl::truncations_geodesic(w.tau2, cap, params);
  const bool ok = w.shared_prefix >= w.claimed_prefix && w.certificate.asymptotic && w.certificate2.asymptotic && geodesic;
  emit({{"gamma", dl::to_json(w.gamma)},
        {"gamma2", dl::to_json(w.gamma2)},
        {"tau_n", dl::to_json(w.tau)},
        {"tau2_n", dl::to_json(w.tau2)},
        {"prefix_len", w.shared_prefix},
        {"claimed_prefix", w.claimed_prefix},
        {"geodesic_through", cap},
        {"geodesic", geodesic},
        {"certificates", Json::array({dl::to_json(w.certificate), dl::to_json(w.certificate2)})}});
  return ok ? 0 : 1;
}

int cmd_witness(const Args& a) {
  if (a.kind == "nonhausdorff") return witness_nonhausdorff(a);
  if (a.kind == "t1") return witness_t1(a);
  if (a.kind == "indiscrete") return witness_indiscrete(a);
  throw UsageError("--kind: expected nonhausdorff, t1 or indiscrete");
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') throw UsageError(source + ": not an unsigned integer: " + text);
  return seed;
}

int cmd_verify(const Args& a) {
  dl::SuiteOptions options;
  if (!a.seed.empty()) {
    options.seed = parse_seed(a.seed, "--seed");
  } else if (const char* env = std::getenv("DL_SEED"); env != nullptr && *env != '\0') {
    options.seed = parse_seed(env, "DL_SEED");
  }
  if (a.scale == "desk") {
    options.scale = dl::Scale::kDesk;
  } else if (a.scale == "smoke") {
    options.scale = dl::Scale::kSmoke;
  } else {
    throw UsageError("--scale: expected desk or smoke");
  }
  const auto reports = from_flag("--suite", [&] { return dl::run_suites(a.suite, options); });
  Json suites = Json::array();
  bool all_passed = true;
  for (const auto& r : reports) {
    // Timings vary run to run; keep the report byte-identical for equal seeds.
    Json j = dl::to_json(r);
    j.erase("seconds");
    suites.push_back(std::move(j));
    all_passed = all_passed && r.passed();
  }
  emit({{"seed", options.seed}, {"scale", a.scale}, {"passed", all_passed}, {"suites", suites}});
  for (const auto& r : reports) {
    std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.name << " (criterion " << r.criterion << "): " << r.cases
              << " cases, " << r.failure_count << " failures, " << r.seconds << " s of " << r.limit_seconds << " s\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diestel-Leader graphs, lamplighter groups and their boundaries"};
  app.require_subcommand(1);
  Args a;

  auto graph = [&](CLI::App* s) {
    s->add_option("--d", a.d, "number of trees")->capture_default_str();
    s->add_option("--q", a.q, "branching number")->capture_default_str();
  };
  auto group = [&](CLI::App* s) { s->add_option("--q", a.q, "lamp states")->capture_default_str(); };

  std::map<CLI::App*, int (*)(const Args&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*handler)(const Args&)) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = handler;
    return s;
  };

  auto* ball = sub("ball", "vertices within a radius, as JSON or DOT", cmd_ball);
  graph(ball);
  ball->add_option("--radius", a.radius)->capture_default_str();
  ball->add_option("--center", a.center, "vertex, 'o' for the origin")->capture_default_str();
  ball->add_option("--format", a.format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  auto* dist = sub("dist", "graph distance between two vertices", cmd_dist);
  graph(dist);
  dist->add_option("--from", a.from)->required();
  dist->add_option("--to", a.to)->required();
  dist->add_option("--cap", a.cap, "give up beyond this distance")->capture_default_str();

  auto* geo = sub("geodesics", "every geodesic between two vertices with per-tree turn counts", cmd_geodesics);
  graph(geo);
  geo->add_option("--from", a.from)->required();
  geo->add_option("--to", a.to)->required();
  geo->add_option("--cap", a.cap)->capture_default_str();
  geo->add_option("--limit", a.limit, "print at most this many (0 = all)")->capture_default_str();

  auto* rewrite = sub("rewrite", "remove retrace patterns from a path", cmd_rewrite);
  graph(rewrite);
  rewrite->add_option("--path", a.path, "word of moves 'i(a)-j ...'")->required();
  rewrite->add_option("--from", a.from, "base vertex")->capture_default_str();

  auto* eval = sub("eval", "evaluate a lamplighter word", cmd_eval);
  group(eval);
  eval->add_option("--word", a.word)->required();

  auto* mul = sub("mul", "product g h", cmd_mul);
  mul->set_help_flag("--help", "print this help and exit");  // frees -h/--h
  group(mul);
  mul->add_option("--g", a.g)->required();
  mul->add_option("--h", a.h)->required();

  auto* order = sub("order", "order of an element", cmd_order);
  group(order);
  order->add_option("--g", a.g)->required();

  auto* classify = sub("classify", "class C_n^i of a boundary point", cmd_classify);
  group(classify);
  classify->add_option("--x", a.x, "boundary point JSON, inline or a file")->required();

  auto* act = sub("act", "image g.x of a boundary point", cmd_act);
  group(act);
  act->add_option("--g", a.g)->required();
  act->add_option("--x", a.x)->required();

  auto* ginf = sub("ginf", "attracting fixed point of g", cmd_ginf);
  group(ginf);
  ginf->add_option("--g", a.g)->required();

  auto* dyn = sub("dynamics", "orbit g^n.x and its convergence to the attractor", cmd_dynamics);
  group(dyn);
  dyn->add_option("--g", a.g)->required();
  dyn->add_option("--x", a.x)->required();
  dyn->add_option("--n", a.n)->capture_default_str();

  auto* witness = sub("witness", "topological witnesses", cmd_witness);
  graph(witness);
  witness->add_option("--kind", a.kind)->required();
  witness->add_option("--x", a.x);
  witness->add_option("--y", a.y);
  witness->add_option("--k", a.k)->capture_default_str();
  witness->add_option("--epsilon", a.epsilon, "accepted for notation, any value in (0, 1)")->capture_default_str();
  witness->add_option("--gamma", a.gamma, "ray descriptor JSON, inline or a file");
  witness->add_option("--gamma2", a.gamma2);
  witness->add_option("--n", a.n)->capture_default_str();
  witness->add_option("--cap", a.cap, "geodesity check length")->capture_default_str();

  auto* verify = sub("verify", "run the property suites", cmd_verify);
  verify->add_option("--suite", a.suite, "'all' or one suite name")->capture_default_str();
  verify->add_option("--seed", a.seed, "defaults to $DL_SEED, then 7");
  verify->add_option("--scale", a.scale, "desk or smoke")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& [s, handler] : handlers) {
      if (s->parsed()) return handler(a);
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
