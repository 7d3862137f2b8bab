// wcalc: enumeration, dimensions, closure queries, poset export, and the
// verification suites for stable-piece combinatorics over finite Weyl groups.

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>

#include "wcalc/cache.hpp"
#include "wcalc/checks.hpp"
#include "wcalc/pieces_gg.hpp"
#include "wcalc/pieces_wonderful.hpp"
#include "wcalc/text.hpp"

namespace {

using namespace wcalc;

struct Options {
  std::string g;
  std::string g2;
  std::string triple = "trivial";
  std::string ctriple = "trivial";
  std::string format = "tsv";
  std::string variant = "plus";
  std::string criterion = "3";
  std::string suite = "all";
  std::string index;
  std::string target;
  std::string query;
  std::string cache_dir;
  bool ambient = false;
};

std::string resolved_cache_dir(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("WCALC_CACHE")) return env;
  return {};
}

struct Session {
  std::unique_ptr<WeylGroup> g1, g2_owned;
  const WeylGroup* g2 = nullptr;  // g1.get() unless --g2 was given
  bool product_mode = false;

  explicit Session(const Options& opt) {
    g1 = std::make_unique<WeylGroup>(build_root_system(opt.g));
    if (!opt.g2.empty()) {
      g2_owned = std::make_unique<WeylGroup>(build_root_system(opt.g2));
      g2 = g2_owned.get();
      product_mode = true;
    } else {
      g2 = g1.get();
    }
    std::string dir = resolved_cache_dir(opt);
    if (!dir.empty()) {
      attach_bruhat_cache(*g1, dir);
      if (g2_owned) attach_bruhat_cache(*g2_owned, dir);
    }
  }

  WonderfulContext wonderful(const Options& opt) const {
    return WonderfulContext(*g1, resolve_triple(g1->rs(), g1->rs(), opt.triple));
  }
  PairContext pair(const Options& opt) const {
    return PairContext(*g1, *g2, resolve_triple(g1->rs(), g2->rs(), opt.triple),
                       resolve_triple(g1->rs(), g2->rs(), opt.ctriple));
  }
};

GGVariant parse_variant(const Options& opt) {
  if (opt.variant == "plus") return GGVariant::plus;
  if (opt.variant == "minus") return GGVariant::minus;
  throw Error("unknown variant '" + opt.variant + "'");
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  std::string msg = "unknown format '" + opt.format + "' (expected";
  for (const char* f : allowed) msg += std::string(" ") + f;
  throw Error(msg + ")");
}

ClosureCriterion parse_criterion(const Options& opt) {
  if (opt.criterion == "1") return ClosureCriterion::first;
  if (opt.criterion == "2") return ClosureCriterion::second;
  if (opt.criterion == "3") return ClosureCriterion::third;
  throw Error("criterion must be 1, 2 or 3");
}

int cmd_enumerate(const Options& opt) {
  require_format(opt, {"tsv", "json"});
  Session s(opt);
  if (s.product_mode) {
    PairContext ctx = s.pair(opt);
    GGVariant variant = parse_variant(opt);
    int shift = opt.ambient ? dim_rc(ctx) : 0;
    std::vector<GGPieceIndex> rows = enumerate_gg(ctx, variant);
    if (opt.format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const GGPieceIndex& p : rows) {
        nlohmann::ordered_json row;
        row["v1"] = s.g1->to_string(p.v1);
        row["v2"] = s.g2->to_string(p.v2);
        row["dim"] = dim_gg_piece(ctx, p) + shift;
        arr.push_back(row);
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      std::cout << "v1\tv2\tdim\n";
      for (const GGPieceIndex& p : rows)
        std::cout << s.g1->to_string(p.v1) << "\t" << s.g2->to_string(p.v2) << "\t"
                  << dim_gg_piece(ctx, p) + shift << "\n";
    }
    return 0;
  }
  if (opt.ambient) throw Error("--ambient applies to the two-factor mode (--g2)");
  WonderfulContext ctx = s.wonderful(opt);
  std::vector<WonderfulPieceIndex> rows = enumerate_wonderful(ctx);
  if (opt.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const WonderfulPieceIndex& p : rows) {
      nlohmann::ordered_json row;
      row["J"] = node_set_to_string(p.j);
      row["v1"] = s.g1->to_string(p.v1);
      row["v2"] = s.g1->to_string(p.v2);
      row["dim"] = dim_wonderful_piece(ctx, p);
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "J\tv1\tv2\tdim\n";
    for (const WonderfulPieceIndex& p : rows)
      std::cout << node_set_to_string(p.j) << "\t" << s.g1->to_string(p.v1) << "\t"
                << s.g1->to_string(p.v2) << "\t" << dim_wonderful_piece(ctx, p) << "\n";
  }
  return 0;
}

void require_canonical_or_suggest(const WonderfulContext& ctx,
                                  const WonderfulPieceIndex& idx, const char* role) {
  const WeylGroup& g = ctx.g();
  if (ctx.is_canonical(idx)) return;
  WonderfulPieceIndex fixed = idx;
  fixed.v1 = g.parabolic_factor(idx.v1, idx.j, Side::right).first;
  fixed.v2 = g.parabolic_factor(idx.v2, ctx.a().a2, Side::left).second;
  throw Error(std::string(role) + " index is not canonical; nearest canonical form: " +
              piece_label(g, fixed));
}

int cmd_dim(const Options& opt) {
  require_format(opt, {"tsv", "json"});
  Session s(opt);
  if (opt.index.empty()) throw Error("dim needs --index");
  if (s.product_mode) {
    PairContext ctx = s.pair(opt);
    auto [v1, v2] = parse_gg_index(*s.g1, *s.g2, opt.index);
    GGPieceIndex p{v1, v2, parse_variant(opt)};
    int d = dim_gg_piece(ctx, p) + (opt.ambient ? dim_rc(ctx) : 0);
    if (opt.format == "json")
      std::cout << nlohmann::ordered_json{{"dim", d}}.dump() << "\n";
    else
      std::cout << d << "\n";
    return 0;
  }
  if (opt.ambient) throw Error("--ambient applies to the two-factor mode (--g2)");
  WonderfulContext ctx = s.wonderful(opt);
  WonderfulPieceIndex idx = parse_piece(*s.g1, opt.index);
  require_canonical_or_suggest(ctx, idx, "piece");
  int d = dim_wonderful_piece(ctx, idx);
  if (opt.format == "json")
    std::cout << nlohmann::ordered_json{{"dim", d}}.dump() << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_closure(const Options& opt) {
  require_format(opt, {"tsv", "json"});
  Session s(opt);
  if (opt.target.empty() || opt.query.empty())
    throw Error("closure needs --target and --query");
  if (s.product_mode) {
    PairContext ctx = s.pair(opt);
    auto [t1, t2] = parse_gg_index(*s.g1, *s.g2, opt.target);
    auto [q1, q2] = parse_gg_index(*s.g1, *s.g2, opt.query);
    GGVariant variant = parse_variant(opt);
    GGPieceIndex query{q1, q2, variant};
    if (!s.g1->is_min_rep(q1, ctx.c().a1, Side::right) ||
        !s.g2->is_min_rep(q2, ctx.a().a2, Side::left)) {
      WeylElt f1 = s.g1->parabolic_factor(q1, ctx.c().a1, Side::right).first;
      WeylElt f2 = s.g2->parabolic_factor(q2, ctx.a().a2, Side::left).second;
      throw Error("query index is not canonical; nearest canonical form: " +
                  gg_label(*s.g1, *s.g2, f1, f2));
    }
    GGWitness w;
    bool in = (variant == GGVariant::plus)
                  ? closure_leq_gg(ctx, t1, t2, query, &w)
                  : closure_leq_gg_minus(ctx, t1, t2, query, &w);
    if (opt.format == "json") {
      nlohmann::ordered_json doc{{"contains", in}};
      if (in)
        doc["witness"] = {{"x1", s.g1->to_string(w.x1)}, {"y1", s.g1->to_string(w.y1)}};
      std::cout << doc.dump() << "\n";
    } else if (in) {
      std::cout << "yes\twitness x1=" << s.g1->to_string(w.x1)
                << " y1=" << s.g1->to_string(w.y1) << "\n";
    } else {
      std::cout << "no\n";
    }
    return 0;
  }
  WonderfulContext ctx = s.wonderful(opt);
  WonderfulPieceIndex target = parse_piece(*s.g1, opt.target);
  WonderfulPieceIndex query = parse_piece(*s.g1, opt.query);
  // Targets may carry any v2; v1 must still be minimal for its subset.
  if (!s.g1->is_min_rep(target.v1, target.j, Side::right)) {
    WonderfulPieceIndex fixed = target;
    fixed.v1 = s.g1->parabolic_factor(target.v1, target.j, Side::right).first;
    throw Error("target v1 is not minimal for its subset; nearest canonical form: " +
                piece_label(*s.g1, fixed));
  }
  require_canonical_or_suggest(ctx, query, "query");
  WonderfulWitness w;
  bool in = closure_leq(ctx, parse_criterion(opt), target, query, &w);
  if (opt.format == "json") {
    nlohmann::ordered_json doc{{"contains", in}};
    if (in) {
      doc["witness"] = {{"x", s.g1->to_string(w.x)}, {"z", s.g1->to_string(w.z)}};
      if (w.has_y) doc["witness"]["y"] = s.g1->to_string(w.y);
    }
    std::cout << doc.dump() << "\n";
  } else if (in) {
    std::cout << "yes\twitness x=" << s.g1->to_string(w.x)
              << " z=" << s.g1->to_string(w.z);
    if (w.has_y) std::cout << " y=" << s.g1->to_string(w.y);
    std::cout << "\n";
  } else {
    std::cout << "no\n";
  }
  return 0;
}

int cmd_poset(const Options& opt) {
  require_format(opt, {"dot", "json", "tsv"});
  Session s(opt);
  if (s.product_mode) {
    PairContext ctx = s.pair(opt);
    GGVariant variant = parse_variant(opt);
    std::vector<GGPieceIndex> idx = enumerate_gg(ctx, variant);
    BitMatrix m = gg_closure_matrix(ctx, variant);
    if (std::string issue = checks::order_axiom_violation(m); !issue.empty())
      throw Error("closure relation is not a partial order: " + issue);
    std::vector<std::string> labels;
    labels.reserve(idx.size());
    for (const GGPieceIndex& p : idx)
      labels.push_back(gg_label(*s.g1, *s.g2, p.v1, p.v2));
    if (opt.format == "tsv")
      std::cout << matrix_to_tsv(labels, m);
    else if (opt.format == "dot")
      std::cout << matrix_to_dot(labels, m);
    else
      throw Error("two-factor poset export supports tsv and dot");
    return 0;
  }
  WonderfulContext ctx = s.wonderful(opt);
  ClosurePoset p = build_poset(ctx, parse_criterion(opt));
  if (opt.format == "dot")
    std::cout << poset_to_dot(ctx, p);
  else if (opt.format == "json")
    std::cout << poset_to_json(ctx, p, parse_criterion(opt));
  else if (opt.format == "tsv")
    std::cout << poset_to_tsv(ctx, p);
  else
    throw Error("unknown format '" + opt.format + "'");
  return 0;
}

void print_results(const std::string& suite, const std::vector<checks::Result>& rs,
                   bool& ok) {
  for (const checks::Result& r : rs) {
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << suite << "/" << r.name << "  ("
              << r.detail << ")\n";
    if (!r.pass) ok = false;
  }
}

std::vector<checks::Result> merge_by_name(const std::vector<checks::Result>& in) {
  std::vector<checks::Result> out;
  std::map<std::string, std::size_t> pos;
  for (const checks::Result& r : in) {
    auto it = pos.find(r.name);
    if (it == pos.end()) {
      pos[r.name] = out.size();
      out.push_back(r);
    } else {
      checks::Result& agg = out[it->second];
      if (!r.pass && agg.pass) {
        agg.pass = false;
        agg.detail = r.detail;
      }
    }
  }
  return out;
}

int cmd_verify(const Options& opt) {
  static const char* kSuites[] = {"appendix", "counting",        "closures", "dims",
                                  "gg",       "specializations", "induction", "all"};
  bool known = false;
  for (const char* name : kSuites) known = known || opt.suite == name;
  if (!known) throw Error("unknown suite '" + opt.suite + "'");
  Session s(opt);
  bool ok = true;
  const std::string& suite = opt.suite;
  // In two-factor mode "all" covers the suites defined for a pair of groups;
  // single-group suites still run when named explicitly.
  auto want = [&](const char* name) {
    if (suite != "all") return suite == name;
    if (!s.product_mode) return true;
    return std::string(name) == "appendix" || std::string(name) == "induction" ||
           std::string(name) == "gg";
  };

  if (want("appendix")) print_results("appendix", checks::appendix_suite(*s.g1), ok);
  if (want("counting")) {
    WonderfulContext ctx = s.wonderful(opt);
    print_results("counting", checks::counting_suite(ctx), ok);
  }
  if (want("closures")) {
    WonderfulContext ctx = s.wonderful(opt);
    print_results("closures", checks::closures_suite(ctx), ok);
  }
  if (want("specializations")) {
    WonderfulContext ctx = s.wonderful(opt);
    print_results("specializations", checks::specialization_suite(ctx), ok);
  }
  if (want("dims")) {
    WonderfulContext ctx = s.wonderful(opt);
    print_results("dims", checks::dims_suite(ctx), ok);
    print_results("dims", checks::wc_identity_suite(*s.g1), ok);
  }
  if (want("induction")) {
    std::vector<checks::Result> all;
    if (s.product_mode) {
      PairContext ctx = s.pair(opt);
      all = checks::induction_suite(ctx);
    } else {
      Triple a = resolve_triple(s.g1->rs(), s.g1->rs(), opt.triple);
      for (std::uint32_t jb = 0; jb <= NodeSet::all(s.g1->rank()).bits(); ++jb) {
        NodeSet j = NodeSet::from_bits(jb);
        Triple cj{j, j, DiagramIso::identity(j, s.g1->rank()), Y2Preset::identification};
        PairContext ctx(*s.g1, *s.g1, a, cj);
        std::vector<checks::Result> rs = checks::induction_suite(ctx);
        all.insert(all.end(), rs.begin(), rs.end());
      }
    }
    print_results("induction", merge_by_name(all), ok);
  }
  if (want("gg")) {
    PairContext ctx = s.pair(opt);
    print_results("gg", checks::gg_suite(ctx), ok);
  }
  std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILURES above\n");
  return ok ? 0 : 1;
}

int cmd_cache_clear(const Options& opt) {
  std::string dir = resolved_cache_dir(opt);
  if (dir.empty()) throw Error("no cache directory configured (--cache-dir or WCALC_CACHE)");
  int removed = clear_cache(dir);
  std::cout << "removed " << removed << " cache file(s) from " << dir << "\n";
  return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_g = true) {
  auto* g = cmd->add_option("--g", opt.g, "root-system type of the (first) group, e.g. A2");
  if (needs_g) g->required();
  cmd->add_option("--g2", opt.g2, "second factor type; switches to the two-factor mode");
  cmd->add_option("--triple", opt.triple,
                  "triple: trivial | diag | swap | literal A1={..};A2={..};a={..}");
  cmd->add_option("--ctriple", opt.ctriple, "second triple (two-factor mode)");
  cmd->add_option("--cache-dir", opt.cache_dir, "cache directory (default: $WCALC_CACHE)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact piece combinatorics over finite Weyl groups"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> run;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list piece indices with dimensions");
  add_common(enumerate, opt);
  enumerate->add_option("--format", opt.format, "tsv | json");
  enumerate->add_option("--variant", opt.variant, "plus | minus (two-factor mode)");
  enumerate->add_flag("--ambient", opt.ambient, "add the acting-subgroup dimension");
  enumerate->callback([&] { run = [&] { return cmd_enumerate(opt); }; });

  CLI::App* dim = app.add_subcommand("dim", "dimension of one piece");
  add_common(dim, opt);
  dim->add_option("--index", opt.index, "piece index, e.g. J={1};v1=s1;v2=e")->required();
  dim->add_option("--format", opt.format, "tsv | json");
  dim->add_option("--variant", opt.variant, "plus | minus (two-factor mode)");
  dim->add_flag("--ambient", opt.ambient, "add the acting-subgroup dimension");
  dim->callback([&] { run = [&] { return cmd_dim(opt); }; });

  CLI::App* closure = app.add_subcommand("closure", "decide a closure containment");
  add_common(closure, opt);
  closure->add_option("--target", opt.target, "target piece index")->required();
  closure->add_option("--query", opt.query, "query piece index")->required();
  closure->add_option("--criterion", opt.criterion, "closure criterion 1 | 2 | 3");
  closure->add_option("--variant", opt.variant, "plus | minus (two-factor mode)");
  closure->add_option("--format", opt.format, "tsv | json");
  closure->callback([&] { run = [&] { return cmd_closure(opt); }; });

  CLI::App* poset = app.add_subcommand("poset", "export the closure poset");
  add_common(poset, opt);
  poset->add_option("--criterion", opt.criterion, "closure criterion 1 | 2 | 3");
  poset->add_option("--variant", opt.variant, "plus | minus (two-factor mode)");
  poset->add_option("--format", opt.format, "dot | json | tsv");
  poset->callback([&] { run = [&] { return cmd_poset(opt); }; });

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, opt);
  verify->add_option("--suite", opt.suite,
                     "appendix | counting | closures | specializations | dims | "
                     "induction | gg | all");
  verify->callback([&] { run = [&] { return cmd_verify(opt); }; });

  CLI::App* cache = app.add_subcommand("cache", "manage the persistent cache");
  CLI::App* cache_clear = cache->add_subcommand("clear", "delete cached Weyl tables");
  cache_clear->add_option("--cache-dir", opt.cache_dir, "cache directory");
  cache_clear->callback([&] { run = [&] { return cmd_cache_clear(opt); }; });
  cache->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);
  try {
    return run ? run() : 2;
  } catch (const wcalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
