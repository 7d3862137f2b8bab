#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wcalc/checks.hpp"
#include "wcalc/pieces_gg.hpp"

using namespace wcalc;

TEST_CASE("piece counts") {
  WeylGroup g(build_root_system("A2"));
  Triple trivial = make_empty_triple(2, 2, Y2Preset::product);
  PairContext bruhat(g, g, trivial, trivial);
  CHECK(enumerate_gg(bruhat).size() == 36);

  Triple id = make_identity_triple(2);
  PairContext diag(g, g, id, id);
  CHECK(enumerate_gg(diag).size() == 1);

  Triple swap{NodeSet::of({0}), NodeSet::of({1}), DiagramIso::from_pairs(2, 2, {{0, 1}}),
              Y2Preset::identification};
  PairContext mixed(g, g, swap, trivial);
  CHECK(enumerate_gg(mixed).size() == 18);
}

TEST_CASE("dimensions in the Borel-pair case are l(v1)+l(v2)") {
  WeylGroup g(build_root_system("A2"));
  Triple trivial = make_empty_triple(2, 2, Y2Preset::product);
  PairContext ctx(g, g, trivial, trivial);
  for (const GGPieceIndex& p : enumerate_gg(ctx)) {
    CHECK(dim_gg_piece(ctx, p) == g.length(p.v1) + g.length(p.v2));
    GGPieceIndex m = p;
    m.variant = GGVariant::minus;
    CHECK(dim_gg_piece(ctx, m) ==
          g.rs().num_positive() - g.length(p.v1) + g.length(p.v2));
  }
  CHECK(dim_rc(ctx) == 10);  // two Borel factors
}

TEST_CASE("the single identified piece fills the quotient") {
  for (const char* type : {"A1", "A2", "B2"}) {
    CAPTURE(type);
    WeylGroup g(build_root_system(type));
    Triple id = make_identity_triple(g.rank());
    PairContext ctx(g, g, id, id);
    std::vector<GGPieceIndex> idx = enumerate_gg(ctx);
    REQUIRE(idx.size() == 1);
    int dim_g = g.rank() + 2 * g.rs().num_positive();
    CHECK(dim_gg_piece(ctx, idx[0]) == dim_g);
    CHECK(dim_rc(ctx) == dim_g);
  }
}

TEST_CASE("pieces over an identified right factor") {
  // first triple empty, second fully identified: dimensions are
  // rank + |Phi+| + l(v2) in the quotient.
  WeylGroup g(build_root_system("A1"));
  Triple trivial = make_empty_triple(1, 1, Y2Preset::product);
  Triple id = make_identity_triple(1);
  PairContext ctx(g, g, trivial, id);
  std::vector<GGPieceIndex> idx = enumerate_gg(ctx);
  REQUIRE(idx.size() == 2);  // v1 in W^{C1} = {e}, v2 in W
  for (const GGPieceIndex& p : idx)
    CHECK(dim_gg_piece(ctx, p) == 1 + 1 + g.length(p.v2));
}

TEST_CASE("plus and minus dimensions differ by 2 l(v1) - dim U_{C1}") {
  WeylGroup g(build_root_system("A2"));
  for (std::uint32_t cb = 0; cb < 4; ++cb) {
    NodeSet c1 = NodeSet::from_bits(cb);
    Triple c{c1, c1, DiagramIso::identity(c1, 2), Y2Preset::identification};
    PairContext ctx(g, g, make_empty_triple(2, 2, Y2Preset::product), c);
    for (const GGPieceIndex& p : enumerate_gg(ctx)) {
      GGPieceIndex m = p;
      m.variant = GGVariant::minus;
      int diff = dim_gg_piece(ctx, p) - dim_gg_piece(ctx, m);
      CHECK(diff == 2 * g.length(p.v1) - g.rs().dim_u(c1));
    }
  }
}

TEST_CASE("fiber dimension traces") {
  WeylGroup g(build_root_system("A2"));
  Triple id = make_identity_triple(2);
  PairContext identified(g, g, id, id);
  for (const GGPieceIndex& p : enumerate_gg(identified)) {
    for (int d : fiber_dim_trace(identified, p.v1, p.v2)) CHECK(d == 0);
  }

  // second triple empty: one refinement step of fiber dimension l(v1)
  Triple trivial = make_empty_triple(2, 2, Y2Preset::product);
  PairContext bruhat(g, g, trivial, trivial);
  for (const GGPieceIndex& p : enumerate_gg(bruhat)) {
    std::vector<int> tr = fiber_dim_trace(bruhat, p.v1, p.v2);
    REQUIRE(tr.size() == 1);
    CHECK(tr[0] == g.length(p.v1));
  }

  Triple a{NodeSet::of({0}), NodeSet::of({1}), DiagramIso::from_pairs(2, 2, {{0, 1}}),
           Y2Preset::identification};
  Triple c{NodeSet::of({1}), NodeSet::of({0}), DiagramIso::from_pairs(2, 2, {{1, 0}}),
           Y2Preset::identification};
  PairContext ctx(g, g, a, c);
  std::vector<int> trace = fiber_dim_trace(ctx, g.parse("s2 s1"), g.parse("s1 s2"));
  REQUIRE(trace.size() == 1);
  CHECK(trace[0] == 2);
}

TEST_CASE("closure scans") {
  WeylGroup g(build_root_system("A2"));
  Triple trivial = make_empty_triple(2, 2, Y2Preset::product);
  PairContext ctx(g, g, trivial, trivial);
  std::vector<GGPieceIndex> idx = enumerate_gg(ctx);
  GGWitness w;
  for (const GGPieceIndex& p : idx) {
    CHECK(closure_leq_gg(ctx, p.v1, p.v2, p, &w));  // reflexive
    CHECK(w.x1 == g.identity());
    CHECK(w.y1 == g.identity());
  }
  // non-canonical queries are rejected
  Triple cshape{NodeSet::of({0}), NodeSet::of({0}), DiagramIso::identity(NodeSet::of({0}), 2),
                Y2Preset::identification};
  PairContext ctx2(g, g, trivial, cshape);
  GGPieceIndex bad{g.simple(0), g.identity(), GGVariant::plus};
  CHECK_THROWS_AS(closure_leq_gg(ctx2, g.identity(), g.identity(), bad), Error);
}

TEST_CASE("double-coset closure forms") {
  WeylGroup g(build_root_system("A2"));
  Triple trivial = make_empty_triple(2, 2, Y2Preset::product);
  Triple c{NodeSet::of({0}), NodeSet::of({0}), DiagramIso::identity(NodeSet::of({0}), 2),
           Y2Preset::identification};
  PairContext ctx(g, g, trivial, c);
  // with u1 = e, componentwise order implies containment
  for (WeylElt v1 : g.min_coset_reps(c.a1, Side::right))
    for (WeylElt w1 : g.min_coset_reps(c.a1, Side::right)) {
      if (!g.bruhat_leq(w1, v1)) continue;
      WeylElt w0 = g.longest_element(NodeSet::all(2));
      CHECK(bbrc_closure_contains(ctx, v1, w0, w1, g.identity()));
    }
  // empty second triple: exactly the product order
  PairContext prod(g, g, trivial, trivial);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      CHECK(bbrc_closure_contains(prod, g.at(a), g.longest_element(NodeSet::all(2)),
                                  g.at(b), g.identity()) ==
            g.bruhat_leq(g.at(b), g.at(a)));
}

TEST_CASE("full product-group suites on small contexts") {
  WeylGroup g(build_root_system("A2"));
  Triple trivial = make_empty_triple(2, 2, Y2Preset::product);
  Triple id = make_identity_triple(2);
  Triple a{NodeSet::of({0}), NodeSet::of({1}), DiagramIso::from_pairs(2, 2, {{0, 1}}),
           Y2Preset::identification};
  Triple c{NodeSet::of({1}), NodeSet::of({0}), DiagramIso::from_pairs(2, 2, {{1, 0}}),
           Y2Preset::identification};
  for (const auto& [ta, tc] : {std::pair{trivial, trivial}, std::pair{id, id},
                               std::pair{trivial, id}, std::pair{a, c}}) {
    PairContext ctx(g, g, ta, tc);
    for (const auto& r : checks::gg_suite(ctx)) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
    for (const auto& r : checks::induction_suite(ctx)) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
  }
  for (const char* type : {"A1", "B2", "G2"}) {
    CAPTURE(type);
    WeylGroup h(build_root_system(type));
    Triple tv = make_empty_triple(h.rank(), h.rank(), Y2Preset::product);
    Triple di = make_identity_triple(h.rank());
    for (const auto& [ta, tc] :
         {std::pair{tv, tv}, std::pair{di, di}, std::pair{di, tv}}) {
      PairContext ctx(h, h, ta, tc);
      for (const auto& r : checks::gg_suite(ctx)) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
      }
    }
  }
}

TEST_CASE("factors of different ranks") {
  WeylGroup g1(build_root_system("A1"));
  WeylGroup g2(build_root_system("A2"));
  Triple a{NodeSet::of({0}), NodeSet::of({1}), DiagramIso::from_pairs(1, 2, {{0, 1}}),
           Y2Preset::identification};
  Triple c{NodeSet::of({0}), NodeSet::of({0}), DiagramIso::from_pairs(1, 2, {{0, 0}}),
           Y2Preset::identification};
  PairContext ctx(g1, g2, a, c);
  CHECK(enumerate_gg(ctx).size() == 3);  // |W1^{C1}| = 1, |^{A2}W2| = 3
  for (const auto& r : checks::gg_suite(ctx)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  for (const auto& r : checks::induction_suite(ctx)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  PairContext bruhat(g1, g2, make_empty_triple(1, 2, Y2Preset::product),
                     make_empty_triple(1, 2, Y2Preset::product));
  for (const GGPieceIndex& p : enumerate_gg(bruhat))
    CHECK(dim_gg_piece(bruhat, p) == g1.length(p.v1) + g2.length(p.v2));
}
