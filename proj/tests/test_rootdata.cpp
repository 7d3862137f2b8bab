#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "wcalc/rootdata.hpp"

using namespace wcalc;

TEST_CASE("positive-root counts match the classical closed forms") {
  struct Row {
    const char* type;
    int rank, pos;
  };
  const Row rows[] = {
      {"A1", 1, 1},  {"A2", 2, 3},   {"A3", 3, 6},  {"A4", 4, 10}, {"B2", 2, 4},
      {"B3", 3, 9},  {"C3", 3, 9},   {"C4", 4, 16}, {"D4", 4, 12}, {"D5", 5, 20},
      {"G2", 2, 6},  {"F4", 4, 24},  {"E6", 6, 36}, {"A1xA1", 2, 2},
      {"A2xB2", 4, 7}, {"a2xg2", 4, 9},
  };
  for (const Row& r : rows) {
    CAPTURE(r.type);
    RootSystem rs = build_root_system(r.type);
    CHECK(rs.rank() == r.rank);
    CHECK(rs.num_positive() == r.pos);
  }
}

TEST_CASE("type parsing rejects bad input") {
  CHECK_THROWS_AS(build_root_system("H3"), Error);
  CHECK_THROWS_AS(build_root_system("G3"), Error);
  CHECK_THROWS_AS(build_root_system("B1"), Error);
  CHECK_THROWS_AS(build_root_system("D2"), Error);
  CHECK_THROWS_AS(build_root_system("E7"), Error);
  CHECK_THROWS_AS(build_root_system("F5"), Error);
  CHECK_THROWS_AS(build_root_system("A4xA3"), Error);  // total rank 7
  CHECK_THROWS_AS(build_root_system(""), Error);
  CHECK_THROWS_AS(build_root_system("A"), Error);
  CHECK_THROWS_AS(build_root_system("A2x"), Error);
  CHECK(build_root_system("a1Xa1").type_string() == "A1xA1");
}

TEST_CASE("Cartan matrices have the required shape") {
  for (const char* type : {"A3", "B3", "C3", "D4", "F4", "G2", "E6", "A2xB2"}) {
    CAPTURE(type);
    RootSystem rs = build_root_system(type);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        int c = rs.cartan(i, j);
        if (i == j) {
          CHECK(c == 2);
        } else {
          CHECK((c == 0 || c == -1 || c == -2 || c == -3));
          CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
        }
      }
  }
}

TEST_CASE("simple roots are unit vectors and the root list is reflection-closed") {
  for (const char* type : {"A2", "B3", "G2", "A1xB2"}) {
    CAPTURE(type);
    RootSystem rs = build_root_system(type);
    for (int i = 0; i < rs.rank(); ++i) {
      Root a = rs.simple_root(i);
      CHECK(rs.simple_index(a) == i);
      CHECK(rs.pos_root_index(a) >= 0);
    }
    for (const Root& r : rs.positive_roots())
      for (int i = 0; i < rs.rank(); ++i) {
        Root s = rs.reflect(r, i);
        bool pos = rs.pos_root_index(s) >= 0;
        Root neg = s;
        for (int& c : neg.coeff) c = -c;
        bool negp = rs.pos_root_index(neg) >= 0;
        CHECK((pos || negp));
      }
    // each simple reflection permutes the full root set, moving only
    // alpha_i across the sign wall
    for (int i = 0; i < rs.rank(); ++i) {
      int sign_flips = 0;
      std::set<std::vector<int>> images;
      for (const Root& r : rs.positive_roots()) {
        Root s = rs.reflect(r, i);
        images.insert(s.coeff);
        if (rs.is_negative(s)) ++sign_flips;
      }
      CHECK(images.size() == rs.positive_roots().size());
      CHECK(sign_flips == 1);  // only alpha_i itself
    }
  }
}

TEST_CASE("reflection examples") {
  RootSystem a2 = build_root_system("A2");
  Root a1 = a2.simple_root(0), al2 = a2.simple_root(1);
  Root sum{std::vector<int>{1, 1}};
  CHECK(a2.reflect(al2, 0) == sum);
  CHECK(a2.reflect(a1, 1) == sum);
  // s_i(alpha_i) = -alpha_i
  Root neg = a1;
  neg.coeff[0] = -1;
  CHECK(a2.reflect(a1, 0) == neg);
  // involution
  CHECK(a2.reflect(a2.reflect(al2, 0), 0) == al2);

  RootSystem g2 = build_root_system("G2");
  Root g_sum{std::vector<int>{3, 1}};
  CHECK(g2.reflect(g2.simple_root(1), 0) == g_sum);
}

TEST_CASE("pos_roots_in_span basics, monotonicity, additivity") {
  RootSystem a2 = build_root_system("A2");
  CHECK(a2.pos_roots_in_span(NodeSet::none()) == 0);
  CHECK(a2.pos_roots_in_span(NodeSet::of({0})) == 1);
  CHECK(a2.pos_roots_in_span(NodeSet::all(2)) == 3);
  CHECK(a2.dim_u(NodeSet::of({0})) == 2);

  RootSystem g2 = build_root_system("G2");
  CHECK(g2.pos_roots_in_span(NodeSet::all(2)) == 6);

  RootSystem b3 = build_root_system("B3");
  for (std::uint32_t s = 0; s < 8; ++s)
    for (std::uint32_t t = 0; t < 8; ++t) {
      if ((s & ~t) != 0) continue;  // s subset of t
      CHECK(b3.pos_roots_in_span(NodeSet::from_bits(s)) <=
            b3.pos_roots_in_span(NodeSet::from_bits(t)));
    }

  RootSystem prod = build_root_system("A2xB2");
  for (std::uint32_t s = 0; s < 16; ++s) {
    NodeSet full = NodeSet::from_bits(s);
    NodeSet left = full.intersect(NodeSet::of({0, 1}));
    NodeSet right = full.intersect(NodeSet::of({2, 3}));
    CHECK(prod.pos_roots_in_span(full) ==
          prod.pos_roots_in_span(left) + prod.pos_roots_in_span(right));
  }
}
