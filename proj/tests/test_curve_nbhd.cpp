#include <doctest.h>

#include <algorithm>

#include "cominq/curve_nbhd.hpp"

using namespace cominq;

TEST_CASE("space parsing and family data") {
  CominSpace gr = CominSpace::parse("Gr(2,4)");
  CHECK(gr.family() == Family::Grassmannian);
  CHECK(gr.dimension() == 4);
  CHECK(gr.node() == 2);
  CHECK(gr.name() == "Gr(2,4)");

  CHECK(CominSpace::parse("LG(3)").dimension() == 6);
  CHECK(CominSpace::parse("LG(3,6)").name() == "LG(3)");
  CHECK(CominSpace::parse("OG(5)").dimension() == 10);
  CHECK(CominSpace::parse("OG(5,10)").name() == "OG(5)");
  CHECK(CominSpace::parse("Q(5)").dimension() == 5);
  CHECK(CominSpace::parse("Q(6)").dimension() == 6);
  CHECK(CominSpace::parse("E6").dimension() == 16);
  CHECK(CominSpace::parse("E7").dimension() == 27);

  CHECK(CominSpace::parse("Q(5)").root_system().datum.type == LieType::B);
  CHECK(CominSpace::parse("Q(6)").root_system().datum.type == LieType::D);

  CHECK_THROWS_AS(CominSpace::parse("Gr(4)"), std::invalid_argument);
  CHECK_THROWS_AS(CominSpace::parse("Gr(4,4)"), std::invalid_argument);
  CHECK_THROWS_AS(CominSpace::parse("LG(3,7)"), std::invalid_argument);
  CHECK_THROWS_AS(CominSpace::parse("F4"), std::invalid_argument);
  CHECK_THROWS_AS(CominSpace::parse("Q(2)"), std::invalid_argument);
}

TEST_CASE("degree distance") {
  CominSpace e6 = CominSpace::parse("E6");
  CHECK(deg_dist(e6, WeylElement::identity(e6.root_system())) == 0);
  WeylElement x2 = WeylElement::from_word(e6.root_system(),
                                          {6, 5, 4, 2, 3, 4, 5, 6});
  CHECK(deg_dist(e6, x2) == 2);

  CominSpace gr37 = CominSpace::parse("Gr(3,7)");
  CHECK(deg_dist(gr37, gr37.u_max()) == 3);

  // a non-representative is rejected
  CominSpace gr24 = CominSpace::parse("Gr(2,4)");
  WeylElement s1 = WeylElement::simple_reflection(gr24.root_system(), 1);
  CHECK_THROWS_AS(deg_dist(gr24, s1), std::invalid_argument);
}

TEST_CASE("diameter equals the d2 column") {
  CHECK(diameter(CominSpace::parse("Q(5)")) == 2);
  CHECK(diameter(CominSpace::parse("E7")) == 3);
  CHECK(diameter(CominSpace::parse("Gr(2,6)")) == 2);
  CHECK(diameter(CominSpace::parse("E6")) == 2);
}

TEST_CASE("dx tables") {
  DegreeTable gr = dx_table(CominSpace::parse("Gr(3,7)"));
  CHECK(gr.d2 == 3);
  CHECK(gr.d3 == 4);
  DegreeTable og = dx_table(CominSpace::parse("OG(5)"));
  CHECK(og.d2 == 2);
  CHECK(og.d3 == 3);
  DegreeTable e6 = dx_table(CominSpace::parse("E6"));
  CHECK(e6.d2 == 2);
  CHECK(e6.d3 == 4);
  DegreeTable lg = dx_table(CominSpace::parse("LG(4)"));
  CHECK(lg.d2 == 4);
  CHECK(lg.d3 == 4);
}

TEST_CASE("gamma1") {
  CominSpace gr24 = CominSpace::parse("Gr(2,4)");
  WeylElement s2 = WeylElement::simple_reflection(gr24.root_system(), 2);
  CHECK(gamma1(gr24, s2) == gr24.u_max());
  CHECK(gamma1(gr24, gr24.u_max()) == gr24.u_max());

  CominSpace e7 = CominSpace::parse("E7");
  WeylElement s7 = WeylElement::simple_reflection(e7.root_system(), 7);
  WeylElement expected = WeylElement::from_word(
      e7.root_system(),
      {1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7});
  CHECK(gamma1(e7, s7) == expected);
  CHECK(reduced_word(gamma1(e7, s7)) ==
        std::vector<int>{1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("iterated gamma") {
  CominSpace e7 = CominSpace::parse("E7");
  WeylElement s7 = WeylElement::simple_reflection(e7.root_system(), 7);
  CHECK(gamma(e7, s7, 0) == s7);
  CHECK(gamma(e7, s7, 2) == e7.u_max());

  for (const char* name : {"Gr(2,5)", "LG(3)", "Q(6)", "E6"}) {
    CominSpace space = CominSpace::parse(name);
    WeylElement e = WeylElement::identity(space.root_system());
    int d2 = dx_table(space).d2;
    CHECK(gamma(space, e, d2) == space.u_max());
    CHECK_FALSE(gamma(space, e, d2 - 1) == space.u_max());
  }
}

TEST_CASE("line chains") {
  CominSpace e6 = CominSpace::parse("E6");
  const RootSystem& rs = e6.root_system();
  CHECK(line_chain(e6, WeylElement::identity(rs)).size() == 1);

  WeylElement x2 = WeylElement::from_word(rs, {6, 5, 4, 2, 3, 4, 5, 6});
  CHECK(reduced_word(x2) == std::vector<int>{6, 5, 4, 2, 3, 4, 5, 6});
  std::vector<WeylElement> chain = line_chain(e6, x2);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].is_identity());
  CHECK(chain[1] == WeylElement::simple_reflection(rs, 6));
  CHECK(chain[2] == x2);

  CominSpace gr24 = CominSpace::parse("Gr(2,4)");
  CHECK(reduced_word(gr24.u_max()) == std::vector<int>{2, 1, 3, 2});
  std::vector<WeylElement> ch = line_chain(gr24, gr24.u_max());
  REQUIRE(ch.size() == 3);
  CHECK(ch[1] == WeylElement::simple_reflection(gr24.root_system(), 2));
  CHECK(ch[2] == gr24.u_max());

  SUBCASE("consecutive steps have degree distance one") {
    for (const char* name : {"Gr(2,4)", "LG(3)", "E6"}) {
      CominSpace space = CominSpace::parse(name);
      for (const WeylElement& rep : space.quotient().reps) {
        std::vector<WeylElement> c = line_chain(space, rep);
        CHECK(static_cast<int>(c.size()) == deg_dist(space, rep) + 1);
        for (std::size_t i = 1; i < c.size(); ++i) {
          WeylElement step =
              min_rep(c[i - 1].inverse() * c[i], space.node());
          CHECK(deg_dist(space, step) == 1);
        }
        CHECK(min_rep(c.back(), space.node()) == rep);
      }
    }
  }
}

TEST_CASE("x_small data") {
  CominSpace e7 = CominSpace::parse("E7");
  CHECK(x_small(e7, 0).is_identity());
  CHECK(reduced_word(x_small(e7, 2)) ==
        std::vector<int>{7, 6, 5, 4, 2, 3, 4, 5, 6, 7});
  CHECK(x_small(e7, 3) == e7.u_max());

  CominSpace gr35 = CominSpace::parse("Gr(3,5)");
  WeylElement x2 = x_small(gr35, 2);
  CHECK(x2.length() == 4);
  CHECK(deg_dist(gr35, x2) == 2);

  CHECK_THROWS_AS(x_small(e7, 4), std::invalid_argument);
  CHECK_THROWS_AS(x_small(e7, -1), std::invalid_argument);

  SUBCASE("lengths follow the family formulas") {
    CominSpace lg4 = CominSpace::parse("LG(4)");
    for (int d = 0; d <= 4; ++d)
      CHECK(x_small(lg4, d).length() == d * (d + 1) / 2);
    CominSpace og6 = CominSpace::parse("OG(6)");
    for (int d = 0; d <= 3; ++d)
      CHECK(x_small(og6, d).length() == d * (2 * d - 1));
    CominSpace q7 = CominSpace::parse("Q(7)");
    CHECK(x_small(q7, 1).length() == 1);
    CHECK(x_small(q7, 2) == q7.u_max());
    CominSpace e6 = CominSpace::parse("E6");
    CHECK(x_small(e6, 2).length() == 8);
  }
}

TEST_CASE("Gamma_{d3-d}(X_d) = X") {
  for (const char* name : {"Gr(2,5)", "Gr(3,6)", "LG(3)", "OG(5)", "Q(5)",
                           "Q(6)", "E6", "E7"}) {
    CominSpace space = CominSpace::parse(name);
    Dx3Report report = verify_dx3(space);
    CHECK(report.pass);
    CHECK(static_cast<int>(report.entries.size()) == dx_table(space).d2 + 1);
  }
}

TEST_CASE("the unique Schubert divisor of the Cayley plane") {
  CominSpace e6 = CominSpace::parse("E6");
  WeylElement divisor = gamma1(e6, x_small(e6, 2));
  CHECK(divisor.length() == 15);
  int count = 0;
  for (const WeylElement& rep : e6.quotient().reps)
    if (rep.length() == 15) ++count;
  CHECK(count == 1);
}

TEST_CASE("word independence of the node count on small spaces") {
  for (const char* name : {"Gr(2,4)", "Q(5)", "LG(3)"}) {
    CominSpace space = CominSpace::parse(name);
    for (const WeylElement& rep : space.quotient().reps) {
      WordEnumeration en = all_reduced_words(rep, 10001);
      REQUIRE(en.exhaustive);
      int want = deg_dist(space, rep);
      for (const auto& w : en.words)
        CHECK(std::count(w.begin(), w.end(), space.node()) == want);
    }
  }
}

TEST_CASE("gamma1 is expansive and Bruhat-monotone on Gr(2,4)") {
  CominSpace space = CominSpace::parse("Gr(2,4)");
  const ParabolicQuotient& wp = space.quotient();
  std::vector<int> img(wp.size());
  for (std::size_t i = 0; i < wp.size(); ++i) {
    WeylElement g = gamma1(space, wp.reps[i]);
    img[i] = wp.index_of(g);
    REQUIRE(img[i] >= 0);
    CHECK(bruhat_leq(wp.reps[i], g));
    if (!(wp.reps[i] == space.u_max()))
      CHECK(g.length() > wp.reps[i].length());
  }
  for (std::size_t i = 0; i < wp.size(); ++i)
    for (std::size_t j = 0; j < wp.size(); ++j)
      if (wp.leq(i, j))
        CHECK(wp.leq(static_cast<std::size_t>(img[i]),
                     static_cast<std::size_t>(img[j])));
}
