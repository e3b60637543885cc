#include <doctest.h>

#include "test_util.hpp"

using namespace cdptest;

TEST_CASE("evaluate") {
  auto base = segment(-1, 1);
  PLFunction line = pl1(base, {{-1, 0}, {1, 1}});
  CHECK(line.evaluate({Rat(0)}) == Rat(1, 2));

  PLFunction one = pl1(base, {{-1, 1}, {1, 1}});
  CHECK(one.evaluate({Rat(-1, 3)}) == 1);
  CHECK(one.evaluate_at_origin() == 1);

  // min{1, x1 + 1} over the 2-d cross polytope at (-1/2, 0)
  auto [cross, cert] = cross_example(2);
  const PLFunction& f = cross.functions()[0];
  CHECK(f.evaluate({Rat(-1, 2), Rat(0)}) == Rat(1, 2));

  CHECK_THROWS_AS(line.evaluate({Rat(2)}), std::invalid_argument);
}

TEST_CASE("support must project onto the base") {
  auto base = segment(-1, 1);
  CHECK_THROWS_AS(pl1(base, {{-1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(pl1(base, {{-1, 0}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("regions of linearity") {
  auto base = segment(-1, 1);
  PLFunction tent = pl1(base, {{-1, 1}, {0, 1}, {1, 0}});
  auto regions = tent.regions_of_linearity();
  REQUIRE(regions.size() == 2);
  CHECK(regions[0] == LatticePolytope::from_points({{Int(-1)}, {Int(0)}}));
  CHECK(regions[1] == LatticePolytope::from_points({{Int(0)}, {Int(1)}}));

  PLFunction line = pl1(base, {{-1, 0}, {1, 1}});
  CHECK(line.regions_of_linearity().size() == 1);

  auto [cross, cert] = cross_example(2);
  auto rg = cross.functions()[0].regions_of_linearity();
  REQUIRE(rg.size() == 2);  // split along x1 = 0
  for (const LatticePolytope& region : rg)
    CHECK(region.contains(RatVec{Rat(0), Rat(0)}));
}

TEST_CASE("redundant support points are ignored semantically") {
  auto base = segment(-1, 1);
  PLFunction f = pl1(base, {{-1, 0}, {0, 0}, {1, 1}});  // (0,0) under the hull
  PLFunction g = pl1(base, {{-1, 0}, {1, 1}});
  CHECK(f.same_function(g));
  CHECK(f.stripped().support_points() == g.graph_vertices());
}

TEST_CASE("check_positivity") {
  CDP row1 = load_fixture("table1_row01.cdp.json");
  CHECK(check_positivity(row1));

  CDP zero_sum = cdp1(-1, 1, {{{-1, -1}, {1, 1}}, {{-1, 1}, {1, -1}}});  // x and -x
  CHECK_FALSE(check_positivity(zero_sum));

  // the hexagon correspondence example: sum at the vertices and barycenter
  LatticePolytope hexagon =
      polytope_from_json(load_json_file(fixture_path("corex.polytope.json")));
  CDP c = polytope_to_cdp(hexagon);
  CHECK(sum_at(c, {Rat(-3)}) == 1);
  CHECK(sum_at(c, {Rat(2)}) == 0);
  CHECK(check_positivity(c));
}

TEST_CASE("positivity agrees with a grid oracle on refutations") {
  // the oracle samples the eighth-integral points of the interior; it can
  // only refute, and must refute whenever check_positivity does
  auto oracle_refutes = [](const CDP& c) {
    const LatticePolytope& b = c.base();
    Int lo = b.vertices().front()[0] * 8, hi = b.vertices().back()[0] * 8;
    for (Int t = lo + 1; t < hi; ++t)
      if (sum_at(c, {Rat(t, 8)}) <= 0) return true;
    return false;
  };
  std::vector<CDP> cases;
  cases.push_back(load_fixture("table1_row01.cdp.json"));
  cases.push_back(load_fixture("fig_eq_left.cdp.json"));
  cases.push_back(cdp1(-1, 1, {{{-1, -1}, {1, 1}}, {{-1, 1}, {1, -1}}}));
  cases.push_back(cdp1(-1, 1, {{{-1, -2}, {1, 0}}, {{-1, 1}, {1, 1}}}));
  for (const CDP& c : cases) {
    if (oracle_refutes(c)) CHECK_FALSE(check_positivity(c));
    if (!check_positivity(c)) CHECK(oracle_refutes(c));
  }
}

namespace {

// independent oracle: max{t : (u, t) in conv(support)} by Caratheodory,
// maximizing the lifted value over all simplices of support points whose
// projection contains u
std::optional<Rat> hull_max_2d(const std::vector<Vec>& support, const RatVec& u) {
  std::optional<Rat> best;
  auto consider = [&](const Rat& t) {
    if (!best || t > *best) best = t;
  };
  const size_t n = support.size();
  for (size_t i = 0; i < n; ++i) {
    if (Rat(support[i][0]) == u[0] && Rat(support[i][1]) == u[1])
      consider(Rat(support[i][2]));
    for (size_t j = i + 1; j < n; ++j) {
      // u on the projected segment: solve the 1-parameter combination
      Rat dx = Rat(support[j][0] - support[i][0]), dy = Rat(support[j][1] - support[i][1]);
      Rat rx = u[0] - Rat(support[i][0]), ry = u[1] - Rat(support[i][1]);
      if (dx * ry == dy * rx && (dx != 0 || dy != 0)) {
        Rat lam = dx != 0 ? rx / dx : ry / dy;
        if (lam >= 0 && lam <= 1)
          consider(Rat(support[i][2]) + lam * Rat(support[j][2] - support[i][2]));
      }
      for (size_t k = j + 1; k < n; ++k) {
        // barycentric coordinates of u in the projected triangle (i, j, k)
        Rat ax = Rat(support[i][0]), ay = Rat(support[i][1]);
        Rat bx = Rat(support[j][0]), by = Rat(support[j][1]);
        Rat cx = Rat(support[k][0]), cy = Rat(support[k][1]);
        Rat det = (bx - ax) * (cy - ay) - (cx - ax) * (by - ay);
        if (det == 0) continue;
        Rat l2 = ((u[0] - ax) * (cy - ay) - (cx - ax) * (u[1] - ay)) / det;
        Rat l3 = ((bx - ax) * (u[1] - ay) - (u[0] - ax) * (by - ay)) / det;
        Rat l1 = Rat(1) - l2 - l3;
        if (l1 < 0 || l2 < 0 || l3 < 0) continue;
        consider(l1 * Rat(support[i][2]) + l2 * Rat(support[j][2]) + l3 * Rat(support[k][2]));
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("hull and piece formulations agree at random points") {
  auto [cross, cert] = cross_example(2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-8, 8);
  const PLFunction& f = cross.functions()[7];  // the sheared last function
  int checked = 0;
  while (checked < 1000) {
    RatVec u{Rat(num(rng), 9), Rat(num(rng), 9)};
    if (!f.base().contains(u)) continue;
    ++checked;
    auto hull = hull_max_2d(f.support_points(), u);
    REQUIRE(hull.has_value());
    CHECK(*hull == f.evaluate(u));
  }
}

TEST_CASE("concavity at random midpoints") {
  CDP row8 = load_fixture("table2_row08.cdp.json");
  const PLFunction& f = row8.functions()[3];
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int t = 0; t < 500; ++t) {
    Rat u(num(rng), 12), w(num(rng), 12);
    Rat mid = (u + w) / 2;
    CHECK(f.evaluate({mid}) * 2 >= f.evaluate({u}) + f.evaluate({w}));
  }
}

TEST_CASE("is_integral") {
  auto base = segment(-1, 1);
  PLFunction half = pl1(base, {{-1, 0}, {1, 1}});
  CHECK_FALSE(is_integral(half, 0));

  PLFunction one = pl1(base, {{-1, 1}, {1, 1}});
  CHECK(is_integral(one, 0));

  CDP row12 = load_fixture("table3_row12.cdp.json");
  CHECK(is_integral(row12.functions()[0], 0));

  // precondition: f + shift must be at height one
  CHECK_THROWS_AS(is_integral(one, 3), std::invalid_argument);
}

TEST_CASE("is_linear_along") {
  auto base = segment(-1, 1);
  CHECK(is_linear_along(pl1(base, {{-1, 1}, {1, 1}}), {Int(1)}));
  CHECK_FALSE(is_linear_along(pl1(base, {{-1, 1}, {0, 1}, {1, 0}}), {Int(1)}));

  auto [cross, cert] = cross_example(2);
  // min{1, x1+1} restricts to the constant 1 on the e2 axis
  CHECK(is_linear_along(cross.functions()[0], {Int(0), Int(1)}));
  CHECK_FALSE(is_linear_along(cross.functions()[0], {Int(1), Int(0)}));
}
