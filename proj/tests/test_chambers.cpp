#include <doctest.h>

#include "fockcryst/chambers.hpp"
#include "fockcryst/errors.hpp"

using namespace fockcryst;

namespace {
FockParam two(long s2) { return FockParam::rational(Rat(-1, 2), {Rat(0), Rat(s2)}); }
}  // namespace

TEST_CASE("wall positions in charge coordinates") {
  CHECK(wall_position(Wall{0, 1, 2}, two(-4)) == Rat(1));
  CHECK(wall_position(Wall{0, 1, 2}, two(-2)) == Rat(-1));
  CHECK(wall_position(Wall{0, 1, 0}, two(0)) == Rat(-1));
}

TEST_CASE("essential wall enumeration") {
  auto walls = essential_walls(two(-4), 3);
  REQUIRE(walls.size() == 3);
  CHECK(walls[0].m == -2);
  CHECK(walls[1].m == 0);
  CHECK(walls[2].m == 2);
  CHECK(essential_walls(FockParam::rational(Rat(-1, 2), {Rat(0)}), 5).empty());
  auto odd = essential_walls(FockParam::rational(Rat(-1, 2), {Rat(0), Rat(-1)}), 3);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0].m == -1);
  CHECK(odd[1].m == 1);
}

TEST_CASE("asymptotic predicate") {
  CHECK(is_asymptotic(two(-4), 1, 3));
  CHECK(!is_asymptotic(two(-2), 1, 3));
  CHECK(!is_asymptotic(two(-4), 1, 4));
  CHECK(is_asymptotic(FockParam::rational(Rat(-1, 2), {Rat(0)}), 0, 100));
}

TEST_CASE("path planning walks to the asymptotic chamber") {
  CHECK(plan_path(two(-4), 1, 3).steps.empty());
  CHECK(plan_path(two(-4), 1, 3).target_s == two(-4).charges());

  auto from4 = plan_path(two(2), 1, 3);
  REQUIRE(from4.steps.size() == 3);
  CHECK(from4.steps[0].wall.m == -2);
  CHECK(from4.steps[1].wall.m == 0);
  CHECK(from4.steps[2].wall.m == 2);

  auto from3 = plan_path(two(0), 1, 3);
  REQUIRE(from3.steps.size() == 2);
  CHECK(from3.steps[0].wall.m == 0);
  CHECK(from3.steps[1].wall.m == 2);

  // a walk whose moves cross no wall still reaches the asymptotic chamber
  auto quiet = plan_path(two(-3), 1, 3);
  CHECK(quiet.steps.empty());
  CHECK(quiet.target_s[1] == Rat(-5));
  CHECK(is_asymptotic(two(-3).with_charges(quiet.target_s), 1, 3));

  // steps chain and end asymptotic
  for (auto* path : {&from4, &from3}) {
    for (size_t k = 0; k + 1 < path->steps.size(); ++k) {
      const auto& a = path->steps[k];
      const auto& b = path->steps[k + 1];
      bool same_segment = a.source_s == b.source_s && a.target_s == b.target_s;
      bool chained = a.target_s == b.source_s;
      CHECK((same_segment || chained));
      if (same_segment) CHECK(a.t_cross < b.t_cross);
    }
    FockParam base = two(0);
    CHECK(is_asymptotic(base.with_charges(path->target_s), 1, 3));
  }

  // every visited lattice parameter stays off every wall
  for (const auto& step : from4.steps)
    for (const auto& w : essential_walls(two(2), 3)) {
      FockParam base = two(2);
      CHECK(wall_position(w, base.with_charges(step.source_s)).sign() != 0);
      CHECK(wall_position(w, base.with_charges(step.target_s)).sign() != 0);
    }
}

TEST_CASE("one lattice move can meet walls of two different pairs") {
  FockParam p = FockParam::rational(Rat(-1, 2), {Rat(5), Rat(0), Rat(-2)});
  auto planned = plan_path(p, 2, 8);
  bool found = false;
  for (size_t k = 0; k + 1 < planned.steps.size(); ++k) {
    const auto& a = planned.steps[k];
    const auto& b = planned.steps[k + 1];
    if (a.source_s == b.source_s && a.target_s == b.target_s) {
      found = true;
      CHECK(a.t_cross < b.t_cross);
      CHECK(!(a.wall == b.wall));
    }
  }
  CHECK(found);
  CHECK(is_asymptotic(p.with_charges(planned.target_s), 2, 8));
}

TEST_CASE("path reversal restores the original parameter") {
  FockParam p = two(2);
  auto path = plan_path(p, 1, 3).steps;
  auto back = reverse_path(path);
  REQUIRE(back.size() == path.size());
  CHECK(back.front().source_s == path.back().target_s);
  CHECK(back.back().target_s == p.charges());
  for (size_t k = 0; k < back.size(); ++k) {
    CHECK(back[k].direction == -path[path.size() - 1 - k].direction);
    CHECK(back[k].position_before == -path[path.size() - 1 - k].position_before);
  }
}

TEST_CASE("planner rejects unusable parameters") {
  CHECK_THROWS_AS(plan_path(FockParam::generic_negative({Rat(0), Rat(1)}), 1, 3),
                  ComputationError);
  CHECK_THROWS_AS(essential_walls(FockParam::rational(Rat(0), {Rat(0), Rat(1)}), 3),
                  ComputationError);
}
