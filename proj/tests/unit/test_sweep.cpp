#include "doctest.h"
#include "thinness/sweep.hpp"

using namespace thinness;

TEST_CASE("every theorem runs clean on small inputs") {
  SweepOptions opt;
  opt.n = 4;
  opt.samples = 20;
  opt.orders = 5;
  for (const std::string& t : sweep_theorems()) {
    if (t == "char-ind-2-thin") continue;
    SweepReport r = run_sweep(t, opt);
    CHECK_MESSAGE(r.ok(), t);
    CHECK_MESSAGE(r.checked > 0, t);
    CHECK(r.theorem == t);
  }
}

TEST_CASE("the P5,P6,P9 characterisation breaks at C6") {
  SweepOptions opt;
  opt.n = 5;
  CHECK(run_sweep("char-ind-2-thin", opt).ok());
  opt.n = 6;
  SweepReport r = run_sweep("char-ind-2-thin", opt);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.mismatches.empty());
  CHECK(r.mismatches.size() <= 20);
}

TEST_CASE("sweeps are reproducible") {
  SweepOptions opt;
  opt.n = 6;
  opt.samples = 30;
  opt.seed = 9;
  SweepReport a = run_sweep("ceo", opt), b = run_sweep("ceo", opt);
  CHECK(a.checked == b.checked);
  CHECK(a.failed == b.failed);
}

TEST_CASE("bad options") {
  SweepOptions opt;
  CHECK_THROWS_AS(run_sweep("nonsense", opt), InputError);
  opt.n = 8;
  CHECK_THROWS_AS(run_sweep("interval", opt), InputError);
  opt.n = 3;
  opt.orders = 0;
  CHECK_THROWS_AS(run_sweep("perfection", opt), InputError);
}
