#include "doctest.h"
#include "fairdiv/lemmas.hpp"

using namespace fairdiv;

TEST_CASE("deadline count bounds at hand-evaluated points") {
  // n=3, d=4: every floor term vanishes against 2H_3 = 11/3
  CHECK(deadline_count_bound(3, 4) == 0);

  // n=2: 2H_2(n-i+1) gives strides 6 and 3
  CHECK(deadline_count_bound(2, 5) == 1);
  CHECK(refined_deadline_count_bound(2, 5) == 2);
  CHECK(refined_deadline_count_bound(2, 6) == 2);
  CHECK(refined_deadline_count_bound(2, 7) == 3);

  CHECK_THROWS_AS(deadline_count_bound(0, 5), Error);
  CHECK_THROWS_AS(deadline_count_bound(3, 3), Error);
}

TEST_CASE("scheduling inequalities hold on a medium grid") {
  const LemmaReport base = verify_deadline_inequality(12, 400);
  CHECK(base.verified());
  CHECK(base.checked == [] {
    long long total = 0;
    for (int n = 1; n <= 12; ++n) total += 400 - n;
    return total;
  }());

  const LemmaReport refined = verify_refined_deadline_inequality(10, 300);
  CHECK(refined.verified());

  const LemmaReport chain = verify_harmonic_chain(40);
  CHECK(chain.verified());
  CHECK(chain.checked == 37);
}

TEST_CASE("harmonic spot values used by the refinement") {
  CHECK(harmonic(12) == Rat(86021, 27720));
  CHECK(2 * harmonic(4) - 1 == Rat(19, 6));

  Rat tail;
  const Rat two_h3 = 2 * harmonic(3);
  for (int j = 1; j <= 9; ++j) tail += 1 / (two_h3 * j - 1);
  CHECK(tail == Rat(Int("19657653727"), Int("21402806880")));
  CHECK(tail <= 1);
}
