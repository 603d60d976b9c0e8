#include "crgstir/involution.hpp"
#include "test_util.hpp"

using namespace crgstir;

namespace {

OrderedPartition sup(const char* s) { return parse_ordered(s, 3, Flavor::Super); }
OrderedPartition cr(const char* s) { return parse_ordered(s, 3, Flavor::CR); }

void check_pair(const OrderedPartition& a, const OrderedPartition& b, int M) {
  CHECK(split(a, M) == b);
  CHECK(merge(b, M) == a);
  InvolutionStep fwd = iota(a);
  CHECK(fwd.action == StepAction::Split);
  CHECK(fwd.pivot == M);
  CHECK(fwd.output == b);
  InvolutionStep back = iota(b);
  CHECK(back.action == StepAction::Merge);
  CHECK(back.output == a);
}

}  // namespace

TEST_CASE("super split/merge examples") {
  check_pair(sup("(0 1^2 1^0 1^1 3^1 3^2 3^0 | 2^0/2^1/2^2)"), sup("(0 1^2 1^0 1^1 | 3^2/3^0/3^1 | 2^0/2^1/2^2)"), 3);
  check_pair(sup("(0 1^2 1^0 1^1 | 2^0 3^1/2^1 3^2/2^2 3^0)"), sup("(0 1^2 1^0 1^1 | 2^0/2^1/2^2 | 3^2/3^0/3^1)"), 3);
  check_pair(sup("(0 1^2 1^0 1^1 | 2^0 3^0/2^1 3^1/2^2 3^2)"), sup("(0 1^2 1^0 1^1 | 3^1/3^2/3^0 | 2^0/2^1/2^2)"), 3);
}

TEST_CASE("CR split/merge examples") {
  check_pair(cr("(0 1^1 1^2 1^0 3^1 3^2 3^0 | 2^0/2^1/2^2)"), cr("(0 1^2 1^0 1^1 | 3^0/3^1/3^2 | 2^0/2^1/2^2)"), 3);
  check_pair(cr("(0 1^1 1^2 1^0 | 2^0 3^1/2^1 3^2/2^2 3^0)"), cr("(0 1^1 1^2 1^0 | 2^0/2^1/2^2 | 3^0/3^1/3^2)"), 3);
  check_pair(cr("(0 1^1 1^2 1^0 | 2^0 3^0/2^1 3^1/2^2 3^2)"), cr("(0 1^1 1^2 1^0 | 3^2/3^0/3^1 | 2^0/2^1/2^2)"), 3);

  auto stuck = cr("(0 | 1^2/1^0/1^1 | 2^1/2^2/2^0 | 3^1/3^2/3^0)");
  CHECK(iota(stuck).action == StepAction::Fixed);
  CHECK_THROWS_AS(merge(stuck, 3), InvolutionError);
  CHECK_THROWS_AS(split(stuck, 3), InvolutionError);
  CHECK_THROWS_AS(split(stuck, 2), InvolutionError);
}

TEST_CASE("errors name the blocker") {
  auto w = sup("(0 | 1^1/1^2/1^0 | 2^1/2^2/2^0)");
  CHECK_THROWS_WITH_AS(split(w, 2), doctest::Contains("singleton"), InvolutionError);
  CHECK_THROWS_WITH_AS(merge(sup("(0 | 1^0 2^0/1^1 2^1/1^2 2^2)"), 2), doctest::Contains("size >= 2"), InvolutionError);
  CHECK_THROWS_WITH_AS(merge(w, 1), doctest::Contains("larger maximum base"), InvolutionError);
  CHECK_THROWS_AS(split(w, 7), InvolutionError);
}

TEST_CASE("fixed points") {
  CHECK(iota(sup("(0 | 1^1/1^2/1^0 | 2^1/2^2/2^0 | 3^1/3^2/3^0)")).action == StepAction::Fixed);
  CHECK(iota(cr("(0 | 1^1/1^2/1^0 | 2^2/2^0/2^1)")).action == StepAction::Fixed);
  CHECK(iota(sup("(0 | 1^0 2^0/1^1 2^1/1^2 2^2)")).action == StepAction::Split);
  CHECK(iota(cr("(0 | 1^0 2^1/1^1 2^2/1^2 2^0)")).action == StepAction::Split);
}

TEST_CASE("verify_cancellation examples") {
  auto r = verify_cancellation(2, 2, Flavor::Super);
  CHECK(r.report.status == Status::Verified);
  CHECK(r.fixed_sum == IntPoly(1));
  auto c = verify_cancellation(3, 1, Flavor::CR);
  CHECK(c.report.status == Status::Verified);
  CHECK(c.fixed_sum == q_bracket(2));
  REQUIRE(c.fixed_points.size() == 2);
  CHECK(c.fixed_points[0].to_string() + " " + c.fixed_points[1].to_string() ==
        "(0 | 1^1/1^2/1^0) (0 | 1^2/1^0/1^1)");
  for (Flavor f : {Flavor::Super, Flavor::CR}) {
    auto z = verify_cancellation(3, 0, f);
    CHECK(z.report.status == Status::Verified);
    CHECK(z.total == 1);
    CHECK(z.fixed_sum == IntPoly(1));
  }
}

TEST_CASE("exhaustive cancellation, m<=3 n<=4, both flavors") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto s = verify_cancellation(m, n, Flavor::Super);
      INFO("super m=" << m << " n=" << n << " " << s.report.witness);
      CHECK(s.report.status == Status::Verified);
      CHECK(s.signed_sum == alternating_sum(OrderedVariant::Super, m, n));
      CHECK(s.fixed_points.size() == 1);
      CHECK(2 * s.two_cycles + static_cast<long>(s.fixed_points.size()) == s.total);

      auto c = verify_cancellation(m, n, Flavor::CR);
      INFO("cr m=" << m << " n=" << n << " " << c.report.witness);
      CHECK(c.report.status == Status::Verified);
      if (m >= 2) CHECK(c.signed_sum == alternating_sum(OrderedVariant::CR, m, n));
      CHECK(2 * c.two_cycles + static_cast<long>(c.fixed_points.size()) == c.total);
    }
}

TEST_CASE("split at the pivot changes inv by 1 (super) and m-1 (CR)") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (Flavor f : {Flavor::Super, Flavor::CR})
        for (int k = 0; k <= n; ++k)
          for_each_ordered(m, n, k, f, [&](const OrderedPartition& w) {
            auto step = iota(w);
            if (step.action != StepAction::Split) return;
            const auto& s = step.output;
            CHECK(s.k() == w.k() + 1);
            CHECK(inv(s) - inv(w) == (f == Flavor::Super ? 1 : m - 1));
            CHECK(!splittable(s, step.pivot));
            CHECK(mergeable(s, step.pivot));
            CHECK(merge(s, step.pivot) == w);
          });
}
