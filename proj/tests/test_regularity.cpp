#include "doctest.h"
#include "pathend/generators.hpp"
#include "pathend/regularity.hpp"

using namespace pathend;

namespace {

// 1,2,3,2,3,4,...,n-2: an endomorphism with no witness interval once n >= 6.
Transformation end_witness(int n) {
  std::vector<int> img{1, 2, 3, 2};
  for (int x = 5; x <= n; ++x) img.push_back(x - 2);
  return Transformation(img);
}

}  // namespace

TEST_CASE("criterion basics") {
  auto r = regular_by_criterion(alpha(4, 1), EndoClass::End);
  CHECK(r.regular);
  CHECK(r.interval == Interval{2, 4});
  CHECK(regular_by_criterion(identity(5), EndoClass::End).interval == Interval{1, 5});
  CHECK(regular_by_criterion(reversal(5), EndoClass::End).interval == Interval{1, 5});
  CHECK(regular_by_criterion(constant(4, 2), EndoClass::WEnd).interval == Interval{1, 1});
  CHECK_THROWS_AS(regular_by_criterion(identity(4), EndoClass::SEnd), std::invalid_argument);
  CHECK_THROWS_AS(regular_by_criterion(constant(4, 2), EndoClass::End), std::invalid_argument);
}

TEST_CASE("the two boundary witnesses are not regular") {
  for (int n = 6; n <= 9; ++n) {
    auto t = end_witness(n);
    REQUIRE(is_in_class(t, EndoClass::End));
    CHECK_FALSE(regular_by_criterion(t, EndoClass::End).regular);
  }
  CHECK(end_witness(6) == Transformation({1, 2, 3, 2, 3, 4}));
  for (int n = 4; n <= 9; ++n)
    CHECK_FALSE(regular_by_criterion(gamma(n, 2), EndoClass::WEnd).regular);
  CHECK(gamma(4, 2) == Transformation({1, 2, 2, 3}));
}

TEST_CASE("criterion matches the monoid oracle exhaustively, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (auto c : {EndoClass::End, EndoClass::WEnd}) {
      auto m = enumerate_class(c, n);
      for (const auto& t : m.elements())
        CHECK(regular_by_criterion(t, c).regular == regular_by_oracle(t, m));
    }
  }
}

TEST_CASE("pseudo-inverse postconditions across whole classes, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_class(EndoClass::WEnd, n).elements()) {
      if (!regular_by_criterion(t, EndoClass::WEnd).regular) continue;
      auto b = pseudo_inverse(t);
      CHECK(is_in_class(b, EndoClass::End));
      CHECK(compose(compose(t, b), t) == t);
    }
  }
}

TEST_CASE("pseudo-inverse on handpicked shapes") {
  // identity and reversal invert themselves
  CHECK(pseudo_inverse(identity(5)) == identity(5));
  CHECK(pseudo_inverse(reversal(5)) == reversal(5));
  // constants accept any endomorphism as witness
  CHECK(pseudo_inverse(constant(6, 4)) == identity(6));
  // a decreasing witness interval
  Transformation dec({3, 2, 1, 2, 1});
  REQUIRE(regular_by_criterion(dec, EndoClass::End).regular);
  auto b = pseudo_inverse(dec);
  CHECK(compose(compose(dec, b), dec) == dec);
  CHECK(is_in_class(b, EndoClass::End));
  CHECK_THROWS_AS(pseudo_inverse(end_witness(6)), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_inverse(Transformation({1, 3, 1})), std::invalid_argument);
}

TEST_CASE("idempotents are regular") {
  for (const auto& t : enumerate_class(EndoClass::WEnd, 5).elements())
    if (compose(t, t) == t) CHECK(regular_by_criterion(t, EndoClass::WEnd).regular);
}

TEST_CASE("whole-class regularity boundaries") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(class_regular(EndoClass::WEnd, n).regular == (n <= 3));
    CHECK(class_regular(EndoClass::End, n).regular == (n <= 5));
  }
  auto fail = class_regular(EndoClass::WEnd, 4);
  REQUIRE(fail.counterexample.has_value());
  CHECK_FALSE(regular_by_criterion(*fail.counterexample, EndoClass::WEnd).regular);
  CHECK(class_regular(EndoClass::WEnd, 3).counterexample == std::nullopt);
}

TEST_CASE("oracle preconditions") {
  auto m = enumerate_class(EndoClass::End, 4);
  CHECK_THROWS_AS(regular_by_oracle(gamma(4, 1), m), std::invalid_argument);
  CHECK(regular_by_oracle(alpha(4, 1), m));
}
