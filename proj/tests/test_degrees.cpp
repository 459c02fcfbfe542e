#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "planch/degrees.hpp"
#include "planch/errors.hpp"
#include "planch/groupdata.hpp"

using namespace planch;

namespace {

CuspidalDatum datum(int m, int r, int delta) {
  CuspidalDatum c;
  c.m = m;
  c.e = 1;
  c.r = r;
  c.d = FormalDegreeSpec::derive();
  c.delta = HalfInt(delta);
  return c;
}

}  // namespace

TEST_CASE("Steinberg formal degrees") {
  CHECK(steinberg_fd(1).is_one());
  CHECK(steinberg_fd(2).expand() == (QRatio::q_pow(HalfInt(1)) - QRatio(1)) / QRatio(2));
  CHECK(steinberg_fd(3).eval_at_q(2.0) == doctest::Approx(1.0));  // (1/3)(1)(3)
  for (int l = 1; l <= 12; ++l) CHECK(steinberg_fd(l) == steinberg_fd_group_form(l));
}

TEST_CASE("generalized Steinberg degree ratio") {
  SUBCASE("degenerate cases") {
    CHECK(fd_ratio(1, 1, 1, 0).is_one());
    CHECK(fd_ratio(3, 1, 3, 17).is_one());
    CHECK(fd_ratio(1, 2, 1, 0) == steinberg_fd(2));
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(fd_ratio(1, 0, 1, 0), InputError);
    CHECK_THROWS_AS(fd_ratio(3, 2, 2, 0), InputError);
    CHECK_THROWS_AS(fd_ratio(1, 2, 1, -1), InputError);
  }

  SUBCASE("the alternate shapes agree") {
    for (int m = 1; m <= 4; ++m)
      for (int r = 1; r <= m; ++r) {
        if (m % r != 0) continue;
        for (int e = 1; e <= 4; ++e)
          for (int delta = 0; delta <= 6; delta += 2) {
            long long f = delta + static_cast<long long>(m) * m - r;
            CHECK(fd_ratio(m, e, r, f) == fd_ratio_steinberg_form(m, e, r, f));
            CHECK(fd_ratio(m, e, r, f) ==
                  fd_ratio_discriminant_form(m, e, r, HalfInt(delta)));
          }
      }
  }

  SUBCASE("conductor-free form carries the d(sigma)^{e^2} scaling") {
    for (int m = 1; m <= 3; ++m)
      for (int e = 1; e <= 3; ++e)
        for (int delta = 0; delta <= 4; delta += 2) {
          CuspidalDatum c = datum(m, 1, delta);
          long long f = resolved_conductor(c);
          QFactored dsig = fd_generalized_steinberg_exact(c, 1);
          QFactored lhs = fd_ratio(m, e, 1, f) * dsig.pow(e);
          QFactored rhs = fd_ratio_conductor_free(m, e, 1) * dsig.pow(e * e);
          CHECK(lhs == rhs);
        }
  }

  SUBCASE("positive at every admissible q") {
    for (int e = 1; e <= 5; ++e)
      for (double q : {2.0, 3.0, 9.0})
        CHECK(fd_ratio(2, e, 2, 4).eval_at_q(q) > 0.0);
  }
}

TEST_CASE("exact generalized Steinberg degree") {
  SUBCASE("closed form specializations") {
    CuspidalDatum triv = datum(1, 1, 0);
    CHECK(fd_generalized_steinberg_exact(triv, 1).is_one());
    CHECK(fd_generalized_steinberg_exact(triv, 2) == steinberg_fd(2));
    for (int l = 1; l <= 8; ++l)
      CHECK(fd_generalized_steinberg_exact(triv, l) == steinberg_fd(l));

    CuspidalDatum c = datum(2, 2, 0);
    CHECK(fd_generalized_steinberg_exact(c, 2) ==
          QFactored::from_rational(BigRat(2)) * steinberg_fd(4));
  }

  SUBCASE("consistency with the cuspidal degree and the ratio") {
    for (int m = 1; m <= 4; ++m)
      for (int r = 1; r <= m; ++r) {
        if (m % r != 0) continue;
        for (int l = 1; l <= 3; ++l)
          for (int delta = 0; delta <= 4; delta += 2) {
            CuspidalDatum c = datum(m, r, delta);
            QFactored dsig = fd_generalized_steinberg_exact(c, 1);
            QFactored via_ratio =
                fd_ratio(m, l, r, resolved_conductor(c)) * dsig.pow(l);
            CHECK(fd_generalized_steinberg_exact(c, l) == via_ratio);
          }
      }
  }

  SUBCASE("l = 1 recovers the derived cuspidal degree") {
    for (int m = 1; m <= 4; ++m)
      for (int delta = 0; delta <= 4; delta += 2) {
        CuspidalDatum c = datum(m, 1, delta);
        CHECK(fd_generalized_steinberg_exact(c, 1).expand() ==
              derive_formal_degree(c));
      }
  }
}

TEST_CASE("mode dispatch") {
  SUBCASE("derive path") {
    CuspidalDatum c = datum(1, 1, 0);
    Scalar s = fd_generalized_steinberg(c, 2, 3);
    REQUIRE(s.is_exact());
    CHECK(s.exact() == (QRatio::q_pow(HalfInt(1)) - QRatio(1)) / QRatio(2));
  }

  SUBCASE("exact d composes with the ratio") {
    CuspidalDatum c = datum(2, 2, 0);
    c.d = FormalDegreeSpec::exact_value(derive_formal_degree(datum(2, 2, 0)));
    Scalar s = fd_generalized_steinberg(c, 2, 3);
    REQUIRE(s.is_exact());
    CHECK(s.exact() ==
          (QFactored::from_rational(BigRat(2)) * steinberg_fd(4)).expand());
  }

  SUBCASE("numeric d scales the ratio evaluated at q") {
    CuspidalDatum c = datum(2, 2, 2);
    long long f = resolved_conductor(c);  // 2 + 4 - 2 = 4
    CHECK(f == 4);
    double dq = derive_formal_degree(c).eval_at_q(3.0);
    CuspidalDatum n;
    n.m = 2;
    n.e = 1;
    n.r = 2;
    n.d = FormalDegreeSpec::numeric_value(dq);
    n.f_self = f;
    Scalar s = fd_generalized_steinberg(n, 2, 3);
    REQUIRE(!s.is_exact());
    Scalar exact = fd_generalized_steinberg(c, 2, 3);
    CHECK(s.numeric() == doctest::Approx(exact.eval_at_q(3.0)).epsilon(1e-12));
  }

  SUBCASE("nothing applies") {
    CuspidalDatum c;
    c.m = 2;
    c.e = 1;
    c.r = 1;
    c.f_self = 3;
    CHECK_THROWS_AS(fd_generalized_steinberg(c, 2, 3), MissingDataError);
  }
}

TEST_CASE("degree products") {
  Scalar one = Scalar::one();
  Scalar half = Scalar(QRatio(1) / QRatio(2));
  Scalar qm1 = Scalar(QRatio::q_pow(HalfInt(1)) - QRatio(1));

  CHECK(fd_product({}, 2).is_exact());
  CHECK(fd_product({}, 2).exact() == QRatio::one());
  CHECK(fd_product({qm1}, 2).exact() == QRatio::q_pow(HalfInt(1)) - QRatio(1));

  Scalar p = fd_product({half, qm1, half}, 2);
  REQUIRE(p.is_exact());
  CHECK(p.exact() == (QRatio::q_pow(HalfInt(1)) - QRatio(1)) / QRatio(4));

  Scalar mixed = fd_product({half, Scalar(3.0), one}, 5);
  REQUIRE(!mixed.is_exact());
  CHECK(mixed.numeric() == doctest::Approx(1.5));
}
