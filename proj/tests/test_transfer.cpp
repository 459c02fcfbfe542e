#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "planch/degrees.hpp"
#include "planch/errors.hpp"
#include "planch/transfer.hpp"

using namespace planch;

namespace {

FundamentalInvariants single(long long q, int m, int e, int r, int delta) {
  CuspidalDatum c;
  c.m = m;
  c.e = e;
  c.r = r;
  c.d = FormalDegreeSpec::derive();
  c.delta = HalfInt(delta);
  FundamentalInvariants inv;
  inv.q = q;
  inv.cuspidals = {c};
  inv.cross_conductors = {{0}};
  return inv;
}

}  // namespace

TEST_CASE("measure transfer constants") {
  CHECK(lambda_DF(1, 4).is_one());
  CHECK(lambda_DF(2, 3) == (QFactored::q_pow_minus_one(1, 1) * QFactored::q_pow_minus_one(3, 1) *
                            QFactored::q_pow_minus_one(5, 1))
                               .inverse());
  CHECK(lambda_DF(2, 1).expand() ==
        QRatio::one() / (QRatio::q_pow(HalfInt(1)) - QRatio(1)));

  SUBCASE("cancellation against split Steinberg degrees") {
    // lambda * prod_{j<n}(q^j - 1) = prod_{j<n'}(q^{dj} - 1)
    for (int d = 1; d <= 4; ++d)
      for (int np = 1; np <= 4; ++np) {
        int n = d * np;
        QFactored split;
        for (int j = 1; j < n; ++j) split *= QFactored::q_pow_minus_one(j, 1);
        QFactored division;
        for (int j = 1; j < np; ++j) division *= QFactored::q_pow_minus_one(static_cast<long long>(d) * j, 1);
        CHECK(lambda_DF(d, np) * split == division);
      }
  }
}

TEST_CASE("division algebra Steinberg degrees") {
  for (int np = 1; np <= 6; ++np) CHECK(steinberg_fd_division(1, np) == steinberg_fd(np));
  CHECK(steinberg_fd_division(2, 1) == QFactored::from_rational(BigRat(1, 2)));
  CHECK(steinberg_fd_division(2, 2).eval_at_q(2.0) == doctest::Approx(0.75));

  SUBCASE("Jacquet-Langlands closure") {
    // deg St(GL(n', D)) = lambda * deg St(GL(n, F)) after matching the
    // normalizations: both equal (1/n) prod over the surviving exponents.
    for (int d = 1; d <= 3; ++d)
      for (int np = 1; np <= 3; ++np)
        CHECK(steinberg_fd_division(d, np) == lambda_DF(d, np) * steinberg_fd(d * np));
  }
}

TEST_CASE("transferred densities") {
  SUBCASE("d = 1 is the identity") {
    ComponentSpec spec = iwahori_component(3, 2, Partition({2, 1}));
    DensityReport rep = density(spec);
    DensityReport moved = transfer_density(rep, 1, 3);
    CHECK(moved.constant == rep.constant);
    CHECK(moved.factors == rep.factors);
  }

  SUBCASE("Steinberg circle of GL(2) onto the quaternionic unit group") {
    ComponentSpec spec = iwahori_component(2, 2, Partition({2}));
    DensityReport rep = density(spec);
    DensityReport moved = transfer_density(rep, 2, 1);
    CHECK(moved.factors == rep.factors);
    CHECK(moved.constant ==
          rep.constant / (QRatio::q_pow(HalfInt(1)) - QRatio(1)));
    REQUIRE(moved.formal_degree.is_exact());
    CHECK(moved.formal_degree.exact() == rep.formal_degree.exact());
  }

  SUBCASE("size mismatch is rejected") {
    ComponentSpec spec = iwahori_component(3, 2, Partition({3}));
    DensityReport rep = density(spec);
    CHECK_THROWS_AS(transfer_density(rep, 2, 2), InputError);
  }
}

TEST_CASE("kappa against the Iwahori reference") {
  SUBCASE("the Iwahori component compares to itself") {
    for (int e = 1; e <= 4; ++e)
      for (const Partition& p : partitions_of(e)) {
        ComponentSpec spec(single(3, 1, e, 1, 0), {p});
        KappaResult k = kappa(spec);
        CHECK(k.kappa == QRatio::one());
        CHECK(k.iwahori_volume_ref == iwahori_volume(e));
        CHECK(k.normalized_volume == iwahori_volume(e));
      }
  }

  SUBCASE("unramified twist lattice of a ramified cuspidal") {
    // m = 2, r = 2, e = 2, delta = 2, so f = 2 + 4 - 2 = 4. kappa glues
    // gamma factors of F against gamma factors of K (q -> q^2), the
    // conductor power, the mass (m/r)^2 = 1 and d(sigma)^2.
    ComponentSpec spec(single(3, 2, 2, 2, 2), {Partition({1, 1})});
    KappaResult k = kappa(spec);

    QRatio dsig = derive_formal_degree(spec.inv.cuspidals[0]);
    QRatio gamma_f = gamma_factor(LeviShape({2, 2}));
    QRatio gamma_k = gamma_factor(LeviShape({1, 1})).substitute_q_pow(2);
    QRatio want = QRatio::q_pow(HalfInt(4)) * gamma_f / gamma_k * dsig * dsig;
    CHECK(k.kappa == want);

    CHECK(k.iwahori_volume_ref == iwahori_volume(2).substitute_q_pow(2));
    CHECK(k.normalized_volume == k.iwahori_volume_ref / k.kappa);
  }

  SUBCASE("torsion smaller than the degree") {
    // m = 2, r = 1, e = 2, delta = 2, f = 2 + 4 - 1 = 5; mass (m/r)^2 = 4.
    ComponentSpec spec(single(3, 2, 2, 1, 2), {Partition({1, 1})});
    KappaResult k = kappa(spec);

    QRatio dsig = derive_formal_degree(spec.inv.cuspidals[0]);
    QRatio gamma_f = gamma_factor(LeviShape({2, 2}));
    QRatio gamma_k = gamma_factor(LeviShape({1, 1}));
    QRatio want = QRatio(4) * QRatio::q_pow(HalfInt(5)) * gamma_f / gamma_k * dsig * dsig;
    CHECK(k.kappa == want);
  }

  SUBCASE("kappa is independent of the partition") {
    for (const Partition& p : partitions_of(3)) {
      ComponentSpec spec(single(2, 2, 3, 2, 4), {p});
      ComponentSpec ref(single(2, 2, 3, 2, 4), {Partition({3})});
      CHECK(kappa(spec).kappa == kappa(ref).kappa);
    }
  }

  SUBCASE("kappa_base carries the degree-free part") {
    ComponentSpec spec(single(3, 2, 2, 2, 2), {Partition({1, 1})});
    QRatio dsig = derive_formal_degree(spec.inv.cuspidals[0]);
    CHECK(kappa(spec).kappa == kappa_base(spec).expand() * dsig * dsig);
  }

  SUBCASE("numeric-only formal degrees cannot be compared exactly") {
    FundamentalInvariants inv = single(3, 2, 2, 2, 2);
    inv.cuspidals[0].d = FormalDegreeSpec::numeric_value(1.5);
    inv.cuspidals[0].delta.reset();
    inv.cuspidals[0].f_self = 4;
    ComponentSpec spec(inv, {Partition({1, 1})});
    CHECK_THROWS_AS(kappa(spec), MissingDataError);
  }

  SUBCASE("multiple cuspidal blocks have no single reference") {
    FundamentalInvariants inv = single(3, 1, 1, 1, 0);
    inv.cuspidals.push_back(inv.cuspidals[0]);
    inv.cross_conductors = {{0, 1}, {1, 0}};
    ComponentSpec spec(inv, {Partition({1}), Partition({1})});
    CHECK_THROWS_AS(kappa(spec), MixedCuspidalError);
  }
}
