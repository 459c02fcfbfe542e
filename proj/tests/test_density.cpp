#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "planch/density.hpp"
#include "planch/errors.hpp"

using namespace planch;

namespace {

FundamentalInvariants principal(long long q, int e) {
  CuspidalDatum c;
  c.m = 1;
  c.e = e;
  c.r = 1;
  c.d = FormalDegreeSpec::derive();
  c.delta = HalfInt(0);
  c.f_self = 0;
  FundamentalInvariants inv;
  inv.q = q;
  inv.cuspidals = {c};
  inv.cross_conductors = {{0}};
  return inv;
}

}  // namespace

TEST_CASE("component catalogs") {
  CHECK(enumerate_components(principal(2, 1)).size() == 1);
  CHECK(enumerate_components(principal(2, 5)).size() == 7);

  SUBCASE("two blocks multiply, last block fastest") {
    FundamentalInvariants inv = principal(2, 2);
    inv.cuspidals.push_back(inv.cuspidals[0]);
    inv.cross_conductors = {{0, 1}, {1, 0}};
    auto comps = enumerate_components(inv);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].selector() == "2|2");
    CHECK(comps[1].selector() == "2|1+1");
    CHECK(comps[2].selector() == "1+1|2");
    CHECK(comps[3].selector() == "1+1|1+1");
  }

  SUBCASE("segments carry canonical torus coordinates") {
    FundamentalInvariants inv = principal(2, 3);
    ComponentSpec spec(inv, {Partition({2, 1})});
    REQUIRE(spec.segments.size() == 2);
    CHECK(spec.segments[0].seg.l == 2);
    CHECK(spec.segments[0].torus == 0);
    CHECK(spec.segments[1].seg.l == 1);
    CHECK(spec.segments[1].torus == 1);
    CHECK(spec.selector() == "2+1");
    CHECK(spec.levi().blocks == std::vector<int>{2, 1});
    CHECK(spec.levi().total() == 3);
  }
}

TEST_CASE("density of the unramified components of GL(2)") {
  FundamentalInvariants inv = principal(3, 2);

  SUBCASE("principal series component") {
    ComponentSpec spec(inv, {Partition({1, 1})});
    DensityReport rep = density(spec);

    CHECK(rep.selector == "1+1");
    CHECK(rep.torus_dim == 2);
    QRatio q = QRatio::q_pow(HalfInt(1));
    CHECK(rep.constant == (q + QRatio(1)) / q);
    REQUIRE(rep.formal_degree.is_exact());
    CHECK(rep.formal_degree.exact() == QRatio::one());
    CHECK(rep.canonical_mass == BigRat(1));
    CHECK(rep.effective_quotient_order == 2);
    CHECK(rep.centralizer_order == 2);

    FactoredFn want;
    want.push_abs_sq(0, 1, HalfInt(0), 1);
    want.push_abs_sq(0, 1, HalfInt(-1), -1);
    CHECK(rep.factors == want.factors());
  }

  SUBCASE("Steinberg component") {
    ComponentSpec spec(inv, {Partition({2})});
    DensityReport rep = density(spec);

    CHECK(rep.selector == "2");
    CHECK(rep.torus_dim == 1);
    CHECK(rep.constant == QRatio::one());
    REQUIRE(rep.formal_degree.is_exact());
    QRatio q = QRatio::q_pow(HalfInt(1));
    CHECK(rep.formal_degree.exact() == (q - QRatio(1)) / QRatio(2));
    CHECK(rep.factors.empty());
    CHECK(rep.canonical_mass == BigRat(2));
    CHECK(rep.effective_quotient_order == 1);
    CHECK(rep.centralizer_order == 2);
  }
}

TEST_CASE("density with a ramified cuspidal") {
  FundamentalInvariants inv;
  inv.q = 3;
  CuspidalDatum c;
  c.m = 2;
  c.e = 2;
  c.r = 2;
  c.d = FormalDegreeSpec::numeric_value(3.0);
  c.f_self = 5;
  inv.cuspidals = {c};
  inv.cross_conductors = {{0}};

  ComponentSpec spec(inv, {Partition({1, 1})});
  DensityReport rep = density(spec);

  CHECK(rep.selector == "1+1");
  QRatio gamma = gamma_factor(LeviShape({2, 2}));
  CHECK(rep.constant == gamma * QRatio::q_pow(HalfInt(5)));
  REQUIRE(!rep.formal_degree.is_exact());
  CHECK(rep.formal_degree.numeric() == doctest::Approx(9.0));
  CHECK(rep.canonical_mass == BigRat(1));

  FactoredFn want;
  want.push_abs_sq(0, 1, HalfInt(0), 1);
  want.push_abs_sq(0, 1, HalfInt(-2), -1);
  CHECK(rep.factors == want.factors());
}

TEST_CASE("density constant is gamma times conductor power") {
  // constant = gamma(G|M) q^{sum of pair conductors}: check against a
  // hand-assembled value on a two-block component.
  FundamentalInvariants inv = principal(2, 3);
  inv.cuspidals.push_back(inv.cuspidals[0]);
  inv.cuspidals[1].m = 2;
  inv.cuspidals[1].e = 1;
  inv.cuspidals[1].r = 1;
  inv.cuspidals[1].delta = HalfInt(2);
  inv.cuspidals[1].f_self = 5;
  inv.cross_conductors = {{0, 2}, {2, 0}};

  ComponentSpec spec(inv, {Partition({2, 1}), Partition({1})});
  DensityReport rep = density(spec);
  CHECK(rep.selector == "2+1|1");
  CHECK(rep.levi.blocks == std::vector<int>{2, 1, 2});

  // l_a l_b f over pairs: (2,1) same block f=0 -> 0; (2,1') cross f=2 ->
  // 2*1*2 = 4; (1,1') cross -> 1*1*2 = 2. Total 6.
  QRatio gamma = gamma_factor(LeviShape({2, 1, 2}));
  CHECK(rep.constant == gamma * QRatio::q_pow(HalfInt(6)));
}

TEST_CASE("Hecke-normalized density") {
  SUBCASE("GL(1)") {
    HeckeDensity h = hecke_density(1, Partition({1}));
    CHECK(h.report.factors.empty());
    CHECK(h.explicit_constant == QRatio::one());
  }

  SUBCASE("GL(2) principal") {
    HeckeDensity h = hecke_density(2, Partition({1, 1}));
    QRatio q = QRatio::q_pow(HalfInt(1));
    CHECK(h.report.constant == iwahori_volume(2) * (q + QRatio(1)) / q);
    CHECK(h.explicit_constant == QRatio::q_pow(HalfInt(-1)));
  }

  SUBCASE("GL(2) Steinberg") {
    HeckeDensity h = hecke_density(2, Partition({2}));
    QRatio q = QRatio::q_pow(HalfInt(1));
    REQUIRE(h.report.formal_degree.is_exact());
    CHECK(h.report.formal_degree.exact() == (q - QRatio(1)) / QRatio(2));
    CHECK(h.report.constant == iwahori_volume(2));
    // q^{(4-4)/2}... explicit: q^{(l^2-l)/2}(q-1)^l/(l(q^l-1)) * q^{(n-n^2)/2}
    QRatio want = QRatio::q_pow(HalfInt(1)) * (q - QRatio(1)) * (q - QRatio(1)) /
                  (QRatio(2) * (q * q - QRatio(1))) * QRatio::q_pow(HalfInt(-1));
    CHECK(h.explicit_constant == want);
  }

  SUBCASE("structural equals explicit for all components up to GL(5)") {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& p : partitions_of(n)) {
        HeckeDensity h = hecke_density(n, p);
        Scalar total = h.report.formal_degree;
        total.mul(Scalar(h.report.constant), 2.0);
        REQUIRE(total.is_exact());
        CHECK(total.exact() == h.explicit_constant);
      }
  }
}

TEST_CASE("Macdonald form") {
  CHECK(macdonald_form(1) == FactoredFn());

  FactoredFn m2 = macdonald_form(2);
  FactoredFn want;
  want.push_abs_sq(0, 1, HalfInt(0), 1);
  want.push_abs_sq(0, 1, HalfInt(-1), -1);
  CHECK(m2 == want);

  CHECK(macdonald_form(3).factors().size() == 12);

  SUBCASE("agrees with the principal-series density") {
    for (int n = 2; n <= 4; ++n) {
      std::vector<int> ones(n, 1);
      ComponentSpec spec(principal(2, n), {Partition(ones)});
      DensityReport rep = density(spec);
      CHECK(rep.factors == macdonald_form(n).factors());
    }
  }
}

TEST_CASE("component masses") {
  SUBCASE("GL(1) is a point mass") {
    ComponentSpec spec(principal(3, 1), {Partition({1})});
    CHECK(integrate(spec, 3.0, 64) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("GL(2) principal component has mass 1") {
    for (long long q : {2, 3, 4, 5}) {
      ComponentSpec spec(principal(q, 2), {Partition({1, 1})});
      CHECK(integrate(spec, static_cast<double>(q), 256) ==
            doctest::Approx(1.0).epsilon(1e-6));
    }
  }

  SUBCASE("GL(2) Steinberg component has mass q - 1") {
    ComponentSpec spec(principal(2, 2), {Partition({2})});
    CHECK(integrate(spec, 2.0, 16) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("masses sum to the Plancherel volume of the unramified dual") {
    // GL(2): 1 + (q-1) = q; the whole tempered dual in this normalization
    // has volume vol(I)^{-1} * q^{(n-n^2)/2} ... spot value at q = 3:
    // components 1 and q-1 = 2 sum to 3.
    double total = 0.0;
    for (const ComponentSpec& spec : enumerate_components(principal(3, 2)))
      total += integrate(spec, 3.0, 256);
    CHECK(total == doctest::Approx(3.0).epsilon(1e-6));
  }

  SUBCASE("input guards") {
    ComponentSpec spec(principal(2, 2), {Partition({1, 1})});
    CHECK_THROWS_AS(integrate(spec, 2.0, 4), InputError);
    CHECK_THROWS_AS(integrate(spec, 1.0, 64), SingularityError);
    CHECK_THROWS_AS(integrate(spec, 0.5, 64), SingularityError);
  }
}
