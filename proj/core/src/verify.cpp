#include "planch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "planch/degrees.hpp"
#include "planch/density.hpp"
#include "planch/errors.hpp"
#include "planch/expr_parse.hpp"
#include "planch/transfer.hpp"

namespace planch {

namespace {

struct Checker {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::function<std::string()>& what) {
    if (!ok && pass) {
      pass = false;
      detail = what();
    }
  }
};

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::string shape_str(const std::vector<int>& blocks) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ',';
    os << blocks[i];
  }
  os << ')';
  return os.str();
}

CuspidalDatum grid_datum(int m, int r, long long delta) {
  CuspidalDatum c;
  c.m = m;
  c.r = r;
  c.d = FormalDegreeSpec::derive();
  c.delta = HalfInt(delta);
  return c;
}

FundamentalInvariants single_block(long long q, int m, int e, int r, long long delta) {
  CuspidalDatum c = grid_datum(m, r, delta);
  c.e = e;
  FundamentalInvariants inv;
  inv.q = q;
  inv.cuspidals = {c};
  inv.cross_conductors = {{0}};
  return inv;
}

// The cuspidal formal degree in factored form; must expand to
// derive_formal_degree.
QFactored cuspidal_fd_factored(const CuspidalDatum& c) {
  HalfInt delta = c.delta.value();
  QFactored out = QFactored::from_rational(BigRat(c.r));
  out *= QFactored::q_pow_minus_one(c.m, 1);
  out *= QFactored::q_pow_minus_one(c.r, -1);
  out *= QFactored::q_pow((HalfInt(c.r - c.m) + delta).halved());
  out *= steinberg_fd(c.m);
  return out;
}

std::vector<std::complex<double>> random_torus(std::mt19937& rng, int k) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::vector<std::complex<double>> z(k);
  for (auto& v : z) v = std::polar(1.0, ang(rng));
  return z;
}

SuiteResult suite_ring() {
  Checker ck;
  std::mt19937 rng(0x51a9u);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<long long> expn(-6, 6);

  auto rand_poly = [&] {
    QHalfPoly p;
    for (int t = 0; t < 5; ++t) p.add_term(BigRat(coef(rng), den(rng)), expn(rng));
    return p;
  };

  for (int rep = 0; rep < 60 && ck.pass; ++rep) {
    QHalfPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    ck.expect((a + b) + c == a + (b + c), [] { return std::string("addition associativity"); });
    ck.expect(a * (b + c) == a * b + a * c, [] { return std::string("distributivity"); });
    ck.expect(a * b == b * a, [] { return std::string("multiplication commutativity"); });
    ck.expect((a * b) * c == a * (b * c), [] { return std::string("multiplication associativity"); });
    if (!b.is_zero() && !c.is_zero()) {
      QRatio x(a, b), y(c, b);
      ck.expect(x + (-x) == QRatio::zero(), [] { return std::string("additive inverse"); });
      ck.expect(QRatio::equal_cross(x + y, QRatio(a + c, b)),
                [] { return std::string("common-denominator addition"); });
      if (!a.is_zero())
        ck.expect(x * x.inverse() == QRatio::one(), [] { return std::string("multiplicative inverse"); });
      ck.expect((x * y).substitute_q_pow(2) == x.substitute_q_pow(2) * y.substitute_q_pow(2),
                [] { return std::string("substitution homomorphism"); });
      QRatio back = parse_scalar(x.str());
      ck.expect(back == x, [&] { return "round trip failed for " + x.str(); });
    }
  }

  // Canonical-form stability of factored evaluation, and realness of the
  // squared-modulus pairing.
  for (int rep = 0; rep < 100 && ck.pass; ++rep) {
    FactoredFn f;
    std::uniform_int_distribution<int> halfexp(-4, 4);
    f.push_abs_sq(0, 1, HalfInt::from_twice(halfexp(rng)), 1);
    f.push_abs_sq(0, 1, HalfInt::from_twice(-std::abs(halfexp(rng)) - 2), -1);
    std::uniform_real_distribution<double> qd(1.5, 5.0);
    double q = qd(rng);
    auto z = random_torus(rng, 2);
    double direct = f.eval_real(q, z);
    double normal = f.normalized().eval_real(q, z);
    ck.expect(std::abs(direct - normal) <= 1e-12 * std::max(1.0, std::abs(direct)),
              [] { return std::string("normalized() changed an evaluation"); });
    ck.expect(direct >= -1e-9, [] { return std::string("squared modulus went negative"); });
  }
  return {"ring", ck.pass, ck.detail};
}

SuiteResult suite_poincare() {
  Checker ck;
  for (int n = 1; n <= 12 && ck.pass; ++n) {
    QRatio lhs(poincare_poly(n).reciprocal_variable());
    QRatio rhs = QRatio(gl_order(n)) /
                 (QRatio::q_pow(HalfInt(static_cast<long long>(n) * n - n)) *
                  QRatio(QHalfPoly::q_pow_minus_one(1)).pow(n));
    ck.expect(lhs == rhs, [&] {
      std::ostringstream os;
      os << "Poincare / group-order identity fails at n=" << n;
      return os.str();
    });
  }
  return {"poincare", ck.pass, ck.detail};
}

SuiteResult suite_gamma() {
  Checker ck;
  for (int n = 1; n <= 8 && ck.pass; ++n) {
    for (const auto& blocks : compositions_of(n)) {
      LeviShape shape(blocks);
      QRatio a = gamma_factor(shape);
      QRatio b = gamma_factor_poincare(shape);
      ck.expect(a == b, [&] { return "gamma routes disagree for shape " + shape_str(blocks); });
      ck.expect(a == gamma_factor_factored(shape).expand(),
                [&] { return "factored gamma disagrees for shape " + shape_str(blocks); });
      if (!ck.pass) break;
    }
  }
  // Multiplicativity under refining the first block.
  for (int n = 2; n <= 6 && ck.pass; ++n) {
    for (const auto& blocks : compositions_of(n)) {
      if (blocks[0] < 2) continue;
      for (int a = 1; a < blocks[0]; ++a) {
        std::vector<int> fine = blocks;
        fine[0] = a;
        fine.insert(fine.begin() + 1, blocks[0] - a);
        QFactored lhs = gamma_factor_factored(LeviShape(fine));
        QFactored rhs = gamma_factor_factored(LeviShape(blocks)) *
                        gamma_factor_factored(LeviShape({a, blocks[0] - a}));
        ck.expect(lhs == rhs,
                  [&] { return "gamma tower fails refining " + shape_str(blocks); });
        if (!ck.pass) break;
      }
      if (!ck.pass) break;
    }
  }
  return {"gamma", ck.pass, ck.detail};
}

SuiteResult suite_combinatorics() {
  Checker ck;
  for (int l1 = 1; l1 <= 12 && ck.pass; ++l1)
    for (int l2 = 1; l2 <= 12 && ck.pass; ++l2) {
      auto A = overlap_function(l1, l2);
      auto tag = [&] {
        std::ostringstream os;
        os << "(l1,l2)=(" << l1 << ',' << l2 << ')';
        return os.str();
      };
      long long total = 0, maxa = 0;
      for (const auto& [k, a] : A) {
        total += a;
        maxa = std::max(maxa, a);
        auto it = A.find(-k);
        ck.expect(it != A.end() && it->second == a, [&] { return "a(k) not even at " + tag(); });
      }
      HalfInt b = Segment(l1).g() + Segment(l2).g();
      ck.expect(total == static_cast<long long>(l1) * l2, [&] { return "sum a(k) wrong at " + tag(); });
      ck.expect(maxa == std::min(l1, l2), [&] { return "max a(k) wrong at " + tag(); });
      ck.expect(A.size() == static_cast<std::size_t>(l1 + l2 - 1),
                [&] { return "a(k) support wrong at " + tag(); });
      ck.expect(A.count(b) == 1 && A.at(b) == 1 && A.at(-b) == 1,
                [&] { return "boundary a wrong at " + tag(); });

      // The two summation identities behind the mu-function's g-range.
      HalfInt g1 = Segment(l1).g(), g2 = Segment(l2).g();
      HalfInt lo = g1 < g2 ? g2 - g1 : g1 - g2;
      long long sum_odd = 0, sum_even = 0, count = 0;
      for (HalfInt g = lo; g <= g1 + g2; g += HalfInt(1)) {
        sum_odd += g.twice() + 1;
        sum_even += g.twice();
        ++count;
      }
      ck.expect(sum_odd == static_cast<long long>(l1) * l2,
                [&] { return "sum(2g+1) wrong at " + tag(); });
      ck.expect(sum_even == static_cast<long long>(l1) * l2 - std::min(l1, l2),
                [&] { return "sum(2g) wrong at " + tag(); });
      ck.expect(count == std::min(l1, l2), [&] { return "g-range size wrong at " + tag(); });
    }

  // Conductor of a pair versus the telescoping oracle: every (i,j)
  // constituent contributes f + r except the rising-edge survivors of the
  // overlap trapezoid, which contribute f alone.
  for (int l1 = 1; l1 <= 8 && ck.pass; ++l1)
    for (int l2 = 1; l2 <= 8 && ck.pass; ++l2)
      for (int r = 1; r <= 3 && ck.pass; ++r)
        for (long long f = 0; f <= 4 && ck.pass; ++f) {
          auto A = overlap_function(l1, l2);
          long long total = 0, survivors = 0, prev = 0;
          for (const auto& [k, a] : A) {
            total += a;
            if (a > prev) survivors += a - prev;
            prev = a;
          }
          long long oracle = total * f + r * (total - survivors);

          FundamentalInvariants inv = single_block(2, r, l1 + l2, r, 0);
          inv.cuspidals[0].f_self = f;
          SegmentInstance a{0, Segment(l1), 0}, b{0, Segment(l2), 1};
          ck.expect(conductor_pair(a, b, inv) == HalfInt(oracle), [&] {
            std::ostringstream os;
            os << "conductor oracle mismatch at l=(" << l1 << ',' << l2 << ") r=" << r
               << " f=" << f;
            return os.str();
          });
        }

  // Centralizer orders against brute force over the symmetric group.
  for (int e = 1; e <= 7 && ck.pass; ++e) {
    std::map<std::vector<int>, long long> counts;
    std::vector<int> perm(e);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<bool> seen(e, false);
      std::vector<int> type;
      for (int s = 0; s < e; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int t = s; !seen[t]; t = perm[t]) {
          seen[t] = true;
          ++len;
        }
        type.push_back(len);
      }
      std::sort(type.rbegin(), type.rend());
      ++counts[type];
    } while (std::next_permutation(perm.begin(), perm.end()));

    long long fact = 1;
    for (int t = 2; t <= e; ++t) fact *= t;
    for (const auto& p : partitions_of(e)) {
      CentralizerData cd = centralizer_data(p);
      ck.expect(counts.count(p.parts) == 1 &&
                    static_cast<long long>(cd.order) * counts[p.parts] == fact,
                [&] {
                  std::ostringstream os;
                  os << "centralizer order wrong for e=" << e;
                  return os.str();
                });
      ck.expect(cd.fixed_dim == p.length(), [&] { return std::string("fixed dim wrong"); });
      long long sq = 0;
      for (int l : p.parts) sq += static_cast<long long>(l) * l;
      ck.expect(gamma_length(p) == (static_cast<long long>(p.total()) * p.total() - sq) / 2,
                [&] { return std::string("gamma_length identity wrong"); });
    }
  }
  return {"combinatorics", ck.pass, ck.detail};
}

SuiteResult suite_degrees() {
  Checker ck;
  for (int l = 1; l <= 12 && ck.pass; ++l)
    ck.expect(steinberg_fd(l) == steinberg_fd_group_form(l), [&] {
      std::ostringstream os;
      os << "Steinberg degree forms disagree at l=" << l;
      return os.str();
    });

  for (int m = 1; m <= 4 && ck.pass; ++m)
    for (int r = 1; r <= m && ck.pass; ++r) {
      if (m % r != 0) continue;
      for (int e = 1; e <= 4 && ck.pass; ++e)
        for (long long delta = 0; delta <= 6 && ck.pass; ++delta) {
          auto tag = [&] {
            std::ostringstream os;
            os << "(m,e,r,delta)=(" << m << ',' << e << ',' << r << ',' << delta << ')';
            return os.str();
          };
          CuspidalDatum c = grid_datum(m, r, delta);
          c.e = e;
          long long f = delta + static_cast<long long>(m) * m - r;

          QFactored ratio = fd_ratio(m, e, r, f);
          ck.expect(ratio == fd_ratio_steinberg_form(m, e, r, f),
                    [&] { return "Steinberg rewriting disagrees at " + tag(); });
          ck.expect(ratio == fd_ratio_discriminant_form(m, e, r, HalfInt(delta)),
                    [&] { return "discriminant form disagrees at " + tag(); });

          QFactored dsig = cuspidal_fd_factored(c);
          QFactored dpi = fd_generalized_steinberg_exact(c, e);
          ck.expect(dpi == ratio * dsig.pow(e),
                    [&] { return "conductor-identity closure fails at " + tag(); });
          ck.expect(dpi == fd_ratio_conductor_free(m, e, r) * dsig.pow(static_cast<long long>(e) * e),
                    [&] { return "conductor-free form fails at " + tag(); });

          ck.expect(dsig.expand() == derive_formal_degree(c),
                    [&] { return "cuspidal degree routes disagree at " + tag(); });
          ck.expect(dpi.eval_at_q(2.0) > 0.0,
                    [&] { return "formal degree not positive at " + tag(); });
        }
    }

  // The unramified reference: generalized Steinberg on the trivial-type
  // datum is the plain Steinberg degree.
  for (int l = 1; l <= 8 && ck.pass; ++l) {
    CuspidalDatum c = grid_datum(1, 1, 0);
    ck.expect(fd_generalized_steinberg_exact(c, l) == steinberg_fd(l),
              [&] { return std::string("trivial-type generalized Steinberg mismatch"); });
  }
  return {"degrees", ck.pass, ck.detail};
}

SuiteResult suite_mu_numeric() {
  Checker ck;
  std::mt19937 rng(0xa11cu);

  FundamentalInvariants inv = single_block(3, 2, 3, 2, 2);
  inv.cuspidals[0].f_self = 4;
  ComponentSpec spec(inv, {Partition({2, 1})});
  FactoredFn mu = mu_levi(spec.segments, spec.inv);

  // Structural symmetry of the pair function.
  SegmentInstance s0 = spec.segments[0], s1 = spec.segments[1];
  ck.expect(mu_pair(s0, s1, inv) == mu_pair(s1, s0, inv),
            [] { return std::string("mu_pair not symmetric"); });

  // Distinct cuspidals give a constant.
  {
    FundamentalInvariants two;
    two.q = 3;
    two.cuspidals = {grid_datum(1, 1, 0), grid_datum(2, 2, 2)};
    two.cuspidals[0].e = 1;
    two.cuspidals[1].e = 1;
    two.cross_conductors = {{0, 3}, {3, 0}};
    SegmentInstance a{0, Segment(1), 0}, b{1, Segment(1), 1};
    FactoredFn cross = mu_pair(a, b, two);
    ck.expect(cross.factors().empty(), [] { return std::string("cross-cuspidal mu has factors"); });
    QFactored expect_const =
        gamma_factor_factored(LeviShape({1, 2})).pow(2) * QFactored::q_pow(HalfInt(3));
    ck.expect(cross.scalar() == expect_const.expand(),
              [] { return std::string("cross-cuspidal constant wrong"); });
  }

  // Diagonal-rotation invariance.
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  for (int rep = 0; rep < 100 && ck.pass; ++rep) {
    auto z = random_torus(rng, 2);
    double base = mu.eval_real(3.0, z);
    std::complex<double> lam = std::polar(1.0, ang(rng));
    std::vector<std::complex<double>> w = {z[0] * lam, z[1] * lam};
    double moved = mu.eval_real(3.0, w);
    ck.expect(std::abs(base - moved) <= 1e-10 * std::max(1.0, std::abs(base)),
              [] { return std::string("mu not diagonal-invariant"); });
  }

  // Positivity across q.
  for (long long q : {2, 3, 4, 5}) {
    FundamentalInvariants qinv = single_block(q, 2, 3, 2, 2);
    ComponentSpec qspec(qinv, {Partition({2, 1})});
    FactoredFn qmu = mu_levi(qspec.segments, qspec.inv);
    for (int rep = 0; rep < 250 && ck.pass; ++rep) {
      auto z = random_torus(rng, 2);
      double v = qmu.eval_real(static_cast<double>(q), z);
      ck.expect(v >= -1e-9, [&] {
        std::ostringstream os;
        os << "mu negative (" << v << ") at q=" << q;
        return os.str();
      });
    }
  }
  return {"mu-numeric", ck.pass, ck.detail};
}

SuiteResult suite_closure() {
  Checker ck;
  for (int m = 1; m <= 4 && ck.pass; ++m)
    for (int r = 1; r <= m && ck.pass; ++r) {
      if (m % r != 0) continue;
      for (long long delta : {0LL, 2LL, 5LL})
        for (int e = 1; e <= 4 && ck.pass; ++e)
          for (const Partition& p : partitions_of(e)) {
            FundamentalInvariants inv = single_block(2, m, e, r, delta);
            ComponentSpec spec(inv, {p});
            auto tag = [&] {
              std::ostringstream os;
              os << "(m,r,delta)=(" << m << ',' << r << ',' << delta << ") partition "
                 << spec.selector();
              return os.str();
            };

            QFactored mu_const;
            for (std::size_t a = 0; a < spec.segments.size(); ++a)
              for (std::size_t b = a + 1; b < spec.segments.size(); ++b)
                mu_const *= mu_pair_constant_factored(spec.segments[a], spec.segments[b], inv);

            LeviShape shape = spec.levi();
            QFactored gam = gamma_factor_factored(shape);
            QFactored cfn = c_function_factored(shape);
            long long lf = gamma_length(p) * resolved_conductor(inv.cuspidals[0]);

            // mu * c^{-2} gamma^{-1} = gamma * j^{-1} at the scalar level:
            // j's constant is q^{-l(gamma) f}.
            QFactored lhs = mu_const / cfn.pow(2) / gam;
            QFactored rhs = gam * QFactored::q_pow(HalfInt(lf));
            ck.expect(lhs == rhs, [&] { return "closure identity fails at " + tag(); });
            if (!ck.pass) break;
          }
    }

  // Factor-level closure on a small case: mu * j is the constant
  // (gamma c)^2 with an empty factor list.
  {
    FundamentalInvariants inv = single_block(2, 2, 3, 2, 2);
    ComponentSpec spec(inv, {Partition({2, 1})});
    FactoredFn prod = mu_levi(spec.segments, inv) * j_function(spec.segments, inv);
    ck.expect(prod.factors().empty(), [] { return std::string("mu*j keeps torus factors"); });
    LeviShape shape = spec.levi();
    QRatio want = (gamma_factor(shape) * c_function(shape)).pow(2);
    ck.expect(prod.scalar() == want, [] { return std::string("mu*j constant is not (gamma c)^2"); });
  }
  return {"closure", ck.pass, ck.detail};
}

SuiteResult suite_hecke() {
  Checker ck;
  for (int n = 1; n <= 6 && ck.pass; ++n)
    for (const Partition& p : partitions_of(n)) {
      HeckeDensity h = hecke_density(n, p);
      ck.expect(h.report.constant * h.report.formal_degree.exact() == h.explicit_constant, [&] {
        std::ostringstream os;
        os << "Hecke dual forms disagree for n=" << n << " partition " << h.report.selector;
        return os.str();
      });
      if (!ck.pass) break;
    }
  return {"hecke", ck.pass, ck.detail};
}

SuiteResult suite_macdonald() {
  Checker ck;
  for (int n = 1; n <= 6 && ck.pass; ++n) {
    FactoredFn f = macdonald_form(n);  // throws if the structural match fails
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    ck.expect(f.factors().size() == 4 * pairs, [&] {
      std::ostringstream os;
      os << "Macdonald factor count wrong at n=" << n;
      return os.str();
    });
  }
  return {"macdonald", ck.pass, ck.detail};
}

SuiteResult suite_quadrature() {
  Checker ck;
  for (long long q : {2, 3, 4, 5}) {
    double mass = integrate(iwahori_component(2, q, Partition({1, 1})), static_cast<double>(q), 256);
    ck.expect(std::abs(mass - 1.0) <= 1e-6, [&] {
      std::ostringstream os;
      os << "principal GL(2) mass " << mass << " != 1 at q=" << q;
      return os.str();
    });
    double st = integrate(iwahori_component(2, q, Partition({2})), static_cast<double>(q), 256);
    ck.expect(std::abs(st - static_cast<double>(q - 1)) <= 1e-12 * q, [&] {
      std::ostringstream os;
      os << "Steinberg circle mass " << st << " != q-1 at q=" << q;
      return os.str();
    });

    // Fourier-series oracle for the basic circle integral
    // int |1-z|^2 / |1-z/q|^2 dz: expand both factors into geometric series
    // and read off the coefficients of z^0 and z^{+-1}.
    double qd = static_cast<double>(q);
    double c0 = 0.0, c1 = 0.0;
    for (int j = 0; j < 400; ++j) {
      c0 += std::pow(qd, -2.0 * j);
      c1 += std::pow(qd, -(2.0 * j + 1.0));
    }
    double series = 2.0 * c0 - 2.0 * c1;
    double closed = 2.0 * qd / (qd + 1.0);
    ck.expect(std::abs(series - closed) <= 1e-9,
              [] { return std::string("Fourier oracle disagrees with closed form"); });

    FactoredFn basic;
    basic.push_abs_sq(0, 1, HalfInt(0), 1);
    basic.push_abs_sq(0, 1, HalfInt(-1), -1);
    double acc = 0.0;
    int grid = 256;
    for (int t = 0; t < grid; ++t) {
      std::vector<std::complex<double>> z = {
          1.0, std::polar(1.0, 2.0 * std::numbers::pi * t / grid)};
      acc += basic.eval_real(qd, z);
    }
    acc /= grid;
    ck.expect(std::abs(acc - series) <= 1e-9,
              [] { return std::string("trapezoid mean disagrees with Fourier oracle"); });
  }

  double unit = integrate(iwahori_component(1, 2, Partition({1})), 2.0, 64);
  ck.expect(std::abs(unit - 1.0) <= 1e-12, [] { return std::string("GL(1) mass != 1"); });

  for (int n : {2, 3}) {
    ComponentSpec spec = iwahori_component(n, 2, Partition(std::vector<int>(n, 1)));
    double a = integrate(spec, 2.0, 128);
    double b = integrate(spec, 2.0, 256);
    ck.expect(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)), [&] {
      std::ostringstream os;
      os << "quadrature not converged for GL(" << n << ")";
      return os.str();
    });
  }
  return {"quadrature", ck.pass, ck.detail};
}

SuiteResult suite_lambda() {
  Checker ck;
  QFactored intro = QFactored::q_pow_minus_one(1, -1) * QFactored::q_pow_minus_one(3, -1) *
                    QFactored::q_pow_minus_one(5, -1);
  ck.expect(lambda_DF(2, 3) == intro, [] { return std::string("lambda(D/F) intro example wrong"); });
  ck.expect(lambda_DF(1, 5).is_one(), [] { return std::string("lambda(D/F) not 1 for d=1"); });

  for (int d = 1; d <= 4 && ck.pass; ++d)
    for (int np = 1; np <= 4 && ck.pass; ++np) {
      int n = d * np;
      QFactored full;
      for (int j = 1; j < n; ++j) full *= QFactored::q_pow_minus_one(j, 1);
      QFactored compressed;
      for (int j = 1; j < np; ++j) compressed *= QFactored::q_pow_minus_one(static_cast<long long>(d) * j, 1);
      ck.expect(lambda_DF(d, np) * full == compressed, [&] {
        std::ostringstream os;
        os << "lambda cancellation fails at d=" << d << " n'=" << np;
        return os.str();
      });
      ck.expect(lambda_DF(d, np) * steinberg_fd(n) == steinberg_fd_division(d, np), [&] {
        std::ostringstream os;
        os << "Steinberg transfer fails at d=" << d << " n'=" << np;
        return os.str();
      });
    }
  ck.expect(steinberg_fd_division(1, 4) == steinberg_fd(4),
            [] { return std::string("division Steinberg degree at d=1 wrong"); });
  ck.expect(steinberg_fd_division(2, 1) == QFactored::from_rational(BigRat(1, 2)),
            [] { return std::string("division Steinberg degree at n'=1 wrong"); });
  return {"lambda", ck.pass, ck.detail};
}

SuiteResult suite_kappa() {
  Checker ck;
  for (int m = 1; m <= 4 && ck.pass; ++m)
    for (int r = 1; r <= m && ck.pass; ++r) {
      if (m % r != 0) continue;
      for (long long delta = 0; delta <= 6 && ck.pass; ++delta)
        for (int e = 1; e <= 5 && ck.pass; ++e) {
          std::vector<Partition> parts = partitions_of(e);
          QFactored first;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            FundamentalInvariants inv = single_block(2, m, e, r, delta);
            QFactored base = kappa_base(ComponentSpec(inv, {parts[i]}));
            if (i == 0)
              first = base;
            else
              ck.expect(base == first, [&] {
                std::ostringstream os;
                os << "kappa differs between partitions at (m,r,delta,e)=(" << m << ',' << r
                   << ',' << delta << ',' << e << ')';
                return os.str();
              });
            if (!ck.pass) break;
          }
        }
    }
  // The Iwahori component compares to itself with kappa = 1.
  ComponentSpec self = iwahori_component(3, 2, Partition({2, 1}));
  ck.expect(kappa(self).kappa == QRatio::one(),
            [] { return std::string("kappa of the reference itself is not 1"); });
  return {"kappa", ck.pass, ck.detail};
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"ring", suite_ring},
      {"poincare", suite_poincare},
      {"gamma", suite_gamma},
      {"combinatorics", suite_combinatorics},
      {"degrees", suite_degrees},
      {"mu-numeric", suite_mu_numeric},
      {"closure", suite_closure},
      {"hecke", suite_hecke},
      {"macdonald", suite_macdonald},
      {"quadrature", suite_quadrature},
      {"lambda", suite_lambda},
      {"kappa", suite_kappa},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      try {
        return fn();
      } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
      }
    }
  throw InputError("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& only) {
  std::vector<SuiteResult> out;
  if (only.empty()) {
    for (const auto& [name, fn] : registry()) out.push_back(run_suite(name));
  } else {
    for (const auto& name : only) out.push_back(run_suite(name));
  }
  return out;
}

}  // namespace planch
