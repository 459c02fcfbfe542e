#include "planch/torusexpr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace planch {

FactoredFn::FactoredFn(QRatio scalar, std::vector<TorusFactor> factors)
    : scalar_(std::move(scalar)), factors_(std::move(factors)) {
  canonicalize();
}

void FactoredFn::canonicalize() {
  for (const auto& f : factors_)
    if (f.zi == f.zj) throw InputError("torus factor compares a coordinate with itself");
  std::sort(factors_.begin(), factors_.end(), [](const TorusFactor& x, const TorusFactor& y) {
    return std::tie(x.zi, x.zj, x.a) < std::tie(y.zi, y.zj, y.a);
  });
  std::vector<TorusFactor> merged;
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().zi == f.zi && merged.back().zj == f.zj && merged.back().a == f.a) {
      merged.back().e += f.e;
      if (merged.back().e == 0) merged.pop_back();
    } else if (f.e != 0) {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
}

void FactoredFn::push(TorusFactor f) {
  factors_.push_back(f);
  canonicalize();
}

void FactoredFn::push_abs_sq(int i, int j, HalfInt a, long long e) {
  if (i == j) throw InputError("squared modulus needs distinct coordinates");
  factors_.push_back({i, j, a, e});
  factors_.push_back({j, i, a, e});
  canonicalize();
}

FactoredFn operator*(const FactoredFn& x, const FactoredFn& y) {
  FactoredFn r;
  r.scalar_ = x.scalar_ * y.scalar_;
  r.factors_ = x.factors_;
  r.factors_.insert(r.factors_.end(), y.factors_.begin(), y.factors_.end());
  r.canonicalize();
  return r;
}

FactoredFn FactoredFn::inverse() const {
  FactoredFn r;
  r.scalar_ = scalar_.inverse();
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.e = -f.e;
  // Negating exponents keeps the sort order, no re-canonicalization needed.
  return r;
}

FactoredFn FactoredFn::normalized() const {
  FactoredFn r = *this;
  QRatio shift = QRatio::one();
  std::vector<TorusFactor> added;
  for (size_t idx = 0; idx < r.factors_.size(); ++idx) {
    TorusFactor& f = r.factors_[idx];
    if (f.a.twice() <= 0 || f.zi > f.zj) continue;
    // Look for the mirror entry with the same exponent sign.
    for (size_t jdx = 0; jdx < r.factors_.size(); ++jdx) {
      TorusFactor& g = r.factors_[jdx];
      if (g.zi != f.zj || g.zj != f.zi || g.a != f.a) continue;
      long long common = (f.e > 0) == (g.e > 0) ? (std::abs(f.e) < std::abs(g.e) ? f.e : g.e) : 0;
      if (common == 0) break;
      // |1 - w q^a|^2 = q^{2a} |1 - w q^{-a}|^2 applied 'common' times.
      shift *= QRatio::q_pow(f.a * (2 * common));
      added.push_back({f.zi, f.zj, -f.a, common});
      added.push_back({f.zj, f.zi, -f.a, common});
      f.e -= common;
      g.e -= common;
      break;
    }
  }
  r.factors_.insert(r.factors_.end(), added.begin(), added.end());
  r.scalar_ *= shift;
  r.canonicalize();
  return r;
}

int FactoredFn::torus_dim() const {
  int d = 0;
  for (const auto& f : factors_) d = std::max({d, f.zi + 1, f.zj + 1});
  return d;
}

std::complex<double> FactoredFn::eval(double q, std::span<const std::complex<double>> z) const {
  if (q <= 1.0) throw DomainError("torus expressions evaluate at q > 1");
  for (const auto& zi : z)
    if (std::abs(std::abs(zi) - 1.0) > 1e-12)
      throw DomainError("evaluation point is off the unit torus");
  std::complex<double> acc(scalar_.eval_at_q(q), 0.0);
  for (const auto& f : factors_) {
    if (f.zi >= static_cast<int>(z.size()) || f.zj >= static_cast<int>(z.size()))
      throw InputError("evaluation point has too few coordinates");
    std::complex<double> base = 1.0 - z[f.zj] / z[f.zi] * std::pow(q, f.a.value());
    if (f.e < 0 && std::abs(base) < 1e-14) throw SingularityError("torus factor denominator vanishes");
    acc *= std::pow(base, std::complex<double>(static_cast<double>(f.e), 0.0));
  }
  return acc;
}

double FactoredFn::eval_real(double q, std::span<const std::complex<double>> z) const {
  std::complex<double> w = eval(q, z);
  double scale = std::max(1.0, std::abs(w));
  if (std::abs(w.imag()) > 1e-10 * scale)
    throw DomainError("expression value has a non-negligible imaginary part");
  return w.real();
}

namespace {

std::string ratio_token(int zi, int zj) {
  return "z" + std::to_string(zj + 1) + "/z" + std::to_string(zi + 1);
}

std::string factor_body(const TorusFactor& f) {
  std::string s = "1 - " + ratio_token(f.zi, f.zj);
  if (!f.a.is_zero()) s += " * q^(" + f.a.str() + ")";
  return s;
}

}  // namespace

std::string FactoredFn::str() const {
  std::ostringstream out;
  out << scalar_.str();
  // Pair up mirror entries so squared moduli print as |...|^2e.
  std::vector<bool> used(factors_.size(), false);
  std::vector<std::string> nums, dens;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (used[i]) continue;
    const TorusFactor& f = factors_[i];
    size_t mirror = factors_.size();
    for (size_t j = i + 1; j < factors_.size(); ++j) {
      if (used[j]) continue;
      const TorusFactor& g = factors_[j];
      if (g.zi == f.zj && g.zj == f.zi && g.a == f.a && g.e == f.e) {
        mirror = j;
        break;
      }
    }
    if (mirror < factors_.size()) {
      used[i] = used[mirror] = true;
      const TorusFactor& lead = f.zi < f.zj ? f : factors_[mirror];
      long long e2 = 2 * std::abs(f.e);
      std::string body = "|" + factor_body(lead) + "|^" + std::to_string(e2);
      (f.e > 0 ? nums : dens).push_back(body);
    } else {
      used[i] = true;
      std::string body = "(" + factor_body(f) + ")";
      if (std::abs(f.e) != 1) body += "^" + std::to_string(std::abs(f.e));
      (f.e > 0 ? nums : dens).push_back(body);
    }
  }
  for (const auto& s : nums) out << " * " << s;
  for (const auto& s : dens) out << " / " << s;
  return out.str();
}

}  // namespace planch
