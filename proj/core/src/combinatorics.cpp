#include "planch/combinatorics.hpp"

#include <numeric>

namespace planch {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw InputError("partition needs at least one part");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw InputError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw InputError("partition parts must be non-increasing");
  }
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts) ++m[p];
  return m;
}

namespace {

void emit(std::vector<int>& stack, int remaining, int cap, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    stack.push_back(next);
    emit(stack, remaining - next, next, out);
    stack.pop_back();
  }
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

}  // namespace

std::vector<Partition> partitions_of(int e) {
  if (e < 1) throw InputError("partitions are enumerated for e >= 1");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit(stack, e, e, out);
  return out;
}

CentralizerData centralizer_data(const Partition& p) {
  CentralizerData c;
  c.fixed_dim = p.length();
  for (const auto& [d, a] : p.multiplicities()) {
    unsigned long long da = 1;
    for (int i = 0; i < a; ++i) da *= static_cast<unsigned long long>(d);
    unsigned long long af = factorial(a);
    c.order *= da * af;
    c.effective *= af;
  }
  return c;
}

long long gamma_length(const Partition& p) {
  long long e = p.total(), sq = 0;
  for (int l : p.parts) sq += static_cast<long long>(l) * l;
  return (e * e - sq) / 2;
}

std::map<HalfInt, long long> overlap_function(int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw InputError("segment lengths must be >= 1");
  std::map<HalfInt, long long> a;
  long long b2 = (l1 - 1) + (l2 - 1);  // twice g1+g2
  for (int i = 0; i < l1; ++i)
    for (int j = 0; j < l2; ++j) {
      HalfInt k = HalfInt::from_twice(2LL * (i + j) - b2);
      ++a[k];
    }
  return a;
}

}  // namespace planch
