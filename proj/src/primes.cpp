#include "szeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "szeta/errors.hpp"

namespace szeta {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd-only flat sieve of [3, y]; emits primes ascending through `visit`.
template <class F>
void flat_sieve(std::uint64_t y, F&& visit) {
  if (y >= 2) visit(2);
  if (y < 3) return;
  const std::uint64_t m = (y - 1) / 2;  // index i <-> odd 2i+1, i >= 1
  std::vector<bool> composite(m + 1, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= y; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p - 1) / 2; j <= m; j += p) composite[j] = true;
  }
  for (std::uint64_t i = 1; i <= m; ++i)
    if (!composite[i]) visit(2 * i + 1);
}

// Segmented odd-only sieve over (lo, hi]; O(sqrt(hi)) working set.
template <class F>
void segmented_sieve(std::uint64_t lo, std::uint64_t hi, F&& visit) {
  if (hi < 2 || hi <= lo) return;
  if (lo < 2 && 2 <= hi) visit(2);
  const std::uint64_t root = isqrt_u64(hi);
  std::vector<std::uint64_t> small;  // odd primes <= sqrt(hi)
  flat_sieve(root, [&](std::uint64_t p) {
    if (p > 2) small.push_back(p);
  });
  const std::uint64_t seg = std::max<std::uint64_t>(1 << 16, root / 2 + 1);  // odd count per segment
  std::uint64_t first = std::max<std::uint64_t>(lo + 1, 3);
  if (first % 2 == 0) ++first;
  std::vector<bool> composite;
  for (std::uint64_t base = first; base <= hi; base += 2 * seg) {
    const std::uint64_t last = std::min(hi, base + 2 * (seg - 1));
    const std::uint64_t count = (last - base) / 2 + 1;
    composite.assign(count, false);
    for (std::uint64_t p : small) {
      std::uint64_t start = p * p;
      if (start > last) break;
      if (start < base) {
        std::uint64_t k = (base + p - 1) / p;
        if (k % 2 == 0) ++k;  // odd multiples only
        start = k * p;
      }
      for (std::uint64_t v = start; v <= last; v += 2 * p) composite[(v - base) / 2] = true;
    }
    for (std::uint64_t i = 0; i < count; ++i)
      if (!composite[i]) visit(base + 2 * i);
  }
}

}  // namespace

PrimeTable PrimeTable::sieve(std::uint64_t y, SieveMode mode) {
  if (y < 2) throw DomainError("PrimeTable::sieve requires y >= 2");
  if (mode == SieveMode::kFlat && y > kFlatLimit)
    throw ConfigError("flat sieve mode refused for y > 1e8; use segmented mode");
  const bool flat = (mode == SieveMode::kFlat) || (mode == SieveMode::kAuto && y <= kFlatLimit);

  PrimeTable t;
  t.limit_ = y;
  double sigma = 0.0;
  auto visit = [&](std::uint64_t p) {
    t.primes_.push_back(p);
    sigma += 1.0 / static_cast<double>(p);
  };
  if (flat)
    flat_sieve(y, visit);
  else
    segmented_sieve(0, y, visit);
  t.sigma_ = sigma;
  return t;
}

double PrimeTable::sigma_k(int k) const {
  if (k < 2) throw DomainError("sigma_k requires k >= 2");
  std::lock_guard<std::mutex> lock(sigma_k_cache_->mutex);
  auto it = sigma_k_cache_->values.find(k);
  if (it != sigma_k_cache_->values.end()) return it->second;
  double s = 0.0;
  for (std::uint64_t p : primes_) s += std::pow(static_cast<double>(p), -k);
  sigma_k_cache_->values.emplace(k, s);
  return s;
}

double PrimeTable::mertens_check() const {
  if (limit_ < 100) throw DomainError("mertens_check requires y >= 100");
  return sigma_ - std::log(std::log(static_cast<double>(limit_))) - kMertensB;
}

void PrimeTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open prime cache for writing: " + path);
  out << "szeta-primes/1 y=" << limit_ << " count=" << primes_.size() << "\n";
  for (std::uint64_t p : primes_) out << p << "\n";
  if (!out) throw ConfigError("write failure on prime cache: " + path);
}

PrimeTable PrimeTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open prime cache: " + path);
  std::string header;
  std::getline(in, header);
  std::uint64_t y = 0;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "szeta-primes/1 y=%llu count=%zu",
                  reinterpret_cast<unsigned long long*>(&y), &count) != 2)
    throw ConfigError("bad prime cache header: " + header);
  PrimeTable t;
  t.limit_ = y;
  t.primes_.reserve(count);
  double sigma = 0.0;
  std::uint64_t p = 0, prev = 0;
  while (in >> p) {
    if (p <= prev || p > y) throw ConfigError("corrupt prime cache: " + path);
    t.primes_.push_back(p);
    sigma += 1.0 / static_cast<double>(p);
    prev = p;
  }
  if (t.primes_.size() != count) throw ConfigError("prime cache count mismatch: " + path);
  t.sigma_ = sigma;
  return t;
}

double sigma_range(std::uint64_t lo, std::uint64_t hi) {
  double s = 0.0;
  segmented_sieve(lo, hi, [&](std::uint64_t p) { s += 1.0 / static_cast<double>(p); });
  return s;
}

void visit_primes(std::uint64_t lo, std::uint64_t hi,
                  const std::function<void(std::uint64_t)>& visit) {
  segmented_sieve(lo, hi, [&](std::uint64_t p) { visit(p); });
}

}  // namespace szeta
