#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace szeta {

// Mertens constant B = lim (sum_{p<=x} 1/p - loglog x).
inline constexpr double kMertensB = 0.26149721284764278;

enum class SieveMode { kAuto, kFlat, kSegmented };

// Primes up to `limit` plus the prime reciprocal sums sigma = sum 1/p and
// sigma_k = sum p^-k.  All sums accumulate over ascending primes, so values
// are bit-reproducible.  Immutable after construction apart from the
// mutex-guarded sigma_k cache; safe to share across threads.
class PrimeTable {
 public:
  // y >= 2.  Flat mode is refused above kFlatLimit rather than silently
  // switching; kAuto picks flat below the threshold, segmented above.
  static PrimeTable sieve(std::uint64_t y, SieveMode mode = SieveMode::kAuto);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  double sigma() const { return sigma_; }
  // k >= 2; computed on first request and cached.
  double sigma_k(int k) const;

  // sigma(y) - loglog y - B; requires y >= 100.
  double mertens_check() const;

  // Text cache: header line "szeta-primes/1 y=<y> count=<n>", then one prime
  // per line.
  void save(const std::string& path) const;
  static PrimeTable load(const std::string& path);

  static constexpr std::uint64_t kFlatLimit = 100000000;  // 1e8

 private:
  PrimeTable() : sigma_k_cache_(std::make_unique<SigmaKCache>()) {}

  struct SigmaKCache {
    std::map<int, double> values;
    std::mutex mutex;
  };

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
  double sigma_ = 0.0;
  std::unique_ptr<SigmaKCache> sigma_k_cache_;
};

// Streaming segmented sum of 1/p over lo < p <= hi, ascending, without
// materializing the primes.  Working set is O(sqrt(hi)) per segment.
double sigma_range(std::uint64_t lo, std::uint64_t hi);

// Streaming ascending prime visitor over lo < p <= hi (same segmented walk).
void visit_primes(std::uint64_t lo, std::uint64_t hi,
                  const std::function<void(std::uint64_t)>& visit);

}  // namespace szeta
