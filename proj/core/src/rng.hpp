#pragma once

// Seeded draws with a fixed algorithm. The <random> distributions are
// implementation-defined, which would make instance files differ between
// standard libraries for the same seed.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace regreg::detail {

using Rng = std::mt19937_64;

// Uniform in [0, n), n >= 1, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r > limit);
  return r % n;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// `count` distinct integers from [lo, lo + span), in draw order (Floyd).
inline std::vector<std::int64_t> sample_distinct(Rng& rng, std::int64_t lo, std::uint64_t span,
                                                 std::size_t count) {
  std::set<std::uint64_t> taken;
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::uint64_t j = span - count; j < span; ++j) {
    std::uint64_t r = uniform_below(rng, j + 1);
    if (!taken.insert(r).second) {
      taken.insert(j);
      r = j;
    }
    out.push_back(lo + static_cast<std::int64_t>(r));
  }
  shuffle(out, rng);
  return out;
}

}  // namespace regreg::detail
