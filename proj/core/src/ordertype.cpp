#include "regreg/ordertype.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "regreg/error.hpp"

namespace regreg {

OrderTypeSig::OrderTypeSig(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.size() < 2) throw Error(Errc::invalid_argument, "signature arity < 2");
  std::vector<int> seen(ranks_.size(), 0);
  for (int r : ranks_) {
    if (r < 0 || r >= static_cast<int>(ranks_.size())) {
      throw Error(Errc::invalid_argument, "signature rank out of range");
    }
    seen[r] = 1;
  }
  const int d = distinct_values();
  for (int r = 0; r < d; ++r) {
    if (!seen[r]) throw Error(Errc::invalid_argument, "signature ranks are not dense");
  }
}

int OrderTypeSig::distinct_values() const noexcept {
  if (ranks_.empty()) return 0;
  return *std::max_element(ranks_.begin(), ranks_.end()) + 1;
}

std::string OrderTypeSig::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ranks_[i]);
  }
  return out;
}

OrderTypeSig OrderTypeSig::parse(const std::string& text) {
  std::vector<int> ranks;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      ranks.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad signature '" + text + "'");
    }
  }
  return OrderTypeSig(std::move(ranks));
}

OrderTypeSig signature(const KTuple& x) {
  std::vector<Value> distinct(x.coords().begin(), x.coords().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<int> ranks;
  ranks.reserve(x.arity());
  for (Value c : x.coords()) {
    ranks.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin()));
  }
  return OrderTypeSig(std::move(ranks));
}

std::set<OrderTypeSig> enumerate_classes(int k) {
  if (k < 2) throw Error(Errc::invalid_argument, "enumerate_classes needs k >= 2");
  if (k > 8) throw Error(Errc::too_large, "enumerate_classes is exhaustive; k <= 8");

  std::set<OrderTypeSig> classes;
  std::vector<Value> coords(k, 0);
  // Odometer over {0..k-1}^k.
  while (true) {
    classes.insert(signature(KTuple(coords)));
    int i = k - 1;
    while (i >= 0 && coords[i] == k - 1) coords[i--] = 0;
    if (i < 0) break;
    ++coords[i];
  }
  return classes;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t surjection_count(int k, int j) {
  if (k < 0 || j < 0) throw Error(Errc::invalid_argument, "negative set size");
  if (k > 15) throw Error(Errc::too_large, "surjection_count supports k <= 15");
  if (j > k) return 0;
  // sum_i (-1)^i C(j,i) (j-i)^k; magnitudes stay below 2^127 for k <= 15.
  __int128 total = 0;
  __int128 binom = 1;
  for (int i = 0; i <= j; ++i) {
    __int128 term = binom * static_cast<__int128>(ipow(static_cast<std::uint64_t>(j - i), k));
    total += (i % 2 == 0) ? term : -term;
    binom = binom * (j - i) / (i + 1);
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t class_count_formula(int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "class_count_formula needs k >= 1");
  std::uint64_t sum = 0;
  for (int j = 1; j <= k; ++j) sum += surjection_count(k, j);
  return sum;
}

std::uint64_t k_pow_k(int k) {
  if (k < 0) throw Error(Errc::invalid_argument, "negative k");
  return ipow(static_cast<std::uint64_t>(k), k);
}

}  // namespace regreg
