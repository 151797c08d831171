#include "regreg/grid.hpp"

#include "regreg/error.hpp"

namespace regreg {

namespace {
constexpr std::size_t kMaxGridTuples = std::size_t{1} << 24;
}

GridE::GridE(std::set<Value> e, int k) : e_(e.begin(), e.end()), k_(k) {
  if (k < 2) throw Error(Errc::invalid_argument, "grid arity k must be >= 2");
  if (e_.size() < 2) throw Error(Errc::invalid_argument, "grid needs |E| >= 2");
  if (e_.front() < 0) throw Error(Errc::invalid_argument, "grid elements must be naturals");
}

std::size_t GridE::size() const {
  std::size_t n = 1;
  for (int i = 0; i < k_; ++i) {
    n *= e_.size();
    if (n > kMaxGridTuples) throw Error(Errc::too_large, "grid exceeds 2^24 tuples");
  }
  return n;
}

std::vector<KTuple> GridE::tuples() const {
  std::vector<KTuple> out;
  out.reserve(size());
  std::vector<std::size_t> idx(k_, 0);
  std::vector<Value> coords(k_);
  while (true) {
    for (int i = 0; i < k_; ++i) coords[i] = e_[idx[i]];
    out.emplace_back(coords);
    int i = k_ - 1;
    while (i >= 0 && idx[i] + 1 == e_.size()) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

Domain GridE::domain() const {
  const auto ts = tuples();
  return Domain(ts.begin(), ts.end());
}

}  // namespace regreg
