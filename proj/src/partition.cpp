#include "cspleth/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cspleth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::single(int n) { return Partition(std::vector<int>{n}); }

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::merged(const Partition& o) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(all));
}

BigInt Partition::multiplicity_factorial() const {
  BigInt r = 1;
  int run = 1;
  for (std::size_t i = 1; i <= parts_.size(); ++i) {
    if (i < parts_.size() && parts_[i] == parts_[i - 1]) {
      ++run;
    } else {
      r *= factorial(run);
      run = 1;
    }
  }
  return r;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> Partition::all_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cspleth
