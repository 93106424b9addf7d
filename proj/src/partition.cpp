#include "betaring/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace betaring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(n_) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Int Partition::centralizer_order() const {
  Int z = 1;
  auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
    z *= pw * factorial(static_cast<unsigned>(m[i]));
  }
  return z;
}

Int Partition::class_size() const {
  return factorial(static_cast<unsigned>(n_)) / centralizer_order();
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(p));
}

Partition Partition::scaled(int k) const {
  std::vector<int> p = parts_;
  for (int& x : p) x *= k;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  int cur = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      if (cur >= 0) parts.push_back(cur);
      cur = -1;
    } else {
      throw std::invalid_argument("bad partition: " + std::string(text));
    }
  }
  if (cur >= 0) parts.push_back(cur);
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace betaring
