#include "betaring/permutation.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace betaring {

Permutation::Permutation(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree out of range: " +
                                std::to_string(degree));
  for (int i = 0; i < degree; ++i)
    images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  rekey();
}

void Permutation::rekey() {
  key_ = 0;
  for (int i = 0; i < degree_; ++i)
    key_ |= static_cast<std::uint64_t>(images_[static_cast<std::size_t>(i)])
            << (4 * i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= p.degree_ || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
    p.images_[i] = static_cast<std::uint8_t>(v);
  }
  p.rekey();
  return p;
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      int a = c[j];
      int b = c[(j + 1) % c.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[static_cast<std::size_t>(a)])
        throw std::invalid_argument("cycles are not disjoint");
      used[static_cast<std::size_t>(a)] = true;
      img[static_cast<std::size_t>(a)] = b;
    }
  }
  return from_images(img);
}

Permutation Permutation::parse_cycles(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* cur = nullptr;
  int num = -1;
  auto flush = [&] {
    if (num >= 0) {
      if (!cur) throw std::invalid_argument("number outside a cycle");
      cur->push_back(num);
    }
    num = -1;
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num = (num < 0 ? 0 : num * 10) + (c - '0');
    } else if (c == '(') {
      flush();
      cycles.emplace_back();
      cur = &cycles.back();
    } else if (c == ')') {
      flush();
      cur = nullptr;
    } else if (c == ' ' || c == ',') {
      flush();
    } else {
      throw std::invalid_argument("bad cycle notation: " + std::string(text));
    }
  }
  flush();
  return from_cycles(degree, cycles);
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + degree_);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree_ != rhs.degree_)
    throw std::invalid_argument("composing permutations of different degree");
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i)
    r.images_[static_cast<std::size_t>(i)] =
        images_[rhs.images_[static_cast<std::size_t>(i)]];
  r.rekey();
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i)
    r.images_[images_[static_cast<std::size_t>(i)]] =
        static_cast<std::uint8_t>(i);
  r.rekey();
  return r;
}

bool Permutation::is_identity() const { return *this == Permutation(degree_); }

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::num_cycles() const {
  return static_cast<int>(cycles().size());
}

Partition Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lens));
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(c[j]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
  if (offset < 0 || offset + degree_ > new_degree)
    throw std::invalid_argument("shifted permutation does not fit");
  Permutation r(new_degree);
  for (int i = 0; i < degree_; ++i)
    r.images_[static_cast<std::size_t>(offset + i)] =
        static_cast<std::uint8_t>(offset + (*this)(i));
  r.rekey();
  return r;
}

}  // namespace betaring
