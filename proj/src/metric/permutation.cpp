#include "sofic/metric/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sofic {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::int64_t>& images) {
  std::vector<std::uint32_t> img;
  img.reserve(images.size());
  for (auto x : images) {
    if (x < 1 || x > static_cast<std::int64_t>(images.size())) {
      throw std::invalid_argument("permutation image " + std::to_string(x) + " out of range");
    }
    img.push_back(static_cast<std::uint32_t>(x - 1));
  }
  return from_images(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t n, std::initializer_list<std::vector<std::uint32_t>> cycles) {
  Permutation result = identity(n);
  for (const auto& cyc : cycles) {
    std::vector<std::uint32_t> img = identity(n).images_;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto from = cyc[i];
      const auto to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw std::invalid_argument("cycle entry out of range");
      img[from - 1] = to - 1;
    }
    result = result * from_images(std::move(img));
  }
  return result;
}

Permutation Permutation::cyclic_shift(std::size_t n, std::int64_t k) {
  std::vector<std::uint32_t> img(n);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = static_cast<std::uint32_t>(((static_cast<std::int64_t>(i) + k) % nn + nn) % nn);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[i] = images_[other.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

std::size_t Permutation::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < degree(); ++i) count += images_[i] == i;
  return count;
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(degree(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) seen[j] = true;
  }
  return cycles;
}

int Permutation::sign() const { return (degree() - cycle_count()) % 2 == 0 ? 1 : -1; }

Rational hamming_distance(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("hamming_distance: degree mismatch");
  if (a.degree() == 0) return 0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < a.degree(); ++i) agree += a(static_cast<std::uint32_t>(i)) == b(static_cast<std::uint32_t>(i));
  return Rational(BigInt(a.degree() - agree), BigInt(a.degree()));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto img = Permutation::identity(n).images();
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

void to_json(nlohmann::json& j, const Permutation& p) {
  j = nlohmann::json::array();
  for (auto x : p.images()) j.push_back(x + 1);
}

void from_json(const nlohmann::json& j, Permutation& p) {
  if (!j.is_array()) throw std::invalid_argument("permutation must be a 1-based image array");
  p = Permutation::from_one_based(j.get<std::vector<std::int64_t>>());
}

}  // namespace sofic
