#include "superell/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superell {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("Permutation: images not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycle(std::size_t n,
                                    const std::vector<std::uint32_t>& cycle) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    std::uint32_t from = cycle[i];
    std::uint32_t to = cycle[(i + 1) % cycle.size()];
    if (from >= n || to >= n)
      throw std::invalid_argument("Permutation: cycle entry out of range");
    img[from] = to;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (size() != o.size())
    throw std::invalid_argument("Permutation: size mismatch");
  std::vector<std::uint32_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = img_[o.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::extended(std::size_t m) const {
  if (m < size())
    throw std::invalid_argument("Permutation::extended: shrinking not allowed");
  std::vector<std::uint32_t> img = img_;
  for (std::size_t i = size(); i < m; ++i)
    img.push_back(static_cast<std::uint32_t>(i));
  return Permutation(std::move(img));
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::uint32_t> parts;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

bool Permutation::is_even() const {
  CycleType t = cycle_type();
  std::size_t transpositions = 0;
  for (std::uint32_t part : t.parts()) transpositions += part - 1;
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::uint32_t part : cycle_type().parts())
    ord = std::lcm(ord, static_cast<std::uint64_t>(part));
  return ord;
}

CycleType::CycleType(std::vector<std::uint32_t> parts)
    : parts_(std::move(parts)) {
  for (std::uint32_t p : parts_)
    if (p < 1) throw std::invalid_argument("CycleType: part < 1");
  std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::parse(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start)
      throw std::invalid_argument("CycleType: expected digit at offset " +
                                  std::to_string(i));
    parts.push_back(
        static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start))));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size()) {
      if (text[i] != ',')
        throw std::invalid_argument("CycleType: expected ',' at offset " +
                                    std::to_string(i));
      ++i;
    }
  }
  if (parts.empty()) throw std::invalid_argument("CycleType: empty");
  return CycleType(std::move(parts));
}

std::size_t CycleType::n() const {
  std::size_t total = 0;
  for (std::uint32_t p : parts_) total += p;
  return total;
}

std::size_t CycleType::fixed_points() const {
  return static_cast<std::size_t>(
      std::count(parts_.begin(), parts_.end(), 1u));
}

bool CycleType::is_p_regular(std::uint64_t p) const {
  return std::none_of(parts_.begin(), parts_.end(),
                      [p](std::uint32_t part) { return part % p == 0; });
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

}  // namespace superell
