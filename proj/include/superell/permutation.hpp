#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superell {

class CycleType;

// Permutation of {0, ..., n-1}, stored as the image array.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t n);
  // Single cycle (c0 c1 ... ck) inside the identity on n points.
  static Permutation from_cycle(std::size_t n,
                                const std::vector<std::uint32_t>& cycle);

  std::size_t size() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return img_[i]; }

  // (a.compose(b))(x) = a(b(x)).
  Permutation compose(const Permutation& o) const;
  Permutation inverse() const;
  // Same permutation viewed on m >= size() points, fixing the new ones.
  Permutation extended(std::size_t m) const;
  bool is_even() const;
  CycleType cycle_type() const;
  std::uint64_t order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  const std::vector<std::uint32_t>& images() const { return img_; }

 private:
  std::vector<std::uint32_t> img_;
};

// Multiset of cycle lengths summing to n, kept sorted descending.
class CycleType {
 public:
  explicit CycleType(std::vector<std::uint32_t> parts);
  static CycleType parse(const std::string& text);  // "2,2,1"

  std::size_t n() const;
  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t fixed_points() const;
  bool is_p_regular(std::uint64_t p) const;  // no part divisible by p
  std::string to_string() const;

  bool operator==(const CycleType& o) const { return parts_ == o.parts_; }
  bool operator<(const CycleType& o) const { return parts_ < o.parts_; }

 private:
  std::vector<std::uint32_t> parts_;
};

}  // namespace superell
