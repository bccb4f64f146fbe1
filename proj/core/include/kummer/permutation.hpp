#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kummer {

// Permutation of {1..n}. Stored 0-based; the public interface is 1-based.
// Composition is right-to-left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  explicit Permutation(std::size_t n = 0);
  // images[i-1] = image of i, 1-based values; throws std::invalid_argument if not a bijection
  static Permutation from_images(const std::vector<int>& images);
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
  // "(1 5 2 4)(3 6)", "(1524)(36)" or "()"; digits without separators are single points
  static Permutation parse(std::string_view text, std::size_t n);

  std::size_t degree() const { return image_.size(); }
  int operator()(int i) const;
  const std::vector<int>& images0() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  // sorted descending, fixed points included
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;  // 1-based, nontrivial only
  // +1 even, -1 odd
  int sign() const;
  std::size_t order() const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

 private:
  std::vector<int> image_;
};

// r * p * r^-1
Permutation conjugate(const Permutation& p, const Permutation& r);

// Orbits of the group generated by gens, each sorted, 1-based, ordered by smallest element.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, std::size_t n);
bool is_transitive(const std::vector<Permutation>& gens, std::size_t n);
// Order of the generated group by closure; throws std::length_error beyond max_elements.
std::size_t group_order(const std::vector<Permutation>& gens, std::size_t n, std::size_t max_elements = 1000000);

std::string partition_to_string(const std::vector<int>& parts);

}  // namespace kummer
