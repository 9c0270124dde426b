#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galcluster {

/// Points are 0-based in the C++ API. Every textual form (cycle notation,
/// group/model files, CLI reports) is 1-based.
using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1} stored in one-line form.
///
/// Composition follows the right-to-left convention:
/// compose(p, q)(x) == p(q(x)).
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 0);

  /// Throws DomainError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Lexicographic on the image arrays; permutations of smaller degree
  /// order first.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// (p*q)(x) = p(q(x)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Parses disjoint-cycle notation over {1..degree}, e.g. "(1 2 3)(4 5)".
/// "()" and the empty string denote the identity. Points may be separated by
/// whitespace or commas. Throws ParseError on malformed syntax, out-of-range
/// or repeated points.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Canonical cycle notation: each cycle starts at its least point, cycles are
/// ordered by that point, fixed points are omitted, identity prints as "()".
std::string format_cycles(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

std::size_t hash_images(std::span<const Point> images) noexcept;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return hash_images(p.images()); }
};

}  // namespace galcluster
