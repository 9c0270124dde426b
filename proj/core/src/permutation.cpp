#include "galcluster/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

#include "galcluster/errors.hpp"

namespace galcluster {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) {
      throw DomainError("image array is not a bijection of {1.." + std::to_string(images.size()) +
                        "}");
    }
    seen[x] = true;
  }
  return Permutation(Unchecked{}, std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(Unchecked{}, std::move(inv));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                      " and " + std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Permutation(Permutation::Unchecked{}, std::move(out));
}

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cycle notation \"" + std::string(text) + "\": " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      while (pos < text.size() && is_separator(text[pos])) ++pos;
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      unsigned long value = 0;
      auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{} || next == text.data() + pos) throw fail("expected a point");
      pos = static_cast<std::size_t>(next - text.data());
      if (pos < text.size() && !is_separator(text[pos]) && text[pos] != ')') {
        throw fail("unexpected character");
      }
      if (value < 1 || value > degree) {
        throw fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
      }
      Point x = static_cast<Point>(value - 1);
      if (used[x]) throw fail("repeated point " + std::to_string(value));
      used[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start] || p[start] == start) continue;
    any = true;
    out << '(' << start + 1;
    done[start] = true;
    for (Point x = p[start]; x != start; x = p[x]) {
      out << ' ' << x + 1;
      done[x] = true;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << format_cycles(p); }

std::size_t hash_images(std::span<const Point> images) noexcept {
  const std::string_view bytes(reinterpret_cast<const char*>(images.data()), images.size_bytes());
  return std::hash<std::string_view>{}(bytes);
}

}  // namespace galcluster
