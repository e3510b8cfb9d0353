#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace puz5 {

// Permutation of {1..5} in one-line notation: image(i) is where i goes.
// Composition convention: (a * b)(i) = a(b(i)), i.e. the right factor acts
// first.  Under this convention the running product of a move word is
// obtained by right-multiplying by each successive letter.
class Perm {
 public:
  static constexpr int kDegree = 5;

  Perm() : img_{1, 2, 3, 4, 5} {}
  explicit Perm(const std::array<std::uint8_t, 5>& images);

  static Perm identity() { return Perm(); }
  static Perm from_one_line(std::string_view digits);

  // 1-based application.
  int operator()(int i) const { return img_[i - 1]; }

  Perm operator*(const Perm& rhs) const {
    Perm r;
    for (int i = 0; i < kDegree; ++i) r.img_[i] = img_[rhs.img_[i] - 1];
    return r;
  }

  Perm inverse() const;
  int order() const;
  bool is_identity() const { return *this == Perm(); }

  // One-line string, e.g. "21453".
  std::string one_line() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::array<std::uint8_t, 5> img_;
};

// Parses disjoint cycle notation over 1..5, e.g. "(1,2)(3,4,5)".  Omitted
// points are fixed; the empty string is the identity.  Throws
// std::invalid_argument naming the offending token.
Perm parse_cycles(std::string_view text);

}  // namespace puz5
