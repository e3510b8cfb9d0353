#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "puz5/perm.hpp"

namespace puz5 {

// The three blank moves.  Enum order L < R < V matches the word order used
// by canonicalization and by the fixed search order.
enum class MoveLetter : std::uint8_t { L = 0, R = 1, V = 2 };

inline constexpr std::array<MoveLetter, 3> kAllLetters = {
    MoveLetter::L, MoveLetter::R, MoveLetter::V};

char to_char(MoveLetter l);
MoveLetter letter_from_char(char c);  // case-insensitive, throws on other chars

using MoveWord = std::vector<MoveLetter>;

MoveWord word_from_string(std::string_view s);
std::string word_to_string(const MoveWord& w);
MoveWord repeat_word(const MoveWord& w, int times);

// Element of G = S5 x Z/2 x Z/3.  The S5 part is the relative tile
// configuration, (x, y) is the blank cell.  Residues are kept in
// 0..1 / 0..2 at all times.
struct GroupElem {
  Perm sigma;
  std::uint8_t x = 0;  // mod 2
  std::uint8_t y = 0;  // mod 3

  static GroupElem identity() { return {}; }

  GroupElem operator*(const GroupElem& rhs) const {
    return {sigma * rhs.sigma, static_cast<std::uint8_t>((x + rhs.x) % 2),
            static_cast<std::uint8_t>((y + rhs.y) % 3)};
  }

  GroupElem inverse() const {
    return {sigma.inverse(), static_cast<std::uint8_t>((2 - x) % 2),
            static_cast<std::uint8_t>((3 - y) % 3)};
  }

  bool is_identity() const { return sigma.is_identity() && x == 0 && y == 0; }
  int order() const;

  // "(21453,0,1)" — one-line S5 part plus the two residues.
  std::string str() const;

  auto operator<=>(const GroupElem&) const = default;
};

// The fixed S5 generators: R = (1,2)(3,4,5), L = (1,2)(3,5,4), V = (1,4)(2,5).
Perm letter_perm(MoveLetter l);

// The lifted generators R^ = (R,0,1), L^ = (L,0,2), V^ = (V,1,0).
GroupElem generator(MoveLetter l);

// Left-to-right product of a word's letters, in S5 or in G.
Perm product_in_s5(const MoveWord& w);
GroupElem product_in_g(const MoveWord& w);

}  // namespace puz5
