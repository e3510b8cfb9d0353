#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puz5/group.hpp"

namespace puz5 {

// Cell of the 2x3 cylinder: row mod 2, column mod 3.
struct CylCoord {
  int row = 0;
  int col = 0;

  CylCoord shifted(int dr, int dc) const {
    return {(row + dr) % 2, (col + dc) % 3};
  }
  int cell() const { return row * 3 + col; }
  static CylCoord from_cell(int c) { return {c / 3, c % 3}; }

  auto operator<=>(const CylCoord&) const = default;
};

// The board as a plain undirected graph; only the 2x3 cylinder is supported.
struct BoardGraph {
  int rows = 0;
  int cols = 0;
  std::vector<std::pair<int, int>> edges;  // cell index pairs, u < v

  int vertex_count() const { return rows * cols; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
};

BoardGraph build_cylinder(int rows, int cols);

// A position: bijection cell -> {0..5}, 0 marking the blank.
class Position {
 public:
  Position() = default;
  explicit Position(const std::array<std::uint8_t, 6>& tiles);

  static Position home();  // blank at (0,0), encoding = group identity
  static Position parse(std::string_view text);  // "012/345"

  int tile_at(CylCoord c) const { return tiles_[c.cell()]; }
  CylCoord blank() const;

  std::string str() const;  // "012/345"

  auto operator<=>(const Position&) const = default;

 private:
  std::array<std::uint8_t, 6> tiles_{0, 1, 2, 3, 4, 5};
};

// Slides the blank: R swaps it with the cell one column right, L one column
// left, V the other row.  Always legal on the cylinder.
Position apply_move(const Position& f, MoveLetter l);

// The encoding (sigma_f, x, y): blank at (x, y), sigma read off the five
// occupied cells at offsets (0,1),(0,2),(1,0),(1,1),(1,2) from the blank.
GroupElem encode(const Position& f);
Position decode(const GroupElem& g);

}  // namespace puz5
