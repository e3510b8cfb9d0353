#include "puz5/puzzle.hpp"

#include <stdexcept>

namespace puz5 {

namespace {

// sigma_f reading order: offsets from the blank cell.
constexpr std::array<std::pair<int, int>, 5> kSigmaOffsets = {
    {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}};

}  // namespace

bool BoardGraph::adjacent(int u, int v) const {
  for (auto [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

int BoardGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

BoardGraph build_cylinder(int rows, int cols) {
  if (rows != 2 || cols != 3)
    throw std::invalid_argument("unsupported board: only the 2x3 cylinder is built");
  BoardGraph g{rows, cols, {}};
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      CylCoord a = CylCoord::from_cell(u), b = CylCoord::from_cell(v);
      int dr = ((a.row - b.row) % 2 + 2) % 2;
      int dc = ((a.col - b.col) % 3 + 3) % 3;
      bool adj = (dr == 1 && dc == 0) || (dr == 0 && (dc == 1 || dc == 2));
      if (adj) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

Position::Position(const std::array<std::uint8_t, 6>& tiles) : tiles_(tiles) {
  std::array<bool, 6> seen{};
  for (std::uint8_t t : tiles_) {
    if (t > 5 || seen[t])
      throw std::invalid_argument("position is not a bijection onto 0..5");
    seen[t] = true;
  }
}

Position Position::home() { return Position(); }

Position Position::parse(std::string_view text) {
  if (text.size() != 7 || text[3] != '/')
    throw std::invalid_argument("position must look like \"012/345\", got \"" +
                                std::string(text) + "\"");
  std::array<std::uint8_t, 6> tiles{};
  int k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == 3) continue;
    char c = text[i];
    if (c < '0' || c > '5')
      throw std::invalid_argument(std::string("bad tile digit '") + c + "'");
    tiles[k++] = static_cast<std::uint8_t>(c - '0');
  }
  return Position(tiles);
}

CylCoord Position::blank() const {
  for (int c = 0; c < 6; ++c)
    if (tiles_[c] == 0) return CylCoord::from_cell(c);
  throw std::logic_error("position has no blank");
}

std::string Position::str() const {
  std::string s;
  s.reserve(7);
  for (int c = 0; c < 6; ++c) {
    if (c == 3) s.push_back('/');
    s.push_back(static_cast<char>('0' + tiles_[c]));
  }
  return s;
}

Position apply_move(const Position& f, MoveLetter l) {
  CylCoord b = f.blank();
  CylCoord target;
  switch (l) {
    case MoveLetter::R: target = b.shifted(0, 1); break;
    case MoveLetter::L: target = b.shifted(0, 2); break;
    case MoveLetter::V: target = b.shifted(1, 0); break;
  }
  std::array<std::uint8_t, 6> tiles{};
  for (int c = 0; c < 6; ++c)
    tiles[c] = static_cast<std::uint8_t>(f.tile_at(CylCoord::from_cell(c)));
  std::swap(tiles[b.cell()], tiles[target.cell()]);
  return Position(tiles);
}

GroupElem encode(const Position& f) {
  CylCoord b = f.blank();
  std::array<std::uint8_t, 5> img{};
  for (int i = 0; i < 5; ++i) {
    auto [dr, dc] = kSigmaOffsets[i];
    img[i] = static_cast<std::uint8_t>(f.tile_at(b.shifted(dr, dc)));
  }
  return {Perm(img), static_cast<std::uint8_t>(b.row),
          static_cast<std::uint8_t>(b.col)};
}

Position decode(const GroupElem& g) {
  CylCoord b{g.x, g.y};
  std::array<std::uint8_t, 6> tiles{};
  tiles[b.cell()] = 0;
  for (int i = 0; i < 5; ++i) {
    auto [dr, dc] = kSigmaOffsets[i];
    tiles[b.shifted(dr, dc).cell()] = static_cast<std::uint8_t>(g.sigma(i + 1));
  }
  return Position(tiles);
}

}  // namespace puz5
