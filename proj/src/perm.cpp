#include "puz5/perm.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace puz5 {

namespace {

void check_images(const std::array<std::uint8_t, 5>& img) {
  std::array<bool, 5> seen{};
  for (std::uint8_t v : img) {
    if (v < 1 || v > 5)
      throw std::invalid_argument("permutation image out of range 1..5: " +
                                  std::to_string(int(v)));
    if (seen[v - 1])
      throw std::invalid_argument("repeated permutation image: " +
                                  std::to_string(int(v)));
    seen[v - 1] = true;
  }
}

}  // namespace

Perm::Perm(const std::array<std::uint8_t, 5>& images) : img_(images) {
  check_images(img_);
}

Perm Perm::from_one_line(std::string_view digits) {
  if (digits.size() != 5)
    throw std::invalid_argument("one-line permutation must have 5 digits, got \"" +
                                std::string(digits) + "\"");
  std::array<std::uint8_t, 5> img{};
  for (int i = 0; i < 5; ++i) {
    if (digits[i] < '1' || digits[i] > '5')
      throw std::invalid_argument(std::string("bad one-line digit '") +
                                  digits[i] + "'");
    img[i] = static_cast<std::uint8_t>(digits[i] - '0');
  }
  return Perm(img);
}

Perm Perm::inverse() const {
  Perm r;
  for (int i = 0; i < kDegree; ++i) r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

int Perm::order() const {
  int k = 1;
  Perm p = *this;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::string Perm::one_line() const {
  std::string s(5, '0');
  for (int i = 0; i < kDegree; ++i) s[i] = static_cast<char>('0' + img_[i]);
  return s;
}

Perm parse_cycles(std::string_view text) {
  std::array<std::uint8_t, 5> img = {1, 2, 3, 4, 5};
  std::array<bool, 5> used{};
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument(std::string("expected '(' at \"") +
                                  std::string(text.substr(pos)) + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size())
        throw std::invalid_argument("unterminated cycle in \"" + std::string(text) + "\"");
      char c = text[pos];
      if (c >= '1' && c <= '5') {
        int p = c - '0';
        if (used[p - 1])
          throw std::invalid_argument("point repeated in cycles: " + std::to_string(p));
        used[p - 1] = true;
        cycle.push_back(p);
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw std::invalid_argument(std::string("expected ',' or ')' at \"") +
                                    std::string(text.substr(pos)) + "\"");
      }
      throw std::invalid_argument(std::string("bad token '") + c + "' in cycle notation");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i] - 1] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return Perm(img);
}

}  // namespace puz5
