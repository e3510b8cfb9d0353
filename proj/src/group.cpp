#include "puz5/group.hpp"

#include <cctype>
#include <stdexcept>

namespace puz5 {

char to_char(MoveLetter l) {
  switch (l) {
    case MoveLetter::L: return 'L';
    case MoveLetter::R: return 'R';
    case MoveLetter::V: return 'V';
  }
  throw std::logic_error("bad MoveLetter");
}

MoveLetter letter_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'L': return MoveLetter::L;
    case 'R': return MoveLetter::R;
    case 'V': return MoveLetter::V;
    default:
      throw std::invalid_argument(std::string("bad move letter '") + c +
                                  "' (expected L, R or V)");
  }
}

MoveWord word_from_string(std::string_view s) {
  MoveWord w;
  w.reserve(s.size());
  for (char c : s) w.push_back(letter_from_char(c));
  return w;
}

std::string word_to_string(const MoveWord& w) {
  std::string s;
  s.reserve(w.size());
  for (MoveLetter l : w) s.push_back(to_char(l));
  return s;
}

MoveWord repeat_word(const MoveWord& w, int times) {
  MoveWord out;
  out.reserve(w.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

int GroupElem::order() const {
  int k = 1;
  GroupElem p = *this;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::string GroupElem::str() const {
  return "(" + sigma.one_line() + "," + std::to_string(int(x)) + "," +
         std::to_string(int(y)) + ")";
}

Perm letter_perm(MoveLetter l) {
  static const Perm kR = parse_cycles("(1,2)(3,4,5)");
  static const Perm kL = parse_cycles("(1,2)(3,5,4)");
  static const Perm kV = parse_cycles("(1,4)(2,5)");
  switch (l) {
    case MoveLetter::L: return kL;
    case MoveLetter::R: return kR;
    case MoveLetter::V: return kV;
  }
  throw std::logic_error("bad MoveLetter");
}

GroupElem generator(MoveLetter l) {
  switch (l) {
    case MoveLetter::L: return {letter_perm(l), 0, 2};
    case MoveLetter::R: return {letter_perm(l), 0, 1};
    case MoveLetter::V: return {letter_perm(l), 1, 0};
  }
  throw std::logic_error("bad MoveLetter");
}

Perm product_in_s5(const MoveWord& w) {
  Perm p;
  for (MoveLetter l : w) p = p * letter_perm(l);
  return p;
}

GroupElem product_in_g(const MoveWord& w) {
  GroupElem g;
  for (MoveLetter l : w) g = g * generator(l);
  return g;
}

}  // namespace puz5
