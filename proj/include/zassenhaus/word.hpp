#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace zassenhaus {

/// The two generators of the free algebra. The BCH layer reads the first as
/// X and the second as Y; nothing else changes.
enum class Gen : std::uint8_t { A = 0, B = 1 };

/// A monomial of the free algebra: a finite product of generators. The empty
/// word is the algebra unit. Words order by degree first, then
/// lexicographically (deglex), which fixes the canonical term order for every
/// polynomial in the project.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Gen> letters) : letters_(letters) {}
  explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}

  int degree() const { return static_cast<int>(letters_.size()); }
  int bdeg() const {
    return static_cast<int>(
        std::count(letters_.begin(), letters_.end(), Gen::B));
  }
  bool empty() const { return letters_.empty(); }
  const std::vector<Gen> &letters() const { return letters_; }

  Word concat(const Word &other) const {
    std::vector<Gen> out;
    out.reserve(letters_.size() + other.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
  }

  Word reversed() const {
    return Word(std::vector<Gen>(letters_.rbegin(), letters_.rend()));
  }

  friend bool operator==(const Word &a, const Word &b) = default;

  friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
      return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

private:
  std::vector<Gen> letters_;
};

/// The degree-n power of a single generator as a word.
inline Word word_power(Gen g, int n) {
  return Word(std::vector<Gen>(static_cast<std::size_t>(n), g));
}

} // namespace zassenhaus
