#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/matrix.hpp"

namespace monodromy {

/// x_generator^sign, generator is 1-based.
struct Letter {
  std::size_t generator = 1;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x_1, ..., x_g.
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces the given letters.
  explicit FreeWord(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t max_generator() const noexcept;

  /// Appends and reduces at the seam.
  FreeWord& operator*=(const FreeWord& other);
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Accepts `x1 x2^-1`, `a B`, `ab^2`, `X3` (uppercase = inverse). Letters a..z
/// stand for x1..x26 and are only allowed for g <= 26. Whitespace and `*`
/// separate tokens but are optional; the empty string and `1` denote the
/// identity. Throws ParseError.
FreeWord parse_word(std::string_view text, std::size_t g);

/// Inverse of parse_word: letter shorthand when g <= 26, else x-notation.
std::string to_string(const FreeWord& w, std::size_t g);

/// Endomorphism of F_g given by the images of the generators.
class FreeEndomorphism {
 public:
  /// Throws DimensionMismatch if images.size() != rank or a letter exceeds rank.
  FreeEndomorphism(std::size_t rank, std::vector<FreeWord> images);
  static FreeEndomorphism identity(std::size_t rank);
  /// Parses each image with parse_word.
  static FreeEndomorphism parse(std::size_t rank, const std::vector<std::string>& images);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  FreeWord apply(const FreeWord& w) const;

 private:
  std::size_t rank_;
  std::vector<FreeWord> images_;
};

/// (f o h)(x) = f(h(x)).
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& h);

/// Column j is the exponent-sum vector of the image of x_{j+1}.
IntMatrix abelianization_matrix(const FreeEndomorphism& f);

/// |det(abelianization)| = 1; necessary for f to be an automorphism.
bool validate_unimodular(const FreeEndomorphism& f);

}  // namespace monodromy
