#include "monodromy/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace monodromy {

namespace {

constexpr long kMaxExponent = 1'000'000;

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign)
    out.pop_back();
  else
    out.push_back(l);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::size_t read_number(std::string_view text, std::size_t& pos, std::string_view what) {
  std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (start == pos || ec != std::errc() || ptr != text.data() + pos)
    throw ParseError("malformed " + std::string(what) + " at offset " + std::to_string(start));
  return value;
}

}  // namespace

FreeWord::FreeWord(const std::vector<Letter>& letters) {
  for (const auto& l : letters) {
    if (l.generator == 0 || (l.sign != 1 && l.sign != -1))
      throw DomainError("letters need a positive generator index and sign ±1");
    push_reduced(letters_, l);
  }
}

std::size_t FreeWord::max_generator() const noexcept {
  std::size_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

FreeWord& FreeWord::operator*=(const FreeWord& other) {
  for (const auto& l : other.letters_) push_reduced(letters_, l);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->generator, -it->sign});
  return w;
}

FreeWord parse_word(std::string_view text, std::size_t g) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (is_space(text[pos]) || text[pos] == '*')) ++pos;
  };
  const auto first = text.find_first_not_of(" \t\n\r");
  const auto last = text.find_last_not_of(" \t\n\r");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") return FreeWord{};

  while (skip(), pos < text.size()) {
    const char c = text[pos];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(pos));
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    std::size_t index = 0;
    if ((c == 'x' || c == 'X') && pos + 1 < text.size() && is_digit(text[pos + 1])) {
      ++pos;
      index = read_number(text, pos, "generator index");
    } else {
      if (g > 26) throw ParseError("letter shorthand needs rank <= 26; use x1..xg");
      index = static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a') + 1;
      ++pos;
    }
    if (index == 0 || index > g)
      throw ParseError("unknown generator index " + std::to_string(index) + " for rank " + std::to_string(g));

    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      long sign = 1;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
      }
      std::size_t magnitude = read_number(text, pos, "exponent");
      if (magnitude > static_cast<std::size_t>(kMaxExponent)) throw ParseError("exponent too large");
      exponent = sign * static_cast<long>(magnitude);
    }
    if (upper) exponent = -exponent;
    const Letter l{index, exponent < 0 ? -1 : 1};
    for (long n = 0; n < std::labs(exponent); ++n) push_reduced(out, l);
  }
  return FreeWord(out);
}

std::string to_string(const FreeWord& w, std::size_t g) {
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += ' ';
    if (g <= 26) {
      char c = static_cast<char>('a' + l.generator - 1);
      s += l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } else {
      s += 'x' + std::to_string(l.generator);
      if (l.sign < 0) s += "^-1";
    }
  }
  return s;
}

FreeEndomorphism::FreeEndomorphism(std::size_t rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (images_.size() != rank_)
    throw DimensionMismatch("endomorphism needs exactly one image per generator");
  for (const auto& w : images_)
    if (w.max_generator() > rank_) throw DimensionMismatch("image uses a generator beyond the rank");
}

FreeEndomorphism FreeEndomorphism::identity(std::size_t rank) {
  std::vector<FreeWord> images;
  for (std::size_t i = 1; i <= rank; ++i) images.emplace_back(std::vector<Letter>{{i, 1}});
  return {rank, std::move(images)};
}

FreeEndomorphism FreeEndomorphism::parse(std::size_t rank, const std::vector<std::string>& images) {
  if (images.size() != rank)
    throw ParseError("expected " + std::to_string(rank) + " images, got " + std::to_string(images.size()));
  std::vector<FreeWord> words;
  for (const auto& s : images) words.push_back(parse_word(s, rank));
  return {rank, std::move(words)};
}

FreeWord FreeEndomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (l.generator > rank_) throw DimensionMismatch("word uses a generator beyond the rank");
    const FreeWord& image = images_[l.generator - 1];
    out *= (l.sign > 0 ? image : image.inverse());
  }
  return out;
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& h) {
  if (f.rank() != h.rank()) throw DimensionMismatch("compose: ranks differ");
  std::vector<FreeWord> images;
  for (const auto& w : h.images()) images.push_back(f.apply(w));
  return {f.rank(), std::move(images)};
}

IntMatrix abelianization_matrix(const FreeEndomorphism& f) {
  const std::size_t g = f.rank();
  IntMatrix m(g, g);
  for (std::size_t j = 0; j < g; ++j)
    for (const auto& l : f.images()[j].letters()) m(l.generator - 1, j) += l.sign;
  return m;
}

bool validate_unimodular(const FreeEndomorphism& f) {
  return is_unimodular(abelianization_matrix(f));
}

}  // namespace monodromy
