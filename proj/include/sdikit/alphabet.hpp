#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sdikit {

using Symbol = char;
/// A word is a sequence of single-character symbols; the empty string is ε.
using Word = std::string;

/// Ordered finite set of single-character symbols.
///
/// Symbols are printable ASCII characters other than whitespace and the
/// characters reserved by the automaton text format (`#`, `-`, `>`).
class Alphabet {
 public:
  /// Builds an alphabet from the characters of `symbols`. Throws InputError on
  /// an empty set, a duplicate, or a forbidden character.
  explicit Alphabet(std::string_view symbols);

  static bool is_valid_symbol(char c) noexcept;

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(std::size_t index) const { return symbols_.at(index); }
  std::string_view symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> index_of(char c) const noexcept {
    const auto idx = index_[static_cast<unsigned char>(c)];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
  }
  bool contains(char c) const noexcept { return index_of(c).has_value(); }

  /// Index of `c`, throwing InputError when it is not a member.
  std::size_t require_index(char c) const;

  /// Throws InputError if some symbol of `w` is outside the alphabet.
  void check_word(std::string_view w) const;
  bool covers(std::string_view w) const noexcept;

  Alphabet united(const Alphabet& other) const;

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

}  // namespace sdikit
