#include "sdikit/alphabet.hpp"

#include <algorithm>

#include "sdikit/errors.hpp"

namespace sdikit {

bool Alphabet::is_valid_symbol(char c) noexcept {
  const auto uc = static_cast<unsigned char>(c);
  if (uc < 0x21 || uc > 0x7e) return false;
  return c != '#' && c != '-' && c != '>';
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw InputError("alphabet must not be empty");
  std::sort(symbols_.begin(), symbols_.end());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (!is_valid_symbol(c)) {
      throw InputError(std::string("invalid alphabet symbol '") + c + "'");
    }
    if (i > 0 && symbols_[i - 1] == c) {
      throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
    }
  }
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    index_[static_cast<unsigned char>(symbols_[i])] = static_cast<std::int16_t>(i);
  }
}

std::size_t Alphabet::require_index(char c) const {
  if (auto idx = index_of(c)) return *idx;
  throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
}

void Alphabet::check_word(std::string_view w) const {
  for (char c : w) require_index(c);
}

bool Alphabet::covers(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

Alphabet Alphabet::united(const Alphabet& other) const {
  std::string merged = symbols_;
  for (char c : other.symbols_) {
    if (!contains(c)) merged.push_back(c);
  }
  return Alphabet(merged);
}

}  // namespace sdikit
