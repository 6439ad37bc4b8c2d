#include "sdikit/oracle.hpp"

#include <algorithm>
#include <string>

#include "sdikit/errors.hpp"

namespace sdikit::oracle {

namespace {

// Calls fn(|x1|, |u|, |v|) for every decomposition x = x1·u·v·x2,
// y = u·z·v with u, v nonempty.
template <typename Fn>
void for_each_decomposition(std::string_view x, std::string_view y, Fn&& fn) {
  if (y.size() < 2 || x.size() < 2) return;
  for (std::size_t ulen = 1; ulen < y.size(); ++ulen) {
    const auto u = y.substr(0, ulen);
    for (std::size_t vlen = 1; ulen + vlen <= y.size() && ulen + vlen <= x.size(); ++vlen) {
      const auto v = y.substr(y.size() - vlen);
      for (std::size_t start = 0; start + ulen + vlen <= x.size(); ++start) {
        if (x.substr(start, ulen) == u && x.substr(start + ulen, vlen) == v) {
          fn(start, ulen, vlen);
        }
      }
    }
  }
}

Word splice(std::string_view x, std::string_view y, std::size_t start, std::size_t overlap) {
  Word out;
  out.reserve(x.size() + y.size() - overlap);
  out.append(x.substr(0, start));
  out.append(y);
  out.append(x.substr(start + overlap));
  return out;
}

bool is_maximal(std::string_view x, std::string_view y, std::size_t start, std::size_t ulen,
                std::size_t vlen) {
  const std::size_t x2_begin = start + ulen + vlen;
  const std::size_t x2_len = x.size() - x2_begin;
  for (std::size_t p = 0; p <= start; ++p) {
    for (std::size_t s = 0; s <= x2_len; ++s) {
      if (p == 0 && s == 0) continue;
      if (p + ulen + vlen + s > y.size()) continue;
      // y = x1'·u·z'·v·x2'
      const auto head = x.substr(start - p, p + ulen);
      const auto tail = x.substr(start + ulen, vlen + s);
      if (y.substr(0, head.size()) == head && y.substr(y.size() - tail.size()) == tail) {
        return false;
      }
    }
  }
  return true;
}

bool is_maximal_one_sided(std::string_view x, std::string_view y, std::size_t start,
                          std::size_t ulen, std::size_t vlen) {
  // Suffix of x1·u longer than u that is a prefix of u·z.
  const std::size_t uz_len = y.size() - vlen;
  for (std::size_t len = ulen + 1; len <= start + ulen && len <= uz_len; ++len) {
    if (x.substr(start + ulen - len, len) == y.substr(0, len)) return false;
  }
  // Prefix of v·x2 longer than v that is a suffix of z·v.
  const std::size_t zv_len = y.size() - ulen;
  for (std::size_t len = vlen + 1; len <= x.size() - start - ulen && len <= zv_len; ++len) {
    if (x.substr(start + ulen, len) == y.substr(y.size() - len)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(SdiVariant v) noexcept {
  switch (v) {
    case SdiVariant::general:
      return "sdi";
    case SdiVariant::alphabetic:
      return "asdi";
    case SdiVariant::maximal:
      return "maxsdi";
    case SdiVariant::minimal:
      return "minsdi";
  }
  return "?";
}

SdiVariant parse_variant(std::string_view name) {
  if (name == "sdi" || name == "general") return SdiVariant::general;
  if (name == "asdi" || name == "alphabetic") return SdiVariant::alphabetic;
  if (name == "maxsdi" || name == "maximal" || name == "max") return SdiVariant::maximal;
  if (name == "minsdi" || name == "minimal" || name == "min") return SdiVariant::minimal;
  throw InputError("unknown SDI variant '" + std::string(name) + "'");
}

std::vector<Decomposition> decompositions(std::string_view x, std::string_view y) {
  std::vector<Decomposition> out;
  for_each_decomposition(x, y, [&](std::size_t start, std::size_t ulen, std::size_t vlen) {
    out.push_back({Word(x.substr(0, start)), Word(y.substr(0, ulen)),
                   Word(y.substr(ulen, y.size() - ulen - vlen)), Word(y.substr(y.size() - vlen)),
                   Word(x.substr(start + ulen + vlen))});
  });
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.x1.size() != b.x1.size()) return a.x1.size() < b.x1.size();
    if (a.u.size() != b.u.size()) return a.u.size() < b.u.size();
    return a.v.size() < b.v.size();
  });
  return out;
}

bool is_unbordered(std::string_view w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.substr(0, len) == w.substr(w.size() - len)) return false;
  }
  return true;
}

WordSet sdi_strings(std::string_view x, std::string_view y) {
  WordSet out;
  for_each_decomposition(x, y, [&](std::size_t start, std::size_t ulen, std::size_t vlen) {
    out.insert(splice(x, y, start, ulen + vlen));
  });
  return out;
}

WordSet asdi_strings(std::string_view x, std::string_view y) {
  WordSet out;
  for_each_decomposition(x, y, [&](std::size_t start, std::size_t ulen, std::size_t vlen) {
    if (ulen == 1 && vlen == 1) out.insert(splice(x, y, start, 2));
  });
  return out;
}

WordSet max_sdi_strings(std::string_view x, std::string_view y) {
  WordSet out;
  for_each_decomposition(x, y, [&](std::size_t start, std::size_t ulen, std::size_t vlen) {
    if (is_maximal(x, y, start, ulen, vlen)) out.insert(splice(x, y, start, ulen + vlen));
  });
  return out;
}

WordSet max_sdi_strings_alt(std::string_view x, std::string_view y) {
  WordSet out;
  for_each_decomposition(x, y, [&](std::size_t start, std::size_t ulen, std::size_t vlen) {
    if (is_maximal_one_sided(x, y, start, ulen, vlen)) {
      out.insert(splice(x, y, start, ulen + vlen));
    }
  });
  return out;
}

WordSet min_sdi_strings(std::string_view x, std::string_view y) {
  WordSet out;
  for_each_decomposition(x, y, [&](std::size_t start, std::size_t ulen, std::size_t vlen) {
    if (is_unbordered(y.substr(0, ulen)) && is_unbordered(y.substr(y.size() - vlen))) {
      out.insert(splice(x, y, start, ulen + vlen));
    }
  });
  return out;
}

WordSet apply(SdiVariant variant, std::string_view x, std::string_view y) {
  switch (variant) {
    case SdiVariant::general:
      return sdi_strings(x, y);
    case SdiVariant::alphabetic:
      return asdi_strings(x, y);
    case SdiVariant::maximal:
      return max_sdi_strings(x, y);
    case SdiVariant::minimal:
      return min_sdi_strings(x, y);
  }
  return {};
}

std::optional<Word> shuffle_on_trajectory(std::string_view x, std::string_view y,
                                          std::string_view t) {
  Word out;
  std::size_t i = 0;
  std::size_t j = 0;
  for (char c : t) {
    switch (c) {
      case '0':
        if (i >= x.size()) return std::nullopt;
        out.push_back(x[i++]);
        break;
      case '1':
        if (j >= y.size()) return std::nullopt;
        out.push_back(y[j++]);
        break;
      case 's':
        if (i >= x.size() || j >= y.size() || x[i] != y[j]) return std::nullopt;
        out.push_back(x[i]);
        ++i;
        ++j;
        break;
      default:
        throw InputError(std::string("'") + c + "' is not a shuffle trajectory symbol");
    }
  }
  if (i != x.size() || j != y.size()) return std::nullopt;
  return out;
}

std::optional<Word> delete_on_trajectory(std::string_view x, std::string_view y,
                                         std::string_view t) {
  Word out;
  std::size_t i = 0;
  std::size_t j = 0;
  for (char c : t) {
    switch (c) {
      case 'i':
        if (i >= x.size()) return std::nullopt;
        out.push_back(x[i++]);
        break;
      case 'd':
      case 's':
        if (i >= x.size() || j >= y.size() || x[i] != y[j]) return std::nullopt;
        if (c == 's') out.push_back(x[i]);
        ++i;
        ++j;
        break;
      default:
        throw InputError(std::string("'") + c + "' is not a deletion trajectory symbol");
    }
  }
  if (i != x.size() || j != y.size()) return std::nullopt;
  return out;
}

WordSet bounded_language_op(SdiVariant variant, const std::vector<Word>& left,
                            const std::vector<Word>& right) {
  WordSet out;
  for (const auto& x : left) {
    for (const auto& y : right) {
      out.merge(apply(variant, x, y));
    }
  }
  return out;
}

std::vector<Word> all_words(std::string_view symbols, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : symbols) out.push_back(out[i] + c);
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace sdikit::oracle
