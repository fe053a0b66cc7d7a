#pragma once

#include <cctype>
#include <cstddef>
#include <string_view>

namespace flagclean::lexing {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Length of the identifier starting at s[pos], or 0. A '-' directly after
/// '_' and followed by a digit is part of the name, so "mu_-1" is a single
/// identifier while "mu_0-1" is "mu_0" minus one.
inline std::size_t identifier_length(std::string_view s, std::size_t pos) {
  if (pos >= s.size() || !ident_start(s[pos])) return 0;
  std::size_t i = pos + 1;
  while (i < s.size()) {
    if (ident_char(s[i])) {
      ++i;
    } else if (s[i] == '-' && s[i - 1] == '_' && i + 1 < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      ++i;
    } else {
      break;
    }
  }
  return i - pos;
}

inline bool is_identifier(std::string_view s) {
  return !s.empty() && identifier_length(s, 0) == s.size();
}

}  // namespace flagclean::lexing
