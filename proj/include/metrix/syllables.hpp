// Orthographic syllable counting for Spanish.
//
// Each maximal run of vowel letters is split into nuclei:
//   strong + strong          -> hiatus (two nuclei)
//   any pair with í or ú     -> hiatus
//   otherwise (weak+strong, strong+weak, weak+weak, triphthongs) -> one nucleus
// "y" is a vowel only when it ends the word. Consonants, including "h",
// separate runs.
#pragma once

#include <string_view>

#include "metrix/utf8.hpp"

namespace metrix {

namespace detail {

enum class Letter { kStrong, kWeak, kStressedWeak, kConsonant, kOther };

inline Letter classify_letter(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'o':
    case U'á': case U'é': case U'ó':
    case U'à': case U'è': case U'ò':
      return Letter::kStrong;
    case U'i': case U'u': case U'ü': case U'ï':
      return Letter::kWeak;
    case U'í': case U'ú': case U'ì': case U'ù':
      return Letter::kStressedWeak;
    default:
      return utf8::is_letter(c) ? Letter::kConsonant : Letter::kOther;
  }
}

inline bool is_vowel(Letter l) {
  return l == Letter::kStrong || l == Letter::kWeak ||
         l == Letter::kStressedWeak;
}

}  // namespace detail

// Returns 0 for input without letters, otherwise at least 1.
inline int syllabify(std::string_view word) {
  using detail::Letter;
  std::u32string cps = utf8::decode(word);
  for (auto& c : cps) c = utf8::to_lower(c);

  std::size_t last_letter = std::u32string::npos;
  for (std::size_t i = 0; i < cps.size(); ++i)
    if (utf8::is_letter(cps[i])) last_letter = i;
  if (last_letter == std::u32string::npos) return 0;

  int nuclei = 0;
  Letter prev = Letter::kOther;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    Letter cur = detail::classify_letter(cps[i]);
    if (cps[i] == U'y') cur = (i == last_letter) ? Letter::kWeak : Letter::kConsonant;
    if (detail::is_vowel(cur)) {
      bool hiatus = !detail::is_vowel(prev) ||
                    (prev == Letter::kStrong && cur == Letter::kStrong) ||
                    prev == Letter::kStressedWeak ||
                    cur == Letter::kStressedWeak;
      if (hiatus) ++nuclei;
    }
    prev = cur;
  }
  return nuclei > 0 ? nuclei : 1;
}

}  // namespace metrix
