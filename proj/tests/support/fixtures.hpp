// Shared helpers for loading the bundled fixtures, profiles and lexicons.

#ifndef SYNAPPER_TESTS_FIXTURES_HPP
#define SYNAPPER_TESTS_FIXTURES_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "synapper/synapper.hpp"

namespace synapper::testing {

inline std::string data_path(std::string_view rel) { return std::string(SYNAPPER_DATA_DIR) + "/" + std::string(rel); }

inline Synapper fixture(std::string_view name) {
  return load_structure(data_path("fixtures/" + std::string(name) + ".json"));
}

inline LanguageProfile profile(std::string_view name) {
  return load_profile(data_path("profiles/" + std::string(name) + ".json"));
}

inline Lexicon lexicon(std::string_view name) {
  return load_lexicon(data_path("lexicons/" + std::string(name) + ".tsv"));
}

/// Every valid fixture.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"horse", "tim",  "colette", "cena_a",
                                                 "cena_b", "mary", "go",      "korean_case"};
  return names;
}

/// Every bundled profile.
inline const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names = {"en", "fr", "ja-gloss", "uz-gloss", "cy-gloss",
                                                 "vso", "uz", "en-korean-case"};
  return names;
}

inline std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace synapper::testing

#endif  // SYNAPPER_TESTS_FIXTURES_HPP
