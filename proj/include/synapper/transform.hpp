// Declarative <-> interrogative conversion and subject-position
// normalization.

#ifndef SYNAPPER_TRANSFORM_HPP
#define SYNAPPER_TRANSFORM_HPP

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synapper/linearize.hpp"

namespace synapper {

/// A question word; its category is WH by construction.
struct WhToken {
  std::string surface;

  Token token() const { return {surface, Category::WH}; }
};

namespace detail {

struct BlockRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline std::optional<BlockRange> role_range(const LinearSentence& s, Role r) {
  std::optional<BlockRange> out;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].role != r || s.tokens[i].origin == Origin::Inserted) continue;
    if (!out) out = BlockRange{i, i + 1};
    else out->end = i + 1;
  }
  return out;
}

/// Index permutation that exchanges two disjoint ranges of [0, n).
inline std::vector<std::size_t> swap_permutation(std::size_t n, BlockRange a, BlockRange b) {
  if (b.begin < a.begin) std::swap(a, b);
  std::vector<std::size_t> out;
  out.reserve(n);
  auto append = [&](std::size_t from, std::size_t to) {
    for (auto i = from; i < to; ++i) out.push_back(i);
  };
  append(0, a.begin);
  append(b.begin, b.end);
  append(a.end, b.begin);
  append(a.begin, a.end);
  append(b.end, n);
  return out;
}

inline bool contains_wh(const Loop& loop) {
  bool found = false;
  for_each_token(loop, [&](const Token& t) { found = found || t.category == Category::WH; });
  return found;
}

inline bool same_word(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return std::tolower(static_cast<unsigned char>(a[0])) ==
             std::tolower(static_cast<unsigned char>(b[0])) &&
         a.compare(1, std::string::npos, b, 1, std::string::npos) == 0;
}

/// Where the wh word sits in the question, in terms of the declarative
/// linearization.
inline std::size_t wh_position(const LinearSentence& declarative, WhRule rule) {
  if (rule != WhRule::PreSubject) return 0;
  auto subject = role_range(declarative, Role::Subject);
  return subject ? subject->begin : 0;
}

}  // namespace detail

/// Linearizes a declarative structure and marks it as a question under the
/// profile's wh rule.
inline LinearSentence interrogativize(const Synapper& s, const WhToken& wh, const LanguageProfile& p) {
  if (detail::contains_wh(s.main()))
    throw OperationError("WhAlreadyPresent", "", "structure already contains a WH token");

  auto base = linearize(s, p);
  const LinearToken wh_token{wh.token(), Origin::Inserted, std::nullopt, -1};
  const auto at = detail::wh_position(base, p.wh_rule);

  if (p.wh_rule == WhRule::InitialWithInversion) {
    auto subject = detail::role_range(base, Role::Subject);
    auto verb = detail::role_range(base, Role::Verb);
    if (subject && verb) {
      const auto perm = detail::swap_permutation(base.tokens.size(), *subject, *verb);
      std::vector<LinearToken> swapped;
      swapped.reserve(perm.size());
      for (auto i : perm) swapped.push_back(base.tokens[i]);
      base.tokens = std::move(swapped);
    }
  }
  base.tokens.insert(base.tokens.begin() + static_cast<std::ptrdiff_t>(at), wh_token);
  return base;
}

/// Strips the wh word and undoes inversion, checking the result against the
/// declarative reading of `skeleton`. The skeleton supplies the structure.
inline Synapper declarativize(const LinearSentence& question, const Synapper& skeleton,
                              const LanguageProfile& p) {
  if (detail::contains_wh(skeleton.main()))
    throw OperationError("WhAlreadyPresent", "", "skeleton contains a WH token");

  const auto declarative = linearize(skeleton, p);
  const auto n = declarative.tokens.size();
  if (question.tokens.size() == n)
    throw OperationError("NoWhFound", "", "sentence has no extra question word");
  if (question.tokens.size() != n + 1)
    throw OperationError("InversionMismatch", "",
                         "expected " + std::to_string(n + 1) + " tokens, got " +
                             std::to_string(question.tokens.size()));

  const auto at = detail::wh_position(declarative, p.wh_rule);
  for (std::size_t i = 0; i < question.tokens.size(); ++i)
    if (question.tokens[i].token.category == Category::WH && i != at)
      throw OperationError("InversionMismatch", "token " + std::to_string(i),
                           "question word found at an unexpected position");

  std::vector<std::string> rest;
  for (std::size_t i = 0; i < question.tokens.size(); ++i)
    if (i != at) rest.push_back(question.tokens[i].token.surface);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (p.wh_rule == WhRule::InitialWithInversion) {
    auto subject = detail::role_range(declarative, Role::Subject);
    auto verb = detail::role_range(declarative, Role::Verb);
    if (subject && verb) perm = detail::swap_permutation(n, *subject, *verb);
  }
  std::vector<std::string> recovered(n);
  for (std::size_t i = 0; i < n; ++i) recovered[perm[i]] = rest[i];

  for (std::size_t i = 0; i < n; ++i)
    if (!detail::same_word(recovered[i], declarative.tokens[i].token.surface))
      throw OperationError("InversionMismatch", "token " + std::to_string(i),
                           "expected '" + declarative.tokens[i].token.surface + "', found '" +
                               recovered[i] + "'");
  return skeleton;
}

/// Clears a subject-final source surface so that readings start at the
/// subject again. The ring is untouched.
inline Synapper normalize_subject_position(const Synapper& s) {
  return s.surface_subject_final() ? s.with_surface_subject_final(false) : s;
}

/// Whitespace-split sentence text. Trailing sentence punctuation on the last
/// word is dropped.
inline LinearSentence sentence_from_text(std::string_view text) {
  LinearSentence out;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) out.tokens.push_back({{word, Category::OTHER}, Origin::Node, std::nullopt, -1});
  if (!out.tokens.empty()) {
    auto& last = out.tokens.back().token.surface;
    while (!last.empty() && (last.back() == '?' || last.back() == '.' || last.back() == '!'))
      last.pop_back();
    if (last.empty()) out.tokens.pop_back();
  }
  return out;
}

}  // namespace synapper

#endif  // SYNAPPER_TRANSFORM_HPP
