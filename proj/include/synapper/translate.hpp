// Syntax-based translation: lexeme substitution on an unchanged structure,
// target-order linearization, then morpheme rewriting of the token sequence.

#ifndef SYNAPPER_TRANSLATE_HPP
#define SYNAPPER_TRANSLATE_HPP

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "synapper/linearize.hpp"
#include "synapper/transform.hpp"

namespace synapper {

class Lexicon {
 public:
  using Key = std::pair<std::string, Category>;

  Lexicon() = default;
  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  /// Maps every token to itself.
  static Lexicon identity() {
    Lexicon lex("identity");
    lex.identity_ = true;
    return lex;
  }

  /// Returns false when the key is already present.
  bool add(std::string surface, Category category, std::string target) {
    return entries_.emplace(Key{std::move(surface), category}, std::move(target)).second;
  }

  std::optional<std::string> lookup(const std::string& surface, Category category) const {
    if (auto it = entries_.find({surface, category}); it != entries_.end()) return it->second;
    if (identity_) return surface;
    return std::nullopt;
  }

  const std::string& name() const noexcept { return name_; }
  const std::map<Key, std::string>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_identity() const noexcept { return identity_; }

 private:
  std::string name_;
  std::map<Key, std::string> entries_;
  bool identity_ = false;
};

/// Distinct (surface, category) pairs of `s` that `lex` cannot translate,
/// in first-occurrence order.
inline std::vector<Lexicon::Key> missing_entries(const Lexicon& lex, const Synapper& s) {
  std::vector<Lexicon::Key> out;
  std::set<Lexicon::Key> seen;
  for_each_token(s.main(), [&](const Token& t) {
    Lexicon::Key key{t.surface, t.category};
    if (!lex.lookup(t.surface, t.category) && seen.insert(key).second) out.push_back(key);
  });
  return out;
}

/// Replaces token surfaces through the lexicon; ring orders, roles, nesting
/// and branch ordinals are kept. Throws MissingLexeme listing every gap.
inline Synapper substitute_lexemes(const Synapper& s, const Lexicon& lex) {
  if (auto missing = missing_entries(lex, s); !missing.empty()) {
    std::vector<Issue> issues;
    for (const auto& [surface, category] : missing)
      issues.push_back({"MissingLexeme", surface + "/" + std::string(to_string(category)),
                        "no entry in lexicon '" + lex.name() + "'"});
    throw OperationError(std::move(issues));
  }
  auto main = map_tokens(s.main(), [&](const Token& t) {
    return Token{*lex.lookup(t.surface, t.category), t.category};
  });
  return Synapper::make(std::move(main), s.source_word_order(), s.surface_subject_final(), s.label(),
                        s.metadata());
}

namespace detail {

inline std::vector<LinearToken> payload_tokens(const std::string& payload) {
  std::vector<LinearToken> out;
  std::istringstream in(payload);
  std::string word;
  while (in >> word) out.push_back({{word, Category::OTHER}, Origin::Inserted, std::nullopt, -1});
  return out;
}

inline std::vector<LinearToken> apply_rule(std::vector<LinearToken> tokens, const MorphemeRule& rule) {
  std::vector<LinearToken> out;
  out.reserve(tokens.size());
  switch (rule.kind) {
    case MorphemeRuleKind::DropCategory:
      for (auto& t : tokens)
        if (!rule.tokens.matches(t.token, t.origin)) out.push_back(std::move(t));
      return out;
    case MorphemeRuleKind::InsertBefore:
    case MorphemeRuleKind::InsertAfter: {
      const auto payload = payload_tokens(rule.payload);
      const bool before = rule.kind == MorphemeRuleKind::InsertBefore;
      for (auto& t : tokens) {
        const bool hit = rule.tokens.matches(t.token, t.origin);
        if (hit && before) out.insert(out.end(), payload.begin(), payload.end());
        out.push_back(std::move(t));
        if (hit && !before) out.insert(out.end(), payload.begin(), payload.end());
      }
      return out;
    }
    case MorphemeRuleKind::SuffixOnRole:
      // Last token of every top-level block carrying the role.
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto& t = tokens[i];
        if (t.origin == Origin::Inserted || t.role != rule.role) continue;
        bool last = true;
        for (std::size_t j = i + 1; j < tokens.size(); ++j)
          if (tokens[j].block == t.block && tokens[j].origin != Origin::Inserted) last = false;
        if (last) t.token.surface += rule.payload;
      }
      return tokens;
  }
  return tokens;
}

}  // namespace detail

/// Applies the profile's morpheme rules in ordinal order.
inline LinearSentence apply_morpheme_rules(LinearSentence t, const LanguageProfile& p) {
  for (const auto& rule : p.morpheme_rules) t.tokens = detail::apply_rule(std::move(t.tokens), rule);
  t.profile_name = p.name;
  return t;
}

/// normalize_subject_position -> substitute_lexemes -> linearize ->
/// apply_morpheme_rules.
inline LinearSentence translate(const Synapper& s, const Lexicon& lex, const LanguageProfile& target) {
  const auto normalized = normalize_subject_position(s);
  const auto substituted = substitute_lexemes(normalized, lex);
  return apply_morpheme_rules(linearize(substituted, target), target);
}

}  // namespace synapper

#endif  // SYNAPPER_TRANSLATE_HPP
