// Language profiles: word order, verb placement, branch placement, wh rule
// and the ordered morpheme rewrite rules of one target language.

#ifndef SYNAPPER_PROFILE_HPP
#define SYNAPPER_PROFILE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "synapper/types.hpp"

namespace synapper {

enum class Side { Pre, Post };
enum class PostOrder { SourceOrder, Reversed };

struct BranchPlacementRule {
  Category category = Category::OTHER;
  Side side = Side::Pre;
  PostOrder post_order = PostOrder::SourceOrder;

  friend bool operator==(const BranchPlacementRule&, const BranchPlacementRule&) = default;
};

enum class WhRule { InitialWithInversion, InitialNoInversion, PreSubject };

inline std::string_view to_string(WhRule r) {
  switch (r) {
    case WhRule::InitialWithInversion: return "initial_inversion";
    case WhRule::InitialNoInversion: return "initial_plain";
    case WhRule::PreSubject: return "pre_subject";
  }
  return "?";
}

inline std::optional<WhRule> parse_wh_rule(std::string_view s) {
  if (s == "initial_inversion") return WhRule::InitialWithInversion;
  if (s == "initial_plain") return WhRule::InitialNoInversion;
  if (s == "pre_subject") return WhRule::PreSubject;
  return std::nullopt;
}

/// Where a linearized token came from.
enum class Origin { Node, Branch, Inserted };

/// Matches linearized tokens. Text form:
///   [node:|branch:]CATEGORY[=surface]   e.g. "branch:DET=a", "DET"
///   [node:|branch:]=surface             e.g. "=12th"
struct TokenSelector {
  std::optional<Origin> origin;
  std::optional<Category> category;
  std::optional<std::string> surface;

  bool matches(const Token& t, Origin o) const {
    if (o == Origin::Inserted) return false;
    if (origin && *origin != o) return false;
    if (category && *category != t.category) return false;
    if (surface && *surface != t.surface) return false;
    return true;
  }

  friend bool operator==(const TokenSelector&, const TokenSelector&) = default;
};

inline std::optional<TokenSelector> parse_token_selector(std::string_view text) {
  TokenSelector sel;
  if (text.starts_with("node:")) {
    sel.origin = Origin::Node;
    text.remove_prefix(5);
  } else if (text.starts_with("branch:")) {
    sel.origin = Origin::Branch;
    text.remove_prefix(7);
  }
  const auto eq = text.find('=');
  const auto cat = text.substr(0, eq);
  if (!cat.empty() && cat != "*") {
    sel.category = parse_category(cat);
    if (!sel.category) return std::nullopt;
  }
  if (eq != std::string_view::npos) {
    const auto surface = text.substr(eq + 1);
    if (surface.empty()) return std::nullopt;
    sel.surface = std::string(surface);
  }
  if (!sel.origin && !sel.category && !sel.surface) return std::nullopt;
  return sel;
}

inline std::string to_string(const TokenSelector& sel) {
  std::string out;
  if (sel.origin) out += *sel.origin == Origin::Node ? "node:" : "branch:";
  if (sel.category) out += to_string(*sel.category);
  else if (!sel.surface) out += '*';
  if (sel.surface) out += "=" + *sel.surface;
  return out;
}

enum class MorphemeRuleKind { DropCategory, InsertBefore, InsertAfter, SuffixOnRole };

inline std::string_view to_string(MorphemeRuleKind k) {
  switch (k) {
    case MorphemeRuleKind::DropCategory: return "drop";
    case MorphemeRuleKind::InsertBefore: return "insert_before";
    case MorphemeRuleKind::InsertAfter: return "insert_after";
    case MorphemeRuleKind::SuffixOnRole: return "suffix_on_role";
  }
  return "?";
}

inline std::optional<MorphemeRuleKind> parse_morpheme_rule_kind(std::string_view s) {
  if (s == "drop") return MorphemeRuleKind::DropCategory;
  if (s == "insert_before") return MorphemeRuleKind::InsertBefore;
  if (s == "insert_after") return MorphemeRuleKind::InsertAfter;
  if (s == "suffix_on_role") return MorphemeRuleKind::SuffixOnRole;
  return std::nullopt;
}

/// A token-sequence rewrite. SuffixOnRole uses `role`; the other kinds use
/// `tokens`. Inserted payloads may hold several space-separated words.
struct MorphemeRule {
  MorphemeRuleKind kind = MorphemeRuleKind::DropCategory;
  TokenSelector tokens;
  Role role = Role::Subject;
  std::string payload;
  int ordinal = 0;

  friend bool operator==(const MorphemeRule&, const MorphemeRule&) = default;
};

struct LanguageProfile {
  std::string name;
  WordOrder word_order = WordOrder::SVO;
  VerbPlacement verb_placement = VerbPlacement::Default;
  std::vector<BranchPlacementRule> branch_rules;
  WhRule wh_rule = WhRule::InitialWithInversion;
  /// Kept sorted by ordinal.
  std::vector<MorphemeRule> morpheme_rules;

  /// Unlisted categories are read before the node in source order.
  BranchPlacementRule placement_for(Category c) const {
    for (const auto& r : branch_rules)
      if (r.category == c) return r;
    return {c, Side::Pre, PostOrder::SourceOrder};
  }

  bool has_token_changing_rules() const {
    return std::any_of(morpheme_rules.begin(), morpheme_rules.end(), [](const MorphemeRule& r) {
      return r.kind != MorphemeRuleKind::SuffixOnRole;
    });
  }
};

/// Well-formedness issues: duplicate branch rules or morpheme ordinals.
inline std::vector<Issue> validate_profile(const LanguageProfile& p) {
  std::vector<Issue> out;
  std::set<Category> seen;
  for (std::size_t i = 0; i < p.branch_rules.size(); ++i)
    if (!seen.insert(p.branch_rules[i].category).second)
      out.push_back({"DuplicateBranchRule", "branch_rules[" + std::to_string(i) + "]",
                     "second rule for category " + std::string(to_string(p.branch_rules[i].category))});
  std::set<int> ordinals;
  for (std::size_t i = 0; i < p.morpheme_rules.size(); ++i)
    if (!ordinals.insert(p.morpheme_rules[i].ordinal).second)
      out.push_back({"DuplicateOrdinal", "morpheme_rules[" + std::to_string(i) + "].ordinal",
                     "ordinal " + std::to_string(p.morpheme_rules[i].ordinal) + " used twice"});
  return out;
}

/// Sorts rules by ordinal and validates. Throws ParseError on duplicates.
inline LanguageProfile finalize_profile(LanguageProfile p) {
  auto issues = validate_profile(p);
  if (!issues.empty()) throw ParseError(std::move(issues));
  std::stable_sort(p.morpheme_rules.begin(), p.morpheme_rules.end(),
                   [](const MorphemeRule& a, const MorphemeRule& b) { return a.ordinal < b.ordinal; });
  return p;
}

/// Plain gloss profile for a word order: everything pre-node, no rules.
inline LanguageProfile default_profile(WordOrder w) {
  LanguageProfile p;
  p.name = "default-" + std::string(to_string(w));
  p.word_order = w;
  return p;
}

}  // namespace synapper

#endif  // SYNAPPER_PROFILE_HPP
