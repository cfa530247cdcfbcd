// Core value types for synapper structures: word orders, lexical categories,
// tokens, branches, constituents and loops.

#ifndef SYNAPPER_TYPES_HPP
#define SYNAPPER_TYPES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace synapper {

enum class WordOrder { SVO, SOV, VSO, VOS, OSV, OVS };

inline constexpr std::array<WordOrder, 6> kAllWordOrders = {
    WordOrder::SVO, WordOrder::SOV, WordOrder::VSO,
    WordOrder::VOS, WordOrder::OSV, WordOrder::OVS};

enum class Direction { Clockwise, Counterclockwise };

enum class VerbPlacement { Default, V1, V2 };

enum class Role { Subject, Verb, Object };

enum class Category { N, V, AUX, ADJ, ADV, DET, PRON, PREP, WH, ADJP, OTHER };

inline constexpr std::array<Category, 11> kAllCategories = {
    Category::N,    Category::V,    Category::AUX, Category::ADJ,
    Category::ADV,  Category::DET,  Category::PRON, Category::PREP,
    Category::WH,   Category::ADJP, Category::OTHER};

enum class LoopKind { Clausal, Phrasal };

// ---------------------------------------------------------------------------
// string conversions

inline std::string_view to_string(WordOrder w) {
  switch (w) {
    case WordOrder::SVO: return "SVO";
    case WordOrder::SOV: return "SOV";
    case WordOrder::VSO: return "VSO";
    case WordOrder::VOS: return "VOS";
    case WordOrder::OSV: return "OSV";
    case WordOrder::OVS: return "OVS";
  }
  return "?";
}

inline std::optional<WordOrder> parse_word_order(std::string_view s) {
  for (auto w : kAllWordOrders)
    if (to_string(w) == s) return w;
  return std::nullopt;
}

inline std::string_view to_string(Direction d) {
  return d == Direction::Clockwise ? "clockwise" : "counterclockwise";
}

inline std::string_view to_string(VerbPlacement v) {
  switch (v) {
    case VerbPlacement::Default: return "default";
    case VerbPlacement::V1: return "v1";
    case VerbPlacement::V2: return "v2";
  }
  return "?";
}

inline std::optional<VerbPlacement> parse_verb_placement(std::string_view s) {
  if (s == "default") return VerbPlacement::Default;
  if (s == "v1") return VerbPlacement::V1;
  if (s == "v2") return VerbPlacement::V2;
  return std::nullopt;
}

inline std::string_view to_string(Role r) {
  switch (r) {
    case Role::Subject: return "subject";
    case Role::Verb: return "verb";
    case Role::Object: return "object";
  }
  return "?";
}

inline std::optional<Role> parse_role(std::string_view s) {
  if (s == "subject") return Role::Subject;
  if (s == "verb") return Role::Verb;
  if (s == "object") return Role::Object;
  return std::nullopt;
}

inline std::string_view to_string(Category c) {
  switch (c) {
    case Category::N: return "N";
    case Category::V: return "V";
    case Category::AUX: return "AUX";
    case Category::ADJ: return "ADJ";
    case Category::ADV: return "ADV";
    case Category::DET: return "DET";
    case Category::PRON: return "PRON";
    case Category::PREP: return "PREP";
    case Category::WH: return "WH";
    case Category::ADJP: return "ADJP";
    case Category::OTHER: return "OTHER";
  }
  return "?";
}

inline std::optional<Category> parse_category(std::string_view s) {
  for (auto c : kAllCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

inline std::string_view to_string(LoopKind k) {
  return k == LoopKind::Clausal ? "clausal" : "phrasal";
}

inline std::optional<LoopKind> parse_loop_kind(std::string_view s) {
  if (s == "clausal") return LoopKind::Clausal;
  if (s == "phrasal") return LoopKind::Phrasal;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// structure

struct Token {
  std::string surface;
  Category category = Category::OTHER;

  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;
};

/// A token group hanging off exactly one node. The ordinal is the branch's
/// index within its constituent, so it is implied by position.
struct Branch {
  std::vector<Token> tokens;
  Category category = Category::OTHER;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct Constituent;

/// A closed ring of constituents, stored in clockwise order.
struct Loop {
  LoopKind kind = LoopKind::Clausal;
  std::vector<Constituent> members;
  /// Entry member of a phrasal loop. Always 0 for clausal loops.
  std::size_t head_index = 0;

  friend bool operator==(const Loop&, const Loop&);
};

struct Constituent {
  Role role = Role::Object;
  /// Node tokens, or a nested loop.
  std::variant<std::vector<Token>, Loop> content;
  std::vector<Branch> branches;

  bool is_node() const { return std::holds_alternative<std::vector<Token>>(content); }
  const std::vector<Token>& node() const { return std::get<std::vector<Token>>(content); }
  const Loop& loop() const { return std::get<Loop>(content); }

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

inline bool operator==(const Loop& a, const Loop& b) {
  return a.kind == b.kind && a.head_index == b.head_index && a.members == b.members;
}

// ---------------------------------------------------------------------------
// errors

/// One problem found while validating or parsing. `path` locates it, either
/// as a key path ("loop[2].branches[0]") or as "line N".
struct Issue {
  std::string code;
  std::string path;
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

/// Base of every error thrown by the library. Carries the complete issue list.
class Error : public std::runtime_error {
 public:
  explicit Error(std::vector<Issue> issues)
      : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}
  Error(std::string code, std::string path, std::string message)
      : Error(std::vector<Issue>{{std::move(code), std::move(path), std::move(message)}}) {}

  const std::vector<Issue>& issues() const noexcept { return issues_; }
  const std::string& code() const noexcept { return issues_.front().code; }

  bool has(std::string_view code) const {
    return std::any_of(issues_.begin(), issues_.end(),
                       [&](const Issue& i) { return i.code == code; });
  }

 private:
  static std::string summarize(const std::vector<Issue>& issues) {
    std::string out;
    for (const auto& i : issues) {
      if (!out.empty()) out += "; ";
      out += i.code;
      if (!i.path.empty()) out += " at " + i.path;
      if (!i.message.empty()) out += ": " + i.message;
    }
    return out.empty() ? "unknown error" : out;
  }

  std::vector<Issue> issues_;
};

/// Structure invariants violated (build_synapper and friends).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or schema (io-formats).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Precondition failures of transform/translate/chance operations.
class OperationError : public Error {
 public:
  using Error::Error;
};

}  // namespace synapper

#endif  // SYNAPPER_TYPES_HPP
