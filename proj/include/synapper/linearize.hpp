// Reading a synapper out as a token sequence: direction of flow, start
// constituent, branch placement and verb movement.

#ifndef SYNAPPER_LINEARIZE_HPP
#define SYNAPPER_LINEARIZE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "synapper/model.hpp"
#include "synapper/profile.hpp"

namespace synapper {

/// SVO, VOS and OSV read clockwise; SOV, OVS and VSO counterclockwise.
constexpr Direction direction_of(WordOrder w) {
  switch (w) {
    case WordOrder::SVO:
    case WordOrder::VOS:
    case WordOrder::OSV:
      return Direction::Clockwise;
    case WordOrder::SOV:
    case WordOrder::OVS:
    case WordOrder::VSO:
      return Direction::Counterclockwise;
  }
  return Direction::Clockwise;
}

constexpr std::array<Role, 3> role_sequence(WordOrder w) {
  switch (w) {
    case WordOrder::SVO: return {Role::Subject, Role::Verb, Role::Object};
    case WordOrder::SOV: return {Role::Subject, Role::Object, Role::Verb};
    case WordOrder::VSO: return {Role::Verb, Role::Subject, Role::Object};
    case WordOrder::VOS: return {Role::Verb, Role::Object, Role::Subject};
    case WordOrder::OSV: return {Role::Object, Role::Subject, Role::Verb};
    case WordOrder::OVS: return {Role::Object, Role::Verb, Role::Subject};
  }
  return {Role::Subject, Role::Verb, Role::Object};
}

struct LinearToken {
  Token token;
  Origin origin = Origin::Node;
  /// Role of the top-level constituent the token was emitted under; empty
  /// for inserted tokens.
  std::optional<Role> role;
  /// Index of that constituent in traversal order (before verb movement);
  /// -1 for inserted tokens.
  int block = -1;

  friend bool operator==(const LinearToken&, const LinearToken&) = default;
};

struct LinearSentence {
  std::vector<LinearToken> tokens;
  WordOrder word_order = WordOrder::SVO;
  std::string profile_name;

  std::vector<std::string> surfaces() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.token.surface);
    return out;
  }

  /// Space-separated surfaces.
  std::string text() const {
    std::string out;
    for (const auto& t : tokens) {
      if (!out.empty()) out += ' ';
      out += t.token.surface;
    }
    return out;
  }
};

/// Orthographic rendering: text() with the first letter upper-cased.
inline std::string sentence_case(const LinearSentence& s) {
  auto out = s.text();
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

/// Ring positions visited once, starting at `start`.
inline std::vector<std::size_t> ring_visit_order(std::size_t size, std::size_t start, Direction d) {
  std::vector<std::size_t> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k)
    out.push_back(d == Direction::Clockwise ? (start + k) % size : (start + size - k) % size);
  return out;
}

/// Start member of a clausal loop for a word order: the first role of the
/// order that the loop has. Object starts take the first object clockwise
/// from the subject.
inline std::size_t start_index(const Loop& loop, WordOrder w) {
  const auto n = loop.members.size();
  auto find_role = [&](Role r, std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < n; ++k) {
      const auto i = (from + k) % n;
      if (loop.members[i].role == r) return i;
    }
    return std::nullopt;
  };
  const std::size_t subject = find_role(Role::Subject, 0).value_or(0);
  for (auto role : role_sequence(w))
    if (auto i = find_role(role, role == Role::Object ? subject : 0)) return *i;
  return 0;
}

/// Top-level ring positions in the order a word order reads them.
inline std::vector<std::size_t> top_level_visit(const Synapper& s, WordOrder w) {
  return ring_visit_order(s.main().members.size(), start_index(s.main(), w), direction_of(w));
}

namespace detail {

struct Emitter {
  const LanguageProfile& profile;
  Direction direction;
  std::optional<Role> role;
  int block = 0;
  std::vector<LinearToken>* out = nullptr;

  void tokens(const std::vector<Token>& ts, Origin origin) {
    for (const auto& t : ts) out->push_back({t, origin, role, block});
  }

  void constituent(const Constituent& c) {
    std::vector<std::size_t> reversed, post;
    for (std::size_t b = 0; b < c.branches.size(); ++b) {
      const auto rule = profile.placement_for(c.branches[b].category);
      if (rule.side == Side::Pre)
        tokens(c.branches[b].tokens, Origin::Branch);
      else if (rule.post_order == PostOrder::Reversed)
        reversed.push_back(b);
      else
        post.push_back(b);
    }
    if (c.is_node())
      tokens(c.node(), Origin::Node);
    else
      loop(c.loop());
    // Reversed post branches mirror around the node: nearest first.
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it)
      tokens(c.branches[*it].tokens, Origin::Branch);
    for (auto b : post) tokens(c.branches[b].tokens, Origin::Branch);
  }

  void loop(const Loop& l) {
    const auto n = l.members.size();
    if (l.kind == LoopKind::Clausal) {
      for (auto i : ring_visit_order(n, start_index(l, profile.word_order), direction))
        constituent(l.members[i]);
    } else if (direction == Direction::Clockwise) {
      for (std::size_t i = 0; i < n; ++i) constituent(l.members[i]);
    } else {
      for (std::size_t i = n; i-- > 0;) constituent(l.members[i]);
    }
  }
};

}  // namespace detail

/// Reads `s` in the profile's word order. Nested loops follow the main
/// loop's direction. A subject-final source surface moves the subject block
/// last; V1/V2 then move the top-level verb block. Morpheme rules are not
/// applied here.
inline LinearSentence linearize(const Synapper& s, const LanguageProfile& p) {
  const auto& main = s.main();
  const auto dir = direction_of(p.word_order);

  std::vector<std::vector<LinearToken>> blocks;
  std::vector<Role> roles;
  int block = 0;
  for (auto i : top_level_visit(s, p.word_order)) {
    const auto& c = main.members[i];
    std::vector<LinearToken> tokens;
    detail::Emitter e{p, dir, c.role, block++, &tokens};
    e.constituent(c);
    blocks.push_back(std::move(tokens));
    roles.push_back(c.role);
  }

  auto move_block = [&](Role r, std::size_t to_pos) {
    const auto it = std::find(roles.begin(), roles.end(), r);
    if (it == roles.end()) return;
    const auto from = static_cast<std::size_t>(it - roles.begin());
    auto b = std::move(blocks[from]);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(from));
    roles.erase(it);
    to_pos = std::min(to_pos, blocks.size());
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(to_pos), std::move(b));
    roles.insert(roles.begin() + static_cast<std::ptrdiff_t>(to_pos), r);
  };

  if (s.surface_subject_final()) move_block(Role::Subject, blocks.size());
  if (p.verb_placement == VerbPlacement::V1) move_block(Role::Verb, 0);
  if (p.verb_placement == VerbPlacement::V2) move_block(Role::Verb, 1);

  LinearSentence out;
  out.word_order = p.word_order;
  out.profile_name = p.name;
  for (auto& b : blocks)
    for (auto& t : b) out.tokens.push_back(std::move(t));
  if (out.tokens.empty())
    throw OperationError("DegenerateStructure", "", "structure yields no tokens");
  return out;
}

}  // namespace synapper

#endif  // SYNAPPER_LINEARIZE_HPP
