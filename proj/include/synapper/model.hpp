// The synapper: a validated, immutable closed-loop structure for one sentence.
// Also hosts the unvalidated document form, validation, structural equality
// and the canonical text form.

#ifndef SYNAPPER_MODEL_HPP
#define SYNAPPER_MODEL_HPP

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synapper/types.hpp"

namespace synapper {

using Metadata = std::map<std::string, std::string>;

// ---------------------------------------------------------------------------
// StructureDocument: parsed but not validated. Enumerations stay as text so
// that unknown values surface as validation issues with their key path.

struct DocToken {
  std::string surface;
  std::string category;
};

struct DocBranch {
  std::vector<DocToken> tokens;
  std::string category;
};

struct DocConstituent;

struct DocLoop {
  std::string kind;
  std::optional<long long> head_index;
  std::vector<DocConstituent> members;
};

struct DocConstituent {
  std::string role;
  std::optional<std::vector<DocToken>> node;
  std::optional<DocLoop> loop;
  std::vector<DocBranch> branches;
};

struct StructureDocument {
  std::string label;
  std::string word_order;
  bool surface_subject_final = false;
  std::vector<DocConstituent> loop;
  /// Inert annotations (e.g. the source-language original). Never part of
  /// the structure.
  Metadata metadata;
};

// ---------------------------------------------------------------------------
// validation of typed loops

namespace detail {

inline bool has_whitespace(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  });
}

inline void check_tokens(const std::vector<Token>& tokens, const std::string& path,
                         std::vector<Issue>& out) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (tokens[i].surface.empty())
      out.push_back({"EmptyToken", p, "token surface is empty"});
    else if (has_whitespace(tokens[i].surface))
      out.push_back({"InvalidToken", p, "token surface contains whitespace"});
  }
}

inline void check_loop(const Loop& loop, const std::string& path, std::vector<Issue>& out);

inline void check_constituent(const Constituent& c, const std::string& path,
                              std::vector<Issue>& out) {
  if (c.is_node()) {
    if (c.node().empty()) out.push_back({"EmptyNode", path + ".node", "node has no tokens"});
    check_tokens(c.node(), path + ".node", out);
  } else {
    check_loop(c.loop(), path + ".loop", out);
  }
  for (std::size_t b = 0; b < c.branches.size(); ++b) {
    const auto bp = path + ".branches[" + std::to_string(b) + "]";
    if (c.branches[b].tokens.empty())
      out.push_back({"EmptyBranch", bp, "branch has no tokens"});
    check_tokens(c.branches[b].tokens, bp + ".tokens", out);
  }
}

inline void check_loop(const Loop& loop, const std::string& path, std::vector<Issue>& out) {
  const std::string where = path.empty() ? "loop" : path;
  if (loop.members.empty()) {
    out.push_back({"EmptyLoop", where, "loop has no members"});
    return;
  }
  if (loop.kind == LoopKind::Phrasal) {
    if (loop.head_index >= loop.members.size())
      out.push_back({"InvalidHeadIndex", path + ".head_index",
                     "head_index " + std::to_string(loop.head_index) + " out of range"});
  } else {
    const auto subjects = std::count_if(loop.members.begin(), loop.members.end(),
                                        [](const Constituent& c) { return c.role == Role::Subject; });
    const auto verbs = std::count_if(loop.members.begin(), loop.members.end(),
                                     [](const Constituent& c) { return c.role == Role::Verb; });
    // A one-member ring holding only the verb is an imperative with an
    // implied subject.
    const bool implied_subject = loop.members.size() == 1 && verbs == 1;
    if (subjects == 0 && !implied_subject)
      out.push_back({"MissingSubject", where, "clausal loop has no subject"});
    if (subjects > 1)
      out.push_back({"MultipleSubjects", where,
                     "clausal loop has " + std::to_string(subjects) + " subjects"});
    if (verbs == 0) out.push_back({"MissingVerb", where, "clausal loop has no verb"});
    if (verbs > 1)
      out.push_back({"MultipleVerbs", where, "clausal loop has " + std::to_string(verbs) + " verbs"});
  }
  const auto prefix = path.empty() ? std::string("loop") : path + ".members";
  for (std::size_t i = 0; i < loop.members.size(); ++i)
    check_constituent(loop.members[i], prefix + "[" + std::to_string(i) + "]", out);
}

}  // namespace detail

/// All invariant violations of a main loop; empty when valid.
inline std::vector<Issue> validate_main_loop(const Loop& main) {
  std::vector<Issue> out;
  if (main.kind != LoopKind::Clausal)
    out.push_back({"InvalidMainLoop", "loop", "main loop must be clausal"});
  detail::check_loop(main, "", out);
  return out;
}

// ---------------------------------------------------------------------------

class Synapper {
 public:
  /// Validates and wraps a main loop. Throws ValidationError listing every
  /// violation.
  static Synapper make(Loop main, WordOrder source_word_order, bool surface_subject_final = false,
                       std::string label = {}, Metadata metadata = {}) {
    auto issues = validate_main_loop(main);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    Synapper s;
    s.main_ = std::move(main);
    s.source_word_order_ = source_word_order;
    s.surface_subject_final_ = surface_subject_final;
    s.label_ = std::move(label);
    s.metadata_ = std::move(metadata);
    return s;
  }

  const Loop& main() const noexcept { return main_; }
  WordOrder source_word_order() const noexcept { return source_word_order_; }
  bool surface_subject_final() const noexcept { return surface_subject_final_; }
  const std::string& label() const noexcept { return label_; }
  const Metadata& metadata() const noexcept { return metadata_; }

  Synapper with_label(std::string label) const {
    Synapper s = *this;
    s.label_ = std::move(label);
    return s;
  }

  Synapper with_surface_subject_final(bool flag) const {
    Synapper s = *this;
    s.surface_subject_final_ = flag;
    return s;
  }

 private:
  Synapper() = default;

  Loop main_;
  WordOrder source_word_order_ = WordOrder::SVO;
  bool surface_subject_final_ = false;
  std::string label_;
  Metadata metadata_;
};

// ---------------------------------------------------------------------------
// build_synapper

namespace detail {

inline std::vector<Token> convert_tokens(const std::vector<DocToken>& in, const std::string& path,
                                         std::vector<Issue>& out) {
  std::vector<Token> tokens;
  tokens.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    auto cat = parse_category(in[i].category);
    if (!cat)
      out.push_back({"UnknownCategory", path + "[" + std::to_string(i) + "].category",
                     "unknown category '" + in[i].category + "'"});
    tokens.push_back({in[i].surface, cat.value_or(Category::OTHER)});
  }
  return tokens;
}

inline Loop convert_loop(const DocLoop& in, const std::string& path, std::vector<Issue>& out);

inline Constituent convert_constituent(const DocConstituent& in, const std::string& path,
                                       std::vector<Issue>& out) {
  Constituent c;
  if (auto role = parse_role(in.role))
    c.role = *role;
  else
    out.push_back({"UnknownRole", path + ".role", "unknown role '" + in.role + "'"});

  if (in.node && in.loop) {
    out.push_back({"AmbiguousContent", path, "constituent has both node and loop"});
  } else if (in.loop) {
    c.content = convert_loop(*in.loop, path + ".loop", out);
  } else if (in.node) {
    c.content = convert_tokens(*in.node, path + ".node", out);
  } else {
    out.push_back({"EmptyNode", path, "constituent has neither node nor loop"});
    c.content = std::vector<Token>{};
  }

  for (std::size_t b = 0; b < in.branches.size(); ++b) {
    const auto bp = path + ".branches[" + std::to_string(b) + "]";
    Branch br;
    br.tokens = convert_tokens(in.branches[b].tokens, bp + ".tokens", out);
    if (auto cat = parse_category(in.branches[b].category))
      br.category = *cat;
    else
      out.push_back({"UnknownCategory", bp + ".category",
                     "unknown category '" + in.branches[b].category + "'"});
    c.branches.push_back(std::move(br));
  }
  return c;
}

inline Loop convert_loop(const DocLoop& in, const std::string& path, std::vector<Issue>& out) {
  Loop loop;
  if (auto kind = parse_loop_kind(in.kind))
    loop.kind = *kind;
  else
    out.push_back({"UnknownLoopKind", path + ".kind", "unknown loop kind '" + in.kind + "'"});
  if (loop.kind == LoopKind::Phrasal) {
    const long long head = in.head_index.value_or(0);
    if (head < 0)
      out.push_back({"InvalidHeadIndex", path + ".head_index", "head_index is negative"});
    loop.head_index = head < 0 ? 0 : static_cast<std::size_t>(head);
  } else if (in.head_index) {
    out.push_back({"UnexpectedHeadIndex", path + ".head_index",
                   "head_index applies to phrasal loops only"});
  }
  for (std::size_t i = 0; i < in.members.size(); ++i)
    loop.members.push_back(
        convert_constituent(in.members[i], path + ".members[" + std::to_string(i) + "]", out));
  return loop;
}

}  // namespace detail

/// Converts and validates a document. Throws ValidationError carrying every
/// violation found, not just the first.
inline Synapper build_synapper(const StructureDocument& doc) {
  std::vector<Issue> issues;
  auto order = parse_word_order(doc.word_order);
  if (!order)
    issues.push_back({"UnknownWordOrder", "word_order", "unknown word order '" + doc.word_order + "'"});

  Loop main;
  main.kind = LoopKind::Clausal;
  for (std::size_t i = 0; i < doc.loop.size(); ++i)
    main.members.push_back(
        detail::convert_constituent(doc.loop[i], "loop[" + std::to_string(i) + "]", issues));

  auto structural = validate_main_loop(main);
  issues.insert(issues.end(), structural.begin(), structural.end());
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return Synapper::make(std::move(main), *order, doc.surface_subject_final, doc.label, doc.metadata);
}

namespace detail {

inline std::vector<DocToken> to_doc_tokens(const std::vector<Token>& tokens) {
  std::vector<DocToken> out;
  for (const auto& t : tokens) out.push_back({t.surface, std::string(to_string(t.category))});
  return out;
}

inline DocLoop to_doc_loop(const Loop& loop);

inline DocConstituent to_doc_constituent(const Constituent& c) {
  DocConstituent d;
  d.role = std::string(to_string(c.role));
  if (c.is_node())
    d.node = to_doc_tokens(c.node());
  else
    d.loop = to_doc_loop(c.loop());
  for (const auto& b : c.branches)
    d.branches.push_back({to_doc_tokens(b.tokens), std::string(to_string(b.category))});
  return d;
}

inline DocLoop to_doc_loop(const Loop& loop) {
  DocLoop d;
  d.kind = std::string(to_string(loop.kind));
  if (loop.kind == LoopKind::Phrasal) d.head_index = static_cast<long long>(loop.head_index);
  for (const auto& m : loop.members) d.members.push_back(to_doc_constituent(m));
  return d;
}

}  // namespace detail

inline StructureDocument to_document(const Synapper& s) {
  StructureDocument doc;
  doc.label = s.label();
  doc.word_order = std::string(to_string(s.source_word_order()));
  doc.surface_subject_final = s.surface_subject_final();
  for (const auto& m : s.main().members) doc.loop.push_back(detail::to_doc_constituent(m));
  doc.metadata = s.metadata();
  return doc;
}

// ---------------------------------------------------------------------------
// traversal helpers

template <typename Fn>
void for_each_token(const Loop& loop, Fn&& fn) {
  for (const auto& c : loop.members) {
    if (c.is_node())
      for (const auto& t : c.node()) fn(t);
    else
      for_each_token(c.loop(), fn);
    for (const auto& b : c.branches)
      for (const auto& t : b.tokens) fn(t);
  }
}

/// Every node and branch token, each counted once, sorted.
inline std::vector<Token> token_multiset(const Synapper& s) {
  std::vector<Token> out;
  for_each_token(s.main(), [&](const Token& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Returns a copy of `loop` with every token passed through `fn`.
template <typename Fn>
Loop map_tokens(const Loop& loop, Fn&& fn) {
  Loop out;
  out.kind = loop.kind;
  out.head_index = loop.head_index;
  for (const auto& c : loop.members) {
    Constituent m;
    m.role = c.role;
    if (c.is_node()) {
      std::vector<Token> tokens;
      for (const auto& t : c.node()) tokens.push_back(fn(t));
      m.content = std::move(tokens);
    } else {
      m.content = map_tokens(c.loop(), fn);
    }
    for (const auto& b : c.branches) {
      Branch nb{{}, b.category};
      for (const auto& t : b.tokens) nb.tokens.push_back(fn(t));
      m.branches.push_back(std::move(nb));
    }
    out.members.push_back(std::move(m));
  }
  return out;
}

inline std::size_t nesting_depth(const Loop& loop) {
  std::size_t depth = 0;
  for (const auto& c : loop.members)
    if (!c.is_node()) depth = std::max(depth, 1 + nesting_depth(c.loop()));
  return depth;
}

// ---------------------------------------------------------------------------
// equality and canonical form

/// Isomorphism of the stored structures. Label, metadata, source word order
/// and the subject-final flag are not structural.
inline bool structural_equal(const Synapper& a, const Synapper& b) { return a.main() == b.main(); }

namespace detail {

inline void quote(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
      out += static_cast<char>(ch);
    } else if (ch < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", ch);
      out += buf;
    } else {
      out += static_cast<char>(ch);
    }
  }
  out += '"';
}

inline void canon_tokens(std::string& out, const std::vector<Token>& tokens) {
  out += '[';
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    quote(out, tokens[i].surface);
    out += '/';
    out += to_string(tokens[i].category);
  }
  out += ']';
}

inline void canon_loop(std::string& out, const Loop& loop);

inline void canon_constituent(std::string& out, const Constituent& c) {
  out += to_string(c.role);
  out += '(';
  if (c.is_node()) {
    out += "node";
    canon_tokens(out, c.node());
  } else {
    canon_loop(out, c.loop());
  }
  for (std::size_t b = 0; b < c.branches.size(); ++b) {
    out += " branch#" + std::to_string(b) + ':';
    out += to_string(c.branches[b].category);
    canon_tokens(out, c.branches[b].tokens);
  }
  out += ')';
}

inline void canon_loop(std::string& out, const Loop& loop) {
  out += to_string(loop.kind);
  if (loop.kind == LoopKind::Phrasal) out += '@' + std::to_string(loop.head_index);
  out += '{';
  for (std::size_t i = 0; i < loop.members.size(); ++i) {
    if (i) out += ", ";
    canon_constituent(out, loop.members[i]);
  }
  out += '}';
}

}  // namespace detail

/// One-line text identity: equal iff structural_equal.
inline std::string canonical_form(const Synapper& s) {
  std::string out;
  detail::canon_loop(out, s.main());
  return out;
}

}  // namespace synapper

#endif  // SYNAPPER_MODEL_HPP
