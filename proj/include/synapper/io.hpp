// File formats: structure documents and language profiles (JSON), lexicons
// (TSV) and DOT export.

#ifndef SYNAPPER_IO_HPP
#define SYNAPPER_IO_HPP

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "synapper/model.hpp"
#include "synapper/profile.hpp"
#include "synapper/translate.hpp"

namespace synapper {

namespace detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    const auto byte = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError("MalformedSyntax", "line " + std::to_string(line_of(text, byte)), e.what());
  }
}

/// Schema walker that records every problem instead of stopping at the first.
class Reader {
 public:
  std::vector<Issue> issues;

  bool expect_object(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
      issues.push_back({"WrongType", path, "expected an object"});
      return false;
    }
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        issues.push_back({"UnknownKey", join(path, key), "unknown key '" + key + "'"});
    }
    return true;
  }

  const json* field(const json& j, const std::string& path, const char* key, bool required) {
    auto it = j.find(key);
    if (it == j.end()) {
      if (required) issues.push_back({"MissingKey", join(path, key), std::string("missing key '") + key + "'"});
      return nullptr;
    }
    return &*it;
  }

  std::string string_field(const json& j, const std::string& path, const char* key, bool required = true) {
    const json* v = field(j, path, key, required);
    if (!v) return {};
    if (!v->is_string()) {
      issues.push_back({"WrongType", join(path, key), "expected a string"});
      return {};
    }
    return v->get<std::string>();
  }

  const json* array_field(const json& j, const std::string& path, const char* key, bool required = true) {
    const json* v = field(j, path, key, required);
    if (v && !v->is_array()) {
      issues.push_back({"WrongType", join(path, key), "expected an array"});
      return nullptr;
    }
    return v;
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }
  static std::string index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
  }
};

inline std::vector<DocToken> read_tokens(Reader& r, const json& arr, const std::string& path) {
  std::vector<DocToken> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = Reader::index(path, i);
    if (!r.expect_object(arr[i], p, {"surface", "category"})) continue;
    out.push_back({r.string_field(arr[i], p, "surface"), r.string_field(arr[i], p, "category")});
  }
  return out;
}

inline DocConstituent read_constituent(Reader& r, const json& j, const std::string& path);

inline DocLoop read_loop(Reader& r, const json& j, const std::string& path) {
  DocLoop loop;
  if (!r.expect_object(j, path, {"kind", "head_index", "members"})) return loop;
  loop.kind = r.string_field(j, path, "kind");
  if (const json* h = r.field(j, path, "head_index", false)) {
    if (h->is_number_integer())
      loop.head_index = h->get<long long>();
    else
      r.issues.push_back({"WrongType", Reader::join(path, "head_index"), "expected an integer"});
  }
  if (const json* members = r.array_field(j, path, "members"))
    for (std::size_t i = 0; i < members->size(); ++i)
      loop.members.push_back(read_constituent(r, (*members)[i], Reader::index(Reader::join(path, "members"), i)));
  return loop;
}

inline DocConstituent read_constituent(Reader& r, const json& j, const std::string& path) {
  DocConstituent c;
  if (!r.expect_object(j, path, {"role", "node", "loop", "branches"})) return c;
  c.role = r.string_field(j, path, "role");
  const bool has_node = j.contains("node");
  const bool has_loop = j.contains("loop");
  if (has_node == has_loop) {
    r.issues.push_back({"MalformedSyntax", path, "constituent needs exactly one of 'node' or 'loop'"});
  }
  if (has_node) {
    if (const json* node = r.array_field(j, path, "node"))
      c.node = read_tokens(r, *node, Reader::join(path, "node"));
  } else if (has_loop) {
    c.loop = read_loop(r, j.at("loop"), Reader::join(path, "loop"));
  }
  if (const json* branches = r.array_field(j, path, "branches", false)) {
    for (std::size_t b = 0; b < branches->size(); ++b) {
      const auto bp = Reader::index(Reader::join(path, "branches"), b);
      const auto& bj = (*branches)[b];
      if (!r.expect_object(bj, bp, {"tokens", "category"})) continue;
      DocBranch branch;
      if (const json* tokens = r.array_field(bj, bp, "tokens"))
        branch.tokens = read_tokens(r, *tokens, Reader::join(bp, "tokens"));
      branch.category = r.string_field(bj, bp, "category");
      c.branches.push_back(std::move(branch));
    }
  }
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// structures

/// JSON text -> unvalidated document. Throws ParseError (syntax or schema).
inline StructureDocument parse_structure_document(std::string_view text) {
  const auto j = detail::parse_json_text(text);
  detail::Reader r;
  StructureDocument doc;
  if (r.expect_object(j, "", {"label", "word_order", "surface_subject_final", "loop", "metadata"})) {
    doc.label = r.string_field(j, "", "label");
    doc.word_order = r.string_field(j, "", "word_order");
    if (const auto* flag = r.field(j, "", "surface_subject_final", false)) {
      if (flag->is_boolean())
        doc.surface_subject_final = flag->get<bool>();
      else
        r.issues.push_back({"WrongType", "surface_subject_final", "expected a boolean"});
    }
    if (const auto* loop = r.array_field(j, "", "loop"))
      for (std::size_t i = 0; i < loop->size(); ++i)
        doc.loop.push_back(detail::read_constituent(r, (*loop)[i], "loop[" + std::to_string(i) + "]"));
    if (const auto* meta = r.field(j, "", "metadata", false)) {
      if (!meta->is_object()) {
        r.issues.push_back({"WrongType", "metadata", "expected an object"});
      } else {
        for (const auto& [key, value] : meta->items()) {
          if (value.is_string())
            doc.metadata[key] = value.get<std::string>();
          else
            r.issues.push_back({"WrongType", "metadata." + key, "expected a string"});
        }
      }
    }
  }
  if (!r.issues.empty()) throw ParseError(std::move(r.issues));
  return doc;
}

/// JSON text -> validated synapper. Syntax/schema problems throw ParseError,
/// structural ones ValidationError.
inline Synapper parse_structure(std::string_view text) {
  return build_synapper(parse_structure_document(text));
}

namespace detail {

inline ordered_json write_tokens(const std::vector<DocToken>& tokens) {
  auto out = ordered_json::array();
  for (const auto& t : tokens) {
    ordered_json tj;
    tj["surface"] = t.surface;
    tj["category"] = t.category;
    out.push_back(std::move(tj));
  }
  return out;
}

inline ordered_json write_constituent(const DocConstituent& c);

inline ordered_json write_loop(const DocLoop& loop) {
  ordered_json out;
  out["kind"] = loop.kind;
  if (loop.head_index) out["head_index"] = *loop.head_index;
  auto members = ordered_json::array();
  for (const auto& m : loop.members) members.push_back(write_constituent(m));
  out["members"] = std::move(members);
  return out;
}

inline ordered_json write_constituent(const DocConstituent& c) {
  ordered_json out;
  out["role"] = c.role;
  if (c.node) out["node"] = write_tokens(*c.node);
  if (c.loop) out["loop"] = write_loop(*c.loop);
  if (!c.branches.empty()) {
    auto branches = ordered_json::array();
    for (const auto& b : c.branches) {
      ordered_json bj;
      bj["tokens"] = write_tokens(b.tokens);
      bj["category"] = b.category;
      branches.push_back(std::move(bj));
    }
    out["branches"] = std::move(branches);
  }
  return out;
}

}  // namespace detail

/// Deterministic JSON: fixed key order, ring order, 2-space indent,
/// trailing newline.
inline std::string serialize_structure(const Synapper& s) {
  const auto doc = to_document(s);
  detail::ordered_json out;
  out["label"] = doc.label;
  out["word_order"] = doc.word_order;
  out["surface_subject_final"] = doc.surface_subject_final;
  auto loop = detail::ordered_json::array();
  for (const auto& c : doc.loop) loop.push_back(detail::write_constituent(c));
  out["loop"] = std::move(loop);
  if (!doc.metadata.empty()) {
    detail::ordered_json meta = detail::ordered_json::object();
    for (const auto& [k, v] : doc.metadata) meta[k] = v;
    out["metadata"] = std::move(meta);
  }
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// profiles

inline LanguageProfile parse_profile(std::string_view text) {
  const auto j = detail::parse_json_text(text);
  detail::Reader r;
  LanguageProfile p;
  if (!r.expect_object(j, "", {"name", "word_order", "verb_placement", "branch_rules", "wh_rule", "morpheme_rules"}))
    throw ParseError(std::move(r.issues));

  p.name = r.string_field(j, "", "name");
  const auto order = r.string_field(j, "", "word_order");
  if (auto w = parse_word_order(order))
    p.word_order = *w;
  else if (j.contains("word_order"))
    r.issues.push_back({"UnknownWordOrder", "word_order", "unknown word order '" + order + "'"});

  if (j.contains("verb_placement")) {
    const auto vp = r.string_field(j, "", "verb_placement");
    if (auto v = parse_verb_placement(vp))
      p.verb_placement = *v;
    else
      r.issues.push_back({"UnknownVerbPlacement", "verb_placement", "unknown verb placement '" + vp + "'"});
  }

  const auto wh = r.string_field(j, "", "wh_rule");
  if (auto w = parse_wh_rule(wh))
    p.wh_rule = *w;
  else if (j.contains("wh_rule"))
    r.issues.push_back({"UnknownWhRule", "wh_rule", "unknown wh rule '" + wh + "'"});

  if (const auto* rules = r.array_field(j, "", "branch_rules", false)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      const auto path = "branch_rules[" + std::to_string(i) + "]";
      const auto& rj = (*rules)[i];
      if (!r.expect_object(rj, path, {"category", "side", "post_order"})) continue;
      BranchPlacementRule rule;
      const auto cat = r.string_field(rj, path, "category");
      if (auto c = parse_category(cat))
        rule.category = *c;
      else
        r.issues.push_back({"UnknownCategory", path + ".category", "unknown category '" + cat + "'"});
      const auto side = r.string_field(rj, path, "side");
      if (side == "pre")
        rule.side = Side::Pre;
      else if (side == "post")
        rule.side = Side::Post;
      else
        r.issues.push_back({"UnknownSide", path + ".side", "side must be 'pre' or 'post'"});
      if (rj.contains("post_order")) {
        const auto order_text = r.string_field(rj, path, "post_order");
        if (order_text == "source")
          rule.post_order = PostOrder::SourceOrder;
        else if (order_text == "reversed")
          rule.post_order = PostOrder::Reversed;
        else
          r.issues.push_back({"UnknownPostOrder", path + ".post_order", "post_order must be 'source' or 'reversed'"});
      }
      p.branch_rules.push_back(rule);
    }
  }

  if (const auto* rules = r.array_field(j, "", "morpheme_rules", false)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      const auto path = "morpheme_rules[" + std::to_string(i) + "]";
      const auto& rj = (*rules)[i];
      if (!r.expect_object(rj, path, {"kind", "selector", "payload", "ordinal"})) continue;
      MorphemeRule rule;
      const auto kind = r.string_field(rj, path, "kind");
      if (auto k = parse_morpheme_rule_kind(kind))
        rule.kind = *k;
      else
        r.issues.push_back({"UnknownRuleKind", path + ".kind", "unknown rule kind '" + kind + "'"});
      const auto selector = r.string_field(rj, path, "selector");
      if (rule.kind == MorphemeRuleKind::SuffixOnRole) {
        if (auto role = parse_role(selector))
          rule.role = *role;
        else
          r.issues.push_back({"InvalidSelector", path + ".selector", "expected a role, got '" + selector + "'"});
      } else if (auto sel = parse_token_selector(selector)) {
        rule.tokens = *sel;
      } else {
        r.issues.push_back({"InvalidSelector", path + ".selector", "cannot parse selector '" + selector + "'"});
      }
      rule.payload = r.string_field(rj, path, "payload", rule.kind != MorphemeRuleKind::DropCategory);
      if (const auto* ord = r.field(rj, path, "ordinal", true)) {
        if (ord->is_number_integer())
          rule.ordinal = ord->get<int>();
        else
          r.issues.push_back({"WrongType", path + ".ordinal", "expected an integer"});
      }
      p.morpheme_rules.push_back(std::move(rule));
    }
  }

  auto more = validate_profile(p);
  r.issues.insert(r.issues.end(), more.begin(), more.end());
  if (!r.issues.empty()) throw ParseError(std::move(r.issues));
  return finalize_profile(std::move(p));
}

inline std::string serialize_profile(const LanguageProfile& p) {
  detail::ordered_json out;
  out["name"] = p.name;
  out["word_order"] = std::string(to_string(p.word_order));
  out["verb_placement"] = std::string(to_string(p.verb_placement));
  auto branch_rules = detail::ordered_json::array();
  for (const auto& r : p.branch_rules) {
    detail::ordered_json rj;
    rj["category"] = std::string(to_string(r.category));
    rj["side"] = r.side == Side::Pre ? "pre" : "post";
    rj["post_order"] = r.post_order == PostOrder::SourceOrder ? "source" : "reversed";
    branch_rules.push_back(std::move(rj));
  }
  out["branch_rules"] = std::move(branch_rules);
  out["wh_rule"] = std::string(to_string(p.wh_rule));
  auto rules = detail::ordered_json::array();
  for (const auto& r : p.morpheme_rules) {
    detail::ordered_json rj;
    rj["kind"] = std::string(to_string(r.kind));
    rj["selector"] = r.kind == MorphemeRuleKind::SuffixOnRole ? std::string(to_string(r.role)) : to_string(r.tokens);
    rj["payload"] = r.payload;
    rj["ordinal"] = r.ordinal;
    rules.push_back(std::move(rj));
  }
  out["morpheme_rules"] = std::move(rules);
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// lexicons

/// source<TAB>category<TAB>target per line; '#' lines and blank lines are
/// skipped. Duplicate (source, category) keys are errors.
inline Lexicon parse_lexicon(std::string_view text, std::string name = {}) {
  Lexicon lex(std::move(name));
  std::vector<Issue> issues;
  std::map<Lexicon::Key, std::size_t> first_line;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto where = "line " + std::to_string(line_no);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3 || fields[0].empty() || fields[2].empty()) {
      issues.push_back({"MalformedSyntax", where, "expected source<TAB>category<TAB>target"});
    } else if (auto cat = parse_category(fields[1]); !cat) {
      issues.push_back({"UnknownCategory", where, "unknown category '" + fields[1] + "'"});
    } else {
      Lexicon::Key key{fields[0], *cat};
      if (auto it = first_line.find(key); it != first_line.end()) {
        issues.push_back({"DuplicateEntry", where,
                          "'" + fields[0] + "'/" + fields[1] + " already defined on line " + std::to_string(it->second)});
      } else {
        first_line.emplace(key, line_no);
        lex.add(fields[0], *cat, fields[2]);
      }
    }
    if (end == text.size()) break;
  }
  if (!issues.empty()) throw ParseError(std::move(issues));
  return lex;
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string join_surfaces(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

class DotWriter {
 public:
  std::ostringstream out;

  /// Vertex that stands for a constituent on its ring.
  static std::string entry_vertex(const Constituent& c, const std::string& id) {
    if (c.is_node()) return id;
    const auto& l = c.loop();
    std::size_t entry = 0;
    if (l.kind == LoopKind::Phrasal) {
      entry = l.head_index;
    } else {
      for (std::size_t i = 0; i < l.members.size(); ++i)
        if (l.members[i].role == Role::Subject) entry = i;
    }
    return entry_vertex(l.members[entry], id + "_" + std::to_string(entry));
  }

  static std::string edge_attrs(const Constituent& from, const std::string& from_id, const Constituent& to,
                                const std::string& to_id) {
    std::vector<std::string> attrs;
    if (!from.is_node()) attrs.push_back("ltail=cluster_" + from_id);
    if (!to.is_node()) attrs.push_back("lhead=cluster_" + to_id);
    if (attrs.empty()) return "";
    std::string s = " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) s += (i ? ", " : "") + attrs[i];
    return s + "]";
  }

  void loop(const Loop& l, const std::string& prefix, const std::string& indent) {
    const auto n = l.members.size();
    for (std::size_t i = 0; i < n; ++i) constituent(l.members[i], id(prefix, i), indent);
    if (n < 2) return;
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = (i + 1) % n;
      const auto& a = l.members[i];
      const auto& b = l.members[j];
      out << indent << entry_vertex(a, id(prefix, i)) << " -> " << entry_vertex(b, id(prefix, j))
          << edge_attrs(a, id(prefix, i), b, id(prefix, j)) << ";\n";
    }
  }

  void constituent(const Constituent& c, const std::string& cid, const std::string& indent) {
    if (c.is_node()) {
      out << indent << cid << " [label=" << dot_quote(join_surfaces(c.node())) << ", role="
          << to_string(c.role) << "];\n";
    } else {
      const auto& l = c.loop();
      out << indent << "subgraph cluster_" << cid << " {\n";
      out << indent << "  label=" << dot_quote(std::string(to_string(l.kind)) + " " + std::string(to_string(c.role)))
          << ";\n";
      loop(l, cid, indent + "  ");
      out << indent << "}\n";
    }
    const auto target = entry_vertex(c, cid);
    for (std::size_t b = 0; b < c.branches.size(); ++b) {
      const auto bid = cid + "_b" + std::to_string(b);
      out << indent << bid << " [label=" << dot_quote(join_surfaces(c.branches[b].tokens))
          << ", shape=box, category=" << to_string(c.branches[b].category) << "];\n";
      out << indent << bid << " -> " << target;
      if (!c.is_node()) out << " [lhead=cluster_" << cid << "]";
      out << ";\n";
    }
  }

  static std::string id(const std::string& prefix, std::size_t i) {
    return prefix + "_" + std::to_string(i);
  }
};

}  // namespace detail

/// Directed graph: ring edges clockwise, branch edges into their node,
/// nested loops as clusters. Vertex ids follow the member path (c_0_2 is the
/// third member of the loop held by top-level constituent 0).
inline std::string to_dot(const Synapper& s) {
  detail::DotWriter w;
  w.out << "digraph " << detail::dot_quote(s.label()) << " {\n";
  w.out << "  compound=true;\n";
  w.loop(s.main(), "c", "  ");
  w.out << "}\n";
  return w.out.str();
}

// ---------------------------------------------------------------------------
// files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("FileNotFound", path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Synapper load_structure(const std::string& path) { return parse_structure(read_file(path)); }
inline LanguageProfile load_profile(const std::string& path) { return parse_profile(read_file(path)); }
inline Lexicon load_lexicon(const std::string& path) { return parse_lexicon(read_file(path), path); }

}  // namespace synapper

#endif  // SYNAPPER_IO_HPP
