// Command-line front end. Exit codes: 0 success, 1 validation/parse or
// domain failure, 2 usage error.

#ifndef SYNAPPER_TOOLS_CLI_HPP
#define SYNAPPER_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "synapper/synapper.hpp"

namespace synapper::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

inline void report(std::ostream& err, const Error& e) {
  nlohmann::ordered_json j;
  j["error"] = e.code();
  auto issues = nlohmann::ordered_json::array();
  for (const auto& i : e.issues()) {
    nlohmann::ordered_json ij;
    ij["code"] = i.code;
    ij["path"] = i.path;
    ij["message"] = i.message;
    issues.push_back(std::move(ij));
  }
  j["issues"] = std::move(issues);
  err << j.dump() << "\n";
}

inline std::string render(const LinearSentence& s, bool sentence_case_output) {
  return sentence_case_output ? sentence_case(s) : s.text();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"synapper: closed-loop syntactic structures, linearization and translation"};
  app.name("synapper");
  app.require_subcommand(1);

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "Validate structure files");
  validate->add_option("FILE", validate_files)->required();

  std::string profile_path, structure_path, lexicon_path, wh_word, skeleton_path, sentence_path;
  bool sentence_case_flag = false;

  auto* lin = app.add_subcommand("linearize", "Read a structure in a profile's word order");
  lin->add_option("--profile", profile_path)->required();
  lin->add_flag("--sentence-case", sentence_case_flag, "Capitalize the first word");
  lin->add_option("STRUCTURE", structure_path)->required();

  auto* tr = app.add_subcommand("translate", "Substitute lexemes, linearize, apply morpheme rules");
  tr->add_option("--profile", profile_path)->required();
  tr->add_option("--lexicon", lexicon_path, "TSV lexicon (identity when omitted)");
  tr->add_flag("--sentence-case", sentence_case_flag, "Capitalize the first word");
  tr->add_option("STRUCTURE", structure_path)->required();

  auto* question = app.add_subcommand("question", "Form a wh-question");
  question->add_option("--wh", wh_word)->required();
  question->add_option("--profile", profile_path)->required();
  question->add_flag("--sentence-case", sentence_case_flag, "Capitalize the first word");
  question->add_option("STRUCTURE", structure_path)->required();

  bool as_json = false;
  auto* decl = app.add_subcommand("declarativize", "Recover the declarative form of a question");
  decl->add_option("--profile", profile_path)->required();
  decl->add_option("--skeleton", skeleton_path)->required();
  decl->add_flag("--json", as_json, "Print the recovered structure instead of its reading");
  decl->add_option("SENTENCEFILE", sentence_path)->required();

  std::string compare_a, compare_b;
  auto* compare = app.add_subcommand("compare", "Structural equality of two structures");
  compare->add_option("A", compare_a)->required();
  compare->add_option("B", compare_b)->required();

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("FILE", structure_path)->required();

  auto* dot = app.add_subcommand("dot", "Export as a DOT digraph");
  dot->add_option("FILE", structure_path)->required();

  int n = 0;
  auto* prob = app.add_subcommand("prob", "Chance of correct placement for n words");
  prob->add_option("--n", n)->required();

  auto* orders = app.add_subcommand("orders", "All six readings with plain gloss profiles");
  orders->add_option("STRUCTURE", structure_path)->required();

  // CLI11 wants argv order reversed when given a vector
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*validate) {
      int status = kOk;
      for (const auto& f : validate_files) {
        try {
          const auto s = load_structure(f);
          out << "OK " << s.label() << "\n";
        } catch (const Error& e) {
          report(err, e);
          status = kFailure;
        }
      }
      return status;
    }
    if (*lin) {
      out << render(linearize(load_structure(structure_path), load_profile(profile_path)), sentence_case_flag)
          << "\n";
    } else if (*tr) {
      const auto lex = lexicon_path.empty() ? Lexicon::identity() : load_lexicon(lexicon_path);
      out << render(translate(load_structure(structure_path), lex, load_profile(profile_path)),
                    sentence_case_flag)
          << "\n";
    } else if (*question) {
      out << render(interrogativize(load_structure(structure_path), WhToken{wh_word}, load_profile(profile_path)),
                    sentence_case_flag)
          << "\n";
    } else if (*decl) {
      const auto profile = load_profile(profile_path);
      const auto recovered =
          declarativize(sentence_from_text(read_file(sentence_path)), load_structure(skeleton_path), profile);
      if (as_json)
        out << serialize_structure(recovered);
      else
        out << linearize(recovered, profile).text() << "\n";
    } else if (*compare) {
      const bool same = structural_equal(load_structure(compare_a), load_structure(compare_b));
      out << (same ? "EQUAL" : "DIFFERENT") << "\n";
    } else if (*canon) {
      out << canonical_form(load_structure(structure_path)) << "\n";
    } else if (*dot) {
      out << to_dot(load_structure(structure_path));
    } else if (*prob) {
      out << format_chance(chance_probability(n)) << "\n";
    } else if (*orders) {
      const auto s = load_structure(structure_path);
      for (auto w : kAllWordOrders) out << to_string(w) << "\t" << linearize(s, default_profile(w)).text() << "\n";
    }
  } catch (const Error& e) {
    report(err, e);
    return kFailure;
  }
  return kOk;
}

}  // namespace synapper::cli

#endif  // SYNAPPER_TOOLS_CLI_HPP
