#include "testlens/lexicon.h"

#include <array>
#include <utility>

#include <json.hpp>

#include "testlens/bundled_data.h"
#include "testlens/error.h"
#include "testlens/file_util.h"

namespace testlens {

namespace {

using Field = std::set<std::string> Lexicon::*;

constexpr std::array<std::pair<std::string_view, Field>, 7> kFields = {{
    {"prepositions", &Lexicon::prepositions},
    {"determiners", &Lexicon::determiners},
    {"conjunctions", &Lexicon::conjunctions},
    {"pronouns", &Lexicon::pronouns},
    {"adverbs", &Lexicon::adverbs},
    {"verbs", &Lexicon::verbs},
    {"known_nouns", &Lexicon::known_nouns},
}};

bool is_lowercase_word(const std::string& w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (c >= 'A' && c <= 'Z') return false;
  }
  return true;
}

bool contains(const std::set<std::string>& s, std::string_view w) {
  return s.find(std::string(w)) != s.end();
}

}  // namespace

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon = from_json(bundled_lexicon_json(), Lexicon{});
  return lexicon;
}

Lexicon Lexicon::from_json(std::string_view json, const Lexicon& base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("lexicon: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("lexicon: expected a JSON object");

  Lexicon lex = base;
  for (const auto& [key, value] : doc.items()) {
    Field field = nullptr;
    for (const auto& [name, member] : kFields) {
      if (name == key) field = member;
    }
    if (field == nullptr) throw InvalidInput("lexicon: unknown key '" + key + "'");
    if (!value.is_array()) {
      throw InvalidInput("lexicon: '" + key + "' must be an array of strings");
    }
    std::set<std::string> words;
    for (const auto& w : value) {
      if (!w.is_string()) {
        throw InvalidInput("lexicon: '" + key + "' must be an array of strings");
      }
      words.insert(w.get<std::string>());
    }
    lex.*field = std::move(words);
  }
  lex.validate();
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
  return from_json(read_file(path), bundled());
}

void Lexicon::validate() const {
  for (const auto& [name, member] : kFields) {
    for (const std::string& w : this->*member) {
      if (!is_lowercase_word(w)) {
        throw InvalidInput("lexicon: '" + w + "' in " + std::string(name) +
                           " is not a lowercase word");
      }
    }
  }
  const std::array<std::pair<std::string_view, const std::set<std::string>*>, 4>
      closed = {{{"prepositions", &prepositions},
                 {"determiners", &determiners},
                 {"conjunctions", &conjunctions},
                 {"pronouns", &pronouns}}};
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      for (const std::string& w : *closed[i].second) {
        if (contains(*closed[j].second, w)) {
          throw InvalidInput("lexicon: '" + w + "' is in both " +
                             std::string(closed[i].first) + " and " +
                             std::string(closed[j].first));
        }
      }
    }
  }
  for (std::string_view w : {"not", "when", "exactly"}) {
    if (!contains(adverbs, w)) {
      throw InvalidInput("lexicon: adverbs must contain '" + std::string(w) + "'");
    }
  }
  for (std::string_view w : {"the", "no", "all"}) {
    if (!contains(determiners, w)) {
      throw InvalidInput("lexicon: determiners must contain '" + std::string(w) +
                         "'");
    }
  }
}

bool Lexicon::is_verb(std::string_view word) const {
  if (contains(verbs, word)) return true;
  if (word.size() < 4 || !word.ends_with("ed")) return false;
  // closed -> close, failed -> fail, stopped -> stop, verified -> verify
  const std::string_view no_d = word.substr(0, word.size() - 1);
  const std::string_view no_ed = word.substr(0, word.size() - 2);
  if (contains(verbs, no_d) || contains(verbs, no_ed)) return true;
  if (no_ed.size() >= 2 && no_ed.back() == no_ed[no_ed.size() - 2] &&
      contains(verbs, no_ed.substr(0, no_ed.size() - 1))) {
    return true;
  }
  if (word.ends_with("ied")) {
    std::string base(word.substr(0, word.size() - 3));
    base += 'y';
    if (contains(verbs, base)) return true;
  }
  return false;
}

}  // namespace testlens
