#include "testlens/relations.h"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "testlens/bundled_data.h"
#include "testlens/error.h"
#include "testlens/file_util.h"
#include "testlens/splitter.h"
#include "testlens/stemmer.h"

namespace testlens {

namespace {

using RelationMap = std::map<std::string, std::set<std::string>, std::less<>>;

std::string checked_word(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) {
    throw InvalidInput(std::string("relations: ") + what + " entries must be strings");
  }
  std::string w = j.get<std::string>();
  if (w.empty() || normalize(w) != w) {
    throw InvalidInput("relations: '" + w + "' is not a lowercase word");
  }
  return w;
}

void load_pairs(const nlohmann::json& doc, const char* key, RelationMap& out,
                std::set<std::string>& words) {
  if (!doc.contains(key)) return;
  if (!doc[key].is_array()) {
    throw InvalidInput(std::string("relations: '") + key + "' must be an array");
  }
  for (const auto& pair : doc[key]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidInput(std::string("relations: '") + key +
                         "' entries must be two-word arrays");
    }
    const std::string a = checked_word(pair[0], key);
    const std::string b = checked_word(pair[1], key);
    if (a == b) throw InvalidInput("relations: '" + a + "' related to itself");
    out[a].insert(b);
    out[b].insert(a);
    words.insert(a);
    words.insert(b);
  }
}

std::set<std::string> lookup(const RelationMap& m, std::string_view word) {
  auto it = m.find(word);
  return it == m.end() ? std::set<std::string>{} : it->second;
}

void check_acyclic(const RelationMap& graph) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<std::string, int, std::less<>> state;
  std::vector<std::pair<std::string, bool>> stack;
  for (const auto& [root, _] : graph) {
    if (state[root] != 0) continue;
    stack.push_back({root, false});
    while (!stack.empty()) {
      auto [node, leaving] = stack.back();
      stack.pop_back();
      if (leaving) {
        state[node] = 2;
        continue;
      }
      if (state[node] == 2) continue;
      state[node] = 1;
      stack.push_back({node, true});
      auto it = graph.find(node);
      if (it == graph.end()) continue;
      for (const std::string& next : it->second) {
        if (state[next] == 1) {
          throw InvalidInput("relations: hypernym cycle through '" + next + "'");
        }
        if (state[next] == 0) stack.push_back({next, false});
      }
    }
  }
}

}  // namespace

LexiconRelationProvider LexiconRelationProvider::from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("relations: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("relations: expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "dictionary" && key != "synonyms" && key != "antonyms" &&
        key != "hypernyms" && key != "phrases") {
      throw InvalidInput("relations: unknown key '" + key + "'");
    }
  }

  LexiconRelationProvider p;
  if (doc.contains("dictionary")) {
    if (!doc["dictionary"].is_array()) {
      throw InvalidInput("relations: 'dictionary' must be an array");
    }
    for (const auto& w : doc["dictionary"]) p.words_.insert(checked_word(w, "dictionary"));
  }
  load_pairs(doc, "synonyms", p.synonyms_, p.words_);
  load_pairs(doc, "antonyms", p.antonyms_, p.words_);
  if (doc.contains("hypernyms")) {
    if (!doc["hypernyms"].is_object()) {
      throw InvalidInput("relations: 'hypernyms' must be an object");
    }
    for (const auto& [word, supers] : doc["hypernyms"].items()) {
      const std::string w = checked_word(nlohmann::json(word), "hypernyms");
      if (!supers.is_array()) {
        throw InvalidInput("relations: hypernyms of '" + w + "' must be an array");
      }
      p.words_.insert(w);
      for (const auto& s : supers) {
        const std::string h = checked_word(s, "hypernyms");
        p.hypernyms_[w].insert(h);
        p.words_.insert(h);
      }
    }
    check_acyclic(p.hypernyms_);
  }
  if (doc.contains("phrases")) {
    if (!doc["phrases"].is_array()) {
      throw InvalidInput("relations: 'phrases' must be an array");
    }
    for (const auto& phrase : doc["phrases"]) {
      if (!phrase.is_array() || phrase.size() < 2) {
        throw InvalidInput("relations: phrases need at least two terms");
      }
      std::vector<std::string> terms;
      for (const auto& t : phrase) terms.push_back(checked_word(t, "phrases"));
      p.phrases_.push_back(std::move(terms));
    }
  }
  for (const std::string& w : p.words_) {
    if (w.find(' ') == std::string::npos) p.stems_.insert(stem(w));
  }
  return p;
}

LexiconRelationProvider LexiconRelationProvider::load_file(const std::string& path) {
  return from_json(read_file(path));
}

const LexiconRelationProvider& LexiconRelationProvider::bundled() {
  static const LexiconRelationProvider provider = from_json(bundled_relations_json());
  return provider;
}

std::set<std::string> LexiconRelationProvider::synonyms(std::string_view word) const {
  return lookup(synonyms_, word);
}

std::set<std::string> LexiconRelationProvider::antonyms(std::string_view word) const {
  return lookup(antonyms_, word);
}

std::set<std::string> LexiconRelationProvider::hypernyms(std::string_view word) const {
  return lookup(hypernyms_, word);
}

bool LexiconRelationProvider::in_dictionary(std::string_view word) const {
  if (words_.count(std::string(word))) return true;
  if (word.find(' ') != std::string_view::npos) return false;
  return stems_.count(stem(word)) > 0;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

std::set<std::string> hypernym_closure(const WordRelationProvider& provider,
                                       std::string_view word) {
  std::set<std::string> seen;
  std::vector<std::string> frontier = {std::string(word)};
  while (!frontier.empty()) {
    const std::string current = std::move(frontier.back());
    frontier.pop_back();
    for (const std::string& h : provider.hypernyms(current)) {
      if (h != word && seen.insert(h).second) frontier.push_back(h);
    }
  }
  return seen;
}

}  // namespace testlens
