#include "testlens/lint.h"

#include <algorithm>
#include <tuple>

#include "testlens/error.h"
#include "testlens/stemmer.h"

namespace testlens {

namespace {

bool has_term_stem(const TaggedName& name, std::initializer_list<std::string_view> stems) {
  for (const Term& t : name.terms.terms()) {
    const std::string s = stem(t.text);
    for (std::string_view want : stems) {
      if (s == want) return true;
    }
  }
  return false;
}

bool has_term(const TaggedName& name, std::string_view word) {
  for (const Term& t : name.terms.terms()) {
    if (normalize(t.text) == word) return true;
  }
  return false;
}

bool has_word(const TokenStream& tokens, std::string_view word) {
  return std::any_of(tokens.begin(), tokens.end(),
                     [&](const Token& t) { return t.is_word(word); });
}

// `word (` anywhere, so qualified calls like Assert.fail( count.
bool has_call(const TokenStream& tokens, std::string_view word) {
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].is_word(word) && tokens[i + 1].is_punct('(')) return true;
  }
  return false;
}

bool is_assertion_at(const TokenStream& tokens, std::size_t i) {
  if (tokens[i].kind != TokenKind::kWord) return false;
  if (tokens[i].text.starts_with("assert")) return true;
  return tokens[i].text == "fail" && i + 1 < tokens.size() && tokens[i + 1].is_punct('(');
}

// An assertion or fail( between the braces of some catch block.
bool assertion_in_catch(const TokenStream& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word("catch")) continue;
    std::size_t j = i + 1;
    if (j >= tokens.size() || !tokens[j].is_punct('(')) continue;
    int depth = 0;
    for (; j < tokens.size(); ++j) {
      if (tokens[j].is_punct('(')) ++depth;
      if (tokens[j].is_punct(')') && --depth == 0) break;
    }
    if (j + 1 >= tokens.size() || !tokens[j + 1].is_punct('{')) continue;
    depth = 0;
    for (std::size_t k = j + 1; k < tokens.size(); ++k) {
      if (tokens[k].is_punct('{')) ++depth;
      if (tokens[k].is_punct('}') && --depth == 0) break;
      if (is_assertion_at(tokens, k)) return true;
    }
  }
  return false;
}

bool r1_trigger(const TaggedName& name) { return has_term_stem(name, {"fail", "failur"}); }

bool r1_expect(const TaggedName&, const TestMethod& m, const LintOptions&) {
  return has_call(m.body_tokens, "fail");
}

bool r2_trigger(const TaggedName& name) {
  return has_term(name, "true") || has_term(name, "false");
}

bool r2_expect(const TaggedName& name, const TestMethod& m, const LintOptions&) {
  if (has_term(name, "true") && !has_word(m.body_tokens, "assertTrue")) return false;
  if (has_term(name, "false") && !has_word(m.body_tokens, "assertFalse")) return false;
  return true;
}

bool r3_trigger(const TaggedName& name) {
  for (std::size_t i = 0; i < name.tags.size(); ++i) {
    if (name.tags[i] == PosTag::kVerbModifier && normalize(name.terms[i].text) == "not") {
      return true;
    }
  }
  return false;
}

bool r3_expect(const TaggedName&, const TestMethod& m, const LintOptions& options) {
  if (has_word(m.body_tokens, "assertNull") || has_word(m.body_tokens, "assertNotNull")) {
    return true;
  }
  return options.r3_accepts_assert_false && has_word(m.body_tokens, "assertFalse");
}

bool r4_trigger(const TaggedName& name) {
  const std::vector<std::string> words = name.terms.normalized();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] == "all" && name.tags[i] == PosTag::kDeterminer) return true;
    if (i + 1 < words.size() && ((words[i] == "all" && words[i + 1] == "of") ||
                                 (words[i] == "at" && words[i + 1] == "least"))) {
      return true;
    }
  }
  return false;
}

bool r4_expect(const TaggedName&, const TestMethod& m, const LintOptions& options) {
  for (const std::string& entry : options.collection_vocabulary) {
    for (const Token& t : m.body_tokens) {
      if (entry == "[]") {
        if (t.is_punct('[')) return true;
      } else if (t.kind == TokenKind::kWord && t.text.ends_with(entry)) {
        return true;
      }
    }
  }
  return false;
}

bool r5_trigger(const TaggedName& name) { return has_term_stem(name, {"except"}); }

bool r5_expect(const TaggedName&, const TestMethod& m, const LintOptions&) {
  for (const std::string& a : m.annotations) {
    if (a.find("expected") != std::string::npos) return true;
  }
  return assertion_in_catch(m.body_tokens) || has_call(m.body_tokens, "assertThrows");
}

std::vector<Rule> make_registry() {
  std::vector<Rule> rules;
  rules.push_back({"R1", "name says fail, body calls fail(", Severity::kWarning, r1_trigger,
                   r1_expect, "name mentions 'fail' but the body never calls fail("});
  rules.push_back({"R2", "name says true/false, body calls assertTrue/assertFalse",
                   Severity::kWarning, r2_trigger, r2_expect,
                   "name mentions a boolean value but the body lacks the matching "
                   "assertTrue/assertFalse"});
  rules.push_back({"R3", "name says not, body checks for null", Severity::kWarning, r3_trigger,
                   r3_expect, "name uses 'not' but the body has no assertNull/assertNotNull"});
  rules.push_back({"R4", "name says all/all of/at least, body uses a collection",
                   Severity::kWarning, r4_trigger, r4_expect,
                   "name quantifies over a collection but the body references no "
                   "collection type"});
  rules.push_back({"R5", "name says exception, test checks for it", Severity::kWarning,
                   r5_trigger, r5_expect,
                   "name mentions an exception but there is no expected= parameter, "
                   "assertThrows call or assertion inside a catch block"});
  return rules;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view to_string(Severity s) {
  return s == Severity::kWarning ? "warning" : "info";
}

const std::vector<Rule>& rule_registry() {
  static const std::vector<Rule> kRules = make_registry();
  return kRules;
}

RuleSet::RuleSet() {
  for (const Rule& r : rule_registry()) ids_.insert(r.id);
}

RuleSet::RuleSet(std::set<std::string> ids) : ids_(std::move(ids)) {
  for (const std::string& id : ids_) {
    const bool known = std::any_of(rule_registry().begin(), rule_registry().end(),
                                   [&](const Rule& r) { return r.id == id; });
    if (!known) throw UsageError("unknown lint rule '" + id + "'");
  }
}

RuleSet RuleSet::parse(std::string_view ids) {
  std::set<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.insert(cur);
    cur.clear();
  };
  for (char c : ids) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      cur += (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
    }
  }
  flush();
  if (out.empty()) throw UsageError("empty rule list");
  return RuleSet(std::move(out));
}

std::vector<Diagnostic> lint(const TestMethod& method, const TaggedName& name,
                             const RuleSet& rules, const LintOptions& options) {
  std::vector<Diagnostic> out;
  for (const Rule& rule : rule_registry()) {
    if (!rules.enabled(rule.id) || !rule.trigger(name)) continue;
    if (rule.expectation(name, method, options)) continue;
    Diagnostic d;
    d.rule_id = rule.id;
    d.method = method.name;
    d.name_span = method.name_span;
    d.message = rule.message;
    d.severity = rule.severity;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Diagnostic> lint_file(const SourceFile& src, const Lexicon& lexicon,
                                  const RuleSet& rules, const LintOptions& options) {
  std::vector<Diagnostic> out;
  if (!has_junit_import(src)) return out;
  for (const TestMethod& m : extract_methods_tolerant(src)) {
    if (!is_test_method(m) || !is_valid_identifier(m.name)) continue;
    const TaggedName name = tag_identifier(m.name, lexicon);
    for (Diagnostic& d : lint(m, name, rules, options)) {
      d.file = src.path;
      std::tie(d.line, d.column) = line_column(src.text, d.name_span.start);
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.file;
  if (d.line > 0) out += ":" + std::to_string(d.line) + ":" + std::to_string(d.column);
  out += ": " + std::string(to_string(d.severity)) + ": [" + d.rule_id + "] " + d.method +
         ": " + d.message;
  return out;
}

}  // namespace testlens
