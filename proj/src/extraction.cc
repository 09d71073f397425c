#include "testlens/extraction.h"

#include <optional>
#include <set>

#include "testlens/file_util.h"

namespace testlens {

namespace {

const std::set<std::string, std::less<>>& non_method_names() {
  static const std::set<std::string, std::less<>> kNames = {
      "if",    "for",   "while", "switch", "catch", "synchronized", "try", "return",
      "new",   "throw", "super", "this",   "do",    "else",         "assert", "case"};
  return kNames;
}

const std::set<std::string, std::less<>>& non_type_predecessors() {
  static const std::set<std::string, std::less<>> kWords = {
      "new", "return", "throw", "else", "case", "assert", "yield", "record", "default"};
  return kWords;
}

// Index of the token closing the bracket opened at `open`, if any.
std::optional<std::size_t> find_closing(const TokenStream& tokens, std::size_t open,
                                        char open_c, char close_c) {
  int depth = 0;
  for (std::size_t i = open; i < tokens.size(); ++i) {
    if (tokens[i].is_punct(open_c)) ++depth;
    if (tokens[i].is_punct(close_c) && --depth == 0) return i;
  }
  return std::nullopt;
}

bool can_precede_name(const Token& t) {
  if (t.kind == TokenKind::kWord) return !non_type_predecessors().count(t.text);
  return t.is_punct('>') || t.is_punct(']');
}

// Skips "throws A, b.C" after a parameter list; returns the next index.
std::size_t skip_throws(const TokenStream& tokens, std::size_t i) {
  if (i >= tokens.size() || !tokens[i].is_word("throws")) return i;
  ++i;
  while (i < tokens.size() &&
         (tokens[i].kind == TokenKind::kWord || tokens[i].is_punct('.') ||
          tokens[i].is_punct(',') || tokens[i].is_punct('<') || tokens[i].is_punct('>'))) {
    ++i;
  }
  return i;
}

// Parses "@Name", "@a.b.Name" and "@Name(args)" at `at`. Returns the index
// after the annotation and its source text.
std::optional<std::pair<std::size_t, Span>> read_annotation(const TokenStream& tokens,
                                                           std::size_t at) {
  std::size_t i = at + 1;
  if (i >= tokens.size() || tokens[i].kind != TokenKind::kWord ||
      tokens[i].text == "interface") {
    return std::nullopt;
  }
  std::size_t end = tokens[i].span.end;
  ++i;
  while (i + 1 < tokens.size() && tokens[i].is_punct('.') &&
         tokens[i + 1].kind == TokenKind::kWord) {
    end = tokens[i + 1].span.end;
    i += 2;
  }
  if (i < tokens.size() && tokens[i].is_punct('(')) {
    if (auto close = find_closing(tokens, i, '(', ')')) {
      end = tokens[*close].span.end;
      i = *close + 1;
    }
  }
  return std::make_pair(i, Span{tokens[at].span.start, end});
}

struct ScanResult {
  std::vector<TestMethod> methods;
  std::vector<std::string> unclosed;
};

ScanResult scan(const SourceFile& src) {
  const TokenStream tokens = tokenize_java(src.text);
  ScanResult result;
  std::vector<std::string> pending;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    if (t.is_punct('@')) {
      if (auto ann = read_annotation(tokens, i)) {
        pending.push_back(src.text.substr(ann->second.start, ann->second.size()));
        i = ann->first;
        continue;
      }
    }
    if (t.is_punct('{') || t.is_punct('}') || t.is_punct(';')) {
      pending.clear();
      ++i;
      continue;
    }
    const bool candidate = t.kind == TokenKind::kWord && i > 0 &&
                           i + 1 < tokens.size() && tokens[i + 1].is_punct('(') &&
                           !non_method_names().count(t.text) &&
                           can_precede_name(tokens[i - 1]);
    if (!candidate) {
      ++i;
      continue;
    }
    const auto params_end = find_closing(tokens, i + 1, '(', ')');
    if (!params_end) {
      ++i;
      continue;
    }
    const std::size_t open = skip_throws(tokens, *params_end + 1);
    if (open >= tokens.size() || !tokens[open].is_punct('{')) {
      ++i;
      continue;
    }
    const auto close = find_closing(tokens, open, '{', '}');
    if (!close) {
      result.unclosed.push_back(t.text);
      pending.clear();
      i = open + 1;
      continue;
    }
    TestMethod m;
    m.name = t.text;
    m.annotations = std::move(pending);
    pending.clear();
    m.name_span = t.span;
    m.body_span = {tokens[open].span.start, tokens[*close].span.end};
    m.body_tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(open) + 1,
                         tokens.begin() + static_cast<std::ptrdiff_t>(*close));
    result.methods.push_back(std::move(m));
    // Keep scanning inside the body for nested and anonymous classes.
    i = open + 1;
  }
  return result;
}

}  // namespace

SourceFile SourceFile::load(const std::string& path) {
  std::string text = read_file(path);
  return SourceFile{path, std::move(text)};
}

std::vector<TestMethod> extract_methods(const SourceFile& src) {
  ScanResult r = scan(src);
  if (!r.unclosed.empty()) {
    std::string msg = src.path + ": unbalanced braces at end of input in method";
    msg += r.unclosed.size() > 1 ? "s " : " ";
    for (std::size_t k = 0; k < r.unclosed.size(); ++k) {
      if (k > 0) msg += ", ";
      msg += r.unclosed[k];
    }
    msg += "; recovered " + std::to_string(r.methods.size()) + " method(s)";
    throw PartialParseError(msg, std::move(r.methods));
  }
  return std::move(r.methods);
}

std::vector<TestMethod> extract_methods_tolerant(const SourceFile& src) {
  return scan(src).methods;
}

bool is_test_method(const TestMethod& m) {
  for (const std::string& a : m.annotations) {
    std::string name;
    for (char c : a.substr(1)) {
      if (c == '(') break;
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') name += c;
    }
    if (name == "Test" || name.ends_with(".Test")) return true;
  }
  return normalize(m.name).starts_with("test");
}

bool has_junit_import(const SourceFile& src) {
  const TokenStream tokens = tokenize_java(src.text);
  for (std::size_t i = 0; i + 2 < tokens.size(); ++i) {
    if (!tokens[i].is_word("import")) continue;
    // Only at statement start.
    if (i > 0 && !tokens[i - 1].is_punct(';') && !tokens[i - 1].is_punct('}')) continue;
    std::size_t j = i + 1;
    if (tokens[j].is_word("static")) ++j;
    if (j + 2 < tokens.size() && tokens[j].is_word("org") && tokens[j + 1].is_punct('.') &&
        tokens[j + 2].is_word("junit")) {
      return true;
    }
    if (j + 1 < tokens.size() && tokens[j].is_word("junit") && tokens[j + 1].is_punct('.')) {
      return true;
    }
  }
  return false;
}

bool is_test_file(const SourceFile& src) {
  if (!has_junit_import(src)) return false;
  for (const TestMethod& m : extract_methods_tolerant(src)) {
    if (is_test_method(m)) return true;
  }
  return false;
}

}  // namespace testlens
