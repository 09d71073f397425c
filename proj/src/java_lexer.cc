#include "testlens/java_lexer.h"

namespace testlens {

namespace {

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '$' || u >= 0x80;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Index just past a quoted literal opened at `start` with `quote`.
std::size_t skip_quoted(std::string_view text, std::size_t start, char quote) {
  std::size_t i = start + 1;
  while (i < text.size()) {
    if (text[i] == '\\') {
      i += 2;
      continue;
    }
    if (text[i] == quote) return i + 1;
    if (text[i] == '\n') return i;  // unterminated on this line
    ++i;
  }
  return text.size();
}

}  // namespace

TokenStream tokenize_java(std::string_view text) {
  TokenStream tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto emit = [&](TokenKind kind, std::size_t start, std::size_t end) {
    tokens.push_back({kind, std::string(text.substr(start, end - start)), {start, end}});
  };

  while (i < n) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      const std::size_t close = text.find("*/", i + 2);
      i = close == std::string_view::npos ? n : close + 2;
      continue;
    }
    if (text.substr(i, 3) == "\"\"\"") {
      const std::size_t start = i;
      std::size_t j = i + 3;
      while (j < n && text.substr(j, 3) != "\"\"\"") j += text[j] == '\\' ? 2 : 1;
      i = j >= n ? n : j + 3;
      emit(TokenKind::kStringLiteral, start, i);
      continue;
    }
    if (c == '"' || c == '\'') {
      const std::size_t start = i;
      i = skip_quoted(text, i, c);
      emit(TokenKind::kStringLiteral, start, i);
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(text[i + 1]))) {
      const std::size_t start = i;
      while (i < n && (is_word_char(text[i]) || text[i] == '.')) {
        // exponent sign: 1e-5, 0x1p+3
        if ((text[i] == 'e' || text[i] == 'E' || text[i] == 'p' || text[i] == 'P') &&
            i + 1 < n && (text[i + 1] == '+' || text[i + 1] == '-')) {
          i += 2;
          continue;
        }
        ++i;
      }
      emit(TokenKind::kNumber, start, i);
      continue;
    }
    if (is_word_char(c)) {
      const std::size_t start = i;
      while (i < n && is_word_char(text[i])) ++i;
      emit(TokenKind::kWord, start, i);
      continue;
    }
    emit(TokenKind::kPunctuation, i, i + 1);
    ++i;
  }
  return tokens;
}

}  // namespace testlens
