#ifndef TESTLENS_JAVA_LEXER_H_
#define TESTLENS_JAVA_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "testlens/splitter.h"

namespace testlens {

enum class TokenKind { kWord, kPunctuation, kStringLiteral, kNumber };

struct Token {
  TokenKind kind = TokenKind::kWord;
  std::string text;
  Span span;

  bool is_word(std::string_view w) const { return kind == TokenKind::kWord && text == w; }
  bool is_punct(char c) const {
    return kind == TokenKind::kPunctuation && text.size() == 1 && text[0] == c;
  }

  bool operator==(const Token&) const = default;
};

using TokenStream = std::vector<Token>;

// Tolerant Java tokenizer. Comments and whitespace are dropped; string,
// text-block and char literals become single kStringLiteral tokens; words are
// identifier/keyword runs (letters, digits, '_', '$', and any byte >= 0x80);
// every other character is a one-character kPunctuation token. An
// unterminated literal or comment runs to end of input.
TokenStream tokenize_java(std::string_view text);

}  // namespace testlens

#endif  // TESTLENS_JAVA_LEXER_H_
