#include "testlens/splitter.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "testlens/error.h"

namespace testlens {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_separator(char c) { return c == '_' || c == '$'; }

// Lowercase run that keeps a preceding caps run whole.
constexpr std::string_view kPreambleLead = "test";

bool lower_run_starts_with(std::string_view text, std::size_t pos,
                           std::string_view lead) {
  if (text.size() - pos < lead.size()) return false;
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (text[pos + i] != lead[i]) return false;
  }
  return true;
}

// Splits one maximal letter run [begin, end) by case transitions.
void split_letters(std::string_view text, std::size_t begin, std::size_t end,
                   std::vector<Term>& out) {
  std::size_t term_start = begin;
  for (std::size_t i = begin + 1; i < end; ++i) {
    const char prev = text[i - 1];
    const char cur = text[i];
    std::size_t cut = std::string_view::npos;
    if (is_lower(prev) && is_upper(cur)) {
      cut = i;
    } else if (is_upper(prev) && is_lower(cur) && i - 1 > term_start) {
      // Caps run of length >= 2 followed by lowercase: the last capital
      // starts the next term, except before a "test" preamble.
      cut = lower_run_starts_with(text, i, kPreambleLead) ? i : i - 1;
    }
    if (cut != std::string_view::npos && cut > term_start) {
      out.push_back({std::string(text.substr(term_start, cut - term_start)),
                     {term_start, cut}});
      term_start = cut;
    }
  }
  out.push_back({std::string(text.substr(term_start, end - term_start)),
                 {term_start, end}});
}

}  // namespace

TermSequence::TermSequence(std::string raw, std::vector<Term> terms)
    : raw_(std::move(raw)), terms_(std::move(terms)) {}

std::vector<std::string> TermSequence::normalized() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(normalize(t.text));
  return out;
}

std::string TermSequence::reconstruct() const {
  std::string out;
  std::size_t pos = 0;
  for (const Term& t : terms_) {
    out.append(raw_, pos, t.span.start - pos);
    out += t.text;
    pos = t.span.end;
  }
  out.append(raw_, pos, std::string::npos);
  return out;
}

bool is_valid_identifier(std::string_view text) {
  if (text.empty()) return false;
  bool has_word_char = false;
  for (char c : text) {
    if (is_upper(c) || is_lower(c) || is_digit(c)) {
      has_word_char = true;
    } else if (!is_separator(c)) {
      return false;
    }
  }
  return has_word_char;
}

TermSequence split(std::string_view name) {
  if (!is_valid_identifier(name)) {
    throw InvalidInput("invalid identifier: '" + std::string(name) + "'");
  }
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < name.size()) {
    if (is_separator(name[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(name[i])) {
      while (i < name.size() && is_digit(name[i])) ++i;
      terms.push_back({std::string(name.substr(start, i - start)), {start, i}});
      continue;
    }
    while (i < name.size() && (is_upper(name[i]) || is_lower(name[i]))) ++i;
    split_letters(name, start, i, terms);
  }
  return TermSequence(std::string(name), std::move(terms));
}

std::string normalize(std::string_view term) {
  std::string out(term);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_all_digits(std::string_view term) {
  return !term.empty() && std::all_of(term.begin(), term.end(), is_digit);
}

}  // namespace testlens
