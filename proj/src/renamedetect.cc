#include "testlens/renamedetect.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "testlens/error.h"

namespace testlens {

namespace {

using Bigram = std::pair<std::string_view, std::string_view>;

std::map<Bigram, std::size_t> bigrams(const TokenStream& tokens) {
  std::map<Bigram, std::size_t> out;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    ++out[{tokens[i].text, tokens[i + 1].text}];
  }
  return out;
}

bool same_texts(const TokenStream& a, const TokenStream& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Token& x, const Token& y) { return x.text == y.text; });
}

std::vector<TestMethod> test_methods(const SourceFile& src) {
  std::vector<TestMethod> out;
  for (TestMethod& m : extract_methods_tolerant(src)) {
    if (is_test_method(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<const TestMethod*> only_in(const std::vector<TestMethod>& side,
                                       const std::vector<TestMethod>& other) {
  std::set<std::string> names;
  for (const TestMethod& m : other) names.insert(m.name);
  std::vector<const TestMethod*> out;
  for (const TestMethod& m : side) {
    if (!names.count(m.name)) out.push_back(&m);
  }
  return out;
}

}  // namespace

double body_similarity(const TokenStream& a, const TokenStream& b) {
  if (same_texts(a, b)) return 1.0;
  const auto ba = bigrams(a);
  const auto bb = bigrams(b);
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t shared = 0;
  for (const auto& [g, n] : ba) {
    size_a += n;
    if (auto it = bb.find(g); it != bb.end()) shared += std::min(n, it->second);
  }
  for (const auto& [g, n] : bb) size_b += n;
  if (size_a + size_b == 0) return 0.0;
  const double dice = 2.0 * static_cast<double>(shared) / static_cast<double>(size_a + size_b);
  return dice >= 1.0 ? std::nextafter(1.0, 0.0) : dice;
}

std::vector<DetectedRename> detect_renames(const SourceFile& before, const SourceFile& after,
                                           double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidInput("rename threshold must be in (0, 1], got " + std::to_string(threshold));
  }
  const std::vector<TestMethod> old_methods = test_methods(before);
  const std::vector<TestMethod> new_methods = test_methods(after);
  const auto removed = only_in(old_methods, new_methods);
  const auto added = only_in(new_methods, old_methods);

  struct Candidate {
    double score;
    std::size_t r;
    std::size_t a;
  };
  std::vector<Candidate> candidates;
  for (std::size_t r = 0; r < removed.size(); ++r) {
    for (std::size_t a = 0; a < added.size(); ++a) {
      const double s = body_similarity(removed[r]->body_tokens, added[a]->body_tokens);
      if (s >= threshold) candidates.push_back({s, r, a});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(y.score, x.r, x.a) < std::tie(x.score, y.r, y.a);
  });

  std::vector<bool> used_r(removed.size());
  std::vector<bool> used_a(added.size());
  std::vector<std::pair<std::size_t, DetectedRename>> picked;
  for (const Candidate& c : candidates) {
    if (used_r[c.r] || used_a[c.a]) continue;
    used_r[c.r] = used_a[c.a] = true;
    DetectedRename d;
    d.event.old_name = removed[c.r]->name;
    d.event.new_name = added[c.a]->name;
    d.event.file = after.path;
    d.score = c.score;
    picked.emplace_back(c.r, std::move(d));
  }
  std::sort(picked.begin(), picked.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<DetectedRename> out;
  for (auto& [r, d] : picked) out.push_back(std::move(d));
  return out;
}

nlohmann::json detected_to_json(const std::vector<DetectedRename>& renames) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DetectedRename& d : renames) {
    nlohmann::json j = nlohmann::json::object();
    j["old_name"] = d.event.old_name;
    j["new_name"] = d.event.new_name;
    j["file"] = d.event.file ? nlohmann::json(*d.event.file) : nlohmann::json(nullptr);
    j["commit"] = d.event.commit ? nlohmann::json(*d.event.commit) : nlohmann::json(nullptr);
    j["score"] = d.score;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace testlens
