#ifndef TESTLENS_EXTRACTION_H_
#define TESTLENS_EXTRACTION_H_

#include <string>
#include <vector>

#include "testlens/error.h"
#include "testlens/java_lexer.h"
#include "testlens/splitter.h"

namespace testlens {

struct SourceFile {
  std::string path;
  std::string text;

  // Throws IoError when the file cannot be read.
  static SourceFile load(const std::string& path);
};

struct TestMethod {
  std::string name;
  // Raw annotation text as written, arguments included: "@Test(expected = X.class)".
  std::vector<std::string> annotations;
  // Tokens strictly between the body braces.
  TokenStream body_tokens;
  Span name_span;
  // From the opening '{' through the matching '}'.
  Span body_span;

  bool operator==(const TestMethod&) const = default;
};

// Raised when the input ends inside a method body. `recovered` holds every
// method whose body closed before end of input.
class PartialParseError : public InvalidInput {
 public:
  PartialParseError(std::string message, std::vector<TestMethod> recovered)
      : InvalidInput(std::move(message)), recovered_(std::move(recovered)) {}

  const std::vector<TestMethod>& recovered() const { return recovered_; }

 private:
  std::vector<TestMethod> recovered_;
};

// Finds method declarations lexically: [annotations] [modifiers] [type] name
// ( params ) [throws ...] { body }. Control-flow keywords, `new X() {` and
// record headers are not methods. Methods in nested and anonymous classes are
// included, in source order of their names.
std::vector<TestMethod> extract_methods(const SourceFile& src);

// Same, but returns what was recovered instead of throwing PartialParseError.
std::vector<TestMethod> extract_methods_tolerant(const SourceFile& src);

// Annotated @Test (any argument form, qualified or not) or a name starting
// with "test" ignoring case.
bool is_test_method(const TestMethod& m);

// An import of org.junit... or junit... and at least one test method.
bool is_test_file(const SourceFile& src);

bool has_junit_import(const SourceFile& src);

}  // namespace testlens

#endif  // TESTLENS_EXTRACTION_H_
