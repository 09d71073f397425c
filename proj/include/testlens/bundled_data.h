#ifndef TESTLENS_BUNDLED_DATA_H_
#define TESTLENS_BUNDLED_DATA_H_

#include <string_view>

namespace testlens {

// JSON documents from data/, compiled into the library.
std::string_view bundled_lexicon_json();
std::string_view bundled_catalog_json();
std::string_view bundled_relations_json();

}  // namespace testlens

#endif  // TESTLENS_BUNDLED_DATA_H_
