#ifndef TESTLENS_FILE_UTIL_H_
#define TESTLENS_FILE_UTIL_H_

#include <string>

namespace testlens {

// Reads a whole file. Throws IoError if it cannot be opened or read.
std::string read_file(const std::string& path);

}  // namespace testlens

#endif  // TESTLENS_FILE_UTIL_H_
