#include "testlens/file_util.h"

#include <fstream>
#include <iterator>

#include "testlens/error.h"

namespace testlens {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return text;
}

}  // namespace testlens
