// Copyright 2026 The Plexflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plexflow/rdf/io.hpp"

#include <fstream>
#include <sstream>

#include "plexflow/rdf/ntriples.hpp"
#include "plexflow/util/error.hpp"

namespace plexflow::rdf {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

Graph load_graph_file(const std::filesystem::path& path,
                      const PrefixMap& predeclared) {
  std::string ext = path.extension().string();
  if (ext != ".nt" && ext != ".nq" && ext != ".ttl") {
    throw Error("unsupported graph file extension '" + ext + "' for '" +
                path.string() + "' (expected .nt, .nq or .ttl)");
  }
  std::string text = read_text_file(path);
  if (ext == ".nt") return parse_ntriples(text);
  if (ext == ".nq") return parse_nquads_as_triples(text);
  return parse_turtle(text, predeclared);
}

}  // namespace plexflow::rdf
