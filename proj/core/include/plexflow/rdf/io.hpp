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

#ifndef PLEXFLOW_RDF_IO_HPP_
#define PLEXFLOW_RDF_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "plexflow/rdf/graph.hpp"
#include "plexflow/rdf/turtle.hpp"

namespace plexflow::rdf {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Chooses the reader from the extension: .nt, .nq (graph label dropped) or
// .ttl. Throws plexflow::Error for other extensions or unreadable files.
Graph load_graph_file(const std::filesystem::path& path,
                      const PrefixMap& predeclared = {});

}  // namespace plexflow::rdf

#endif  // PLEXFLOW_RDF_IO_HPP_
