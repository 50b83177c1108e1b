#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "doob/codes.hpp"
#include "doob/vertex_set.hpp"

namespace doob {

// "doobset v1": `doob <m> <n>`, then strictly ascending decimal vertex
// indices, one per line, LF-terminated.
void write_doobset(std::ostream& out, const VertexSet& s);
VertexSet read_doobset(std::istream& in);

// "doobcol v1": `doob <m> <n>`, then the colour of every vertex in index
// order as a K4 element "cd".
void write_doobcol(std::ostream& out, const LatinColoring& f);
LatinColoring read_doobcol(std::istream& in);

// Partition file: two doobset payloads separated by a `---` line.
void write_partition(std::ostream& out, const VertexSet& first, const VertexSet& second);
std::pair<VertexSet, VertexSet> read_partition(std::istream& in);

void save_doobset(const std::string& path, const VertexSet& s);
VertexSet load_doobset(const std::string& path);
void save_doobcol(const std::string& path, const LatinColoring& f);
LatinColoring load_doobcol(const std::string& path);

}  // namespace doob
