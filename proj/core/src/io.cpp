#include "doob/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "doob/error.hpp"

namespace doob {

namespace {

std::string header(const DoobParams& p) { return "doob " + std::to_string(p.m()) + " " + std::to_string(p.n()); }

// Reads one LF-terminated line; rejects CR so files stay byte-exact.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') throw FormatError("CR line endings are not accepted");
  return true;
}

std::uint64_t parse_number(const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError("expected a decimal number, got '" + text + "'");
  }
  return value;
}

DoobParams parse_header(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw FormatError("missing 'doob <m> <n>' header");
  std::istringstream words(line);
  std::string tag;
  std::string m;
  std::string n;
  std::string extra;
  if (!(words >> tag >> m >> n) || tag != "doob" || (words >> extra)) {
    throw FormatError("bad header '" + line + "'");
  }
  try {
    return DoobParams(static_cast<int>(parse_number(m)), static_cast<int>(parse_number(n)));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("bad header: ") + e.what());
  }
}

// Member lines until EOF or a `---` separator; the separator is consumed.
VertexSet read_members(std::istream& in, const DoobParams& p, bool stop_at_separator, bool& saw_separator) {
  VertexSet s(p);
  std::string line;
  std::uint64_t previous = 0;
  bool first = true;
  saw_separator = false;
  while (next_line(in, line)) {
    if (stop_at_separator && line == "---") {
      saw_separator = true;
      break;
    }
    const auto v = parse_number(line);
    if (v >= p.vertex_count()) throw FormatError("vertex index " + line + " out of range");
    if (!first && v <= previous) throw FormatError("vertex indices must be strictly ascending");
    s.insert(static_cast<VertexIndex>(v));
    previous = v;
    first = false;
  }
  return s;
}

template <typename T, typename Fn>
T with_input(const std::string& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return fn(in);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  fn(out);
  if (!out) throw FormatError("write to " + path + " failed");
}

}  // namespace

void write_doobset(std::ostream& out, const VertexSet& s) {
  out << header(s.params()) << '\n';
  s.for_each([&](VertexIndex v) { out << v << '\n'; });
}

VertexSet read_doobset(std::istream& in) {
  const auto p = parse_header(in);
  bool sep = false;
  return read_members(in, p, false, sep);
}

void write_doobcol(std::ostream& out, const LatinColoring& f) {
  out << header(f.params()) << '\n';
  for (const auto c : f.colors()) out << static_cast<char>('0' + (c >> 1)) << static_cast<char>('0' + (c & 1)) << '\n';
}

LatinColoring read_doobcol(std::istream& in) {
  const auto p = parse_header(in);
  std::vector<std::uint8_t> colors;
  colors.reserve(static_cast<std::size_t>(p.vertex_count()));
  std::string line;
  while (next_line(in, line)) {
    if (line.size() != 2 || (line[0] != '0' && line[0] != '1') || (line[1] != '0' && line[1] != '1')) {
      throw FormatError("bad colour '" + line + "'");
    }
    colors.push_back(static_cast<std::uint8_t>(2 * (line[0] - '0') + (line[1] - '0')));
  }
  if (colors.size() != p.vertex_count()) throw FormatError("colour file must list every vertex");
  return LatinColoring(p, std::move(colors));
}

void write_partition(std::ostream& out, const VertexSet& first, const VertexSet& second) {
  write_doobset(out, first);
  out << "---\n";
  write_doobset(out, second);
}

std::pair<VertexSet, VertexSet> read_partition(std::istream& in) {
  const auto p1 = parse_header(in);
  bool sep = false;
  auto first = read_members(in, p1, true, sep);
  if (!sep) throw FormatError("partition file needs a '---' separator");
  const auto p2 = parse_header(in);
  if (!(p1 == p2)) throw FormatError("partition cells of different graphs");
  auto second = read_members(in, p2, false, sep);
  return {std::move(first), std::move(second)};
}

void save_doobset(const std::string& path, const VertexSet& s) {
  with_output(path, [&](std::ostream& out) { write_doobset(out, s); });
}

VertexSet load_doobset(const std::string& path) {
  return with_input<VertexSet>(path, [](std::istream& in) { return read_doobset(in); });
}

void save_doobcol(const std::string& path, const LatinColoring& f) {
  with_output(path, [&](std::ostream& out) { write_doobcol(out, f); });
}

LatinColoring load_doobcol(const std::string& path) {
  return with_input<LatinColoring>(path, [](std::istream& in) { return read_doobcol(in); });
}

}  // namespace doob
