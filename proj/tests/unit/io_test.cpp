#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "doob/doob.hpp"
#include "helpers.hpp"

namespace doob {
namespace {

VertexSet read_set(const std::string& text) {
  std::istringstream in(text);
  return read_doobset(in);
}

TEST(Doobset, ExactText) {
  const auto s = testing::sh_set({"00", "02", "20", "22"});
  std::ostringstream out;
  write_doobset(out, s);
  EXPECT_EQ(out.str(), "doob 1 0\n0\n2\n8\n10\n");
  EXPECT_EQ(read_set(out.str()), s);
}

TEST(Doobset, RoundTripsEveryMdsCodeOfD11) {
  for (const auto& s : collect_codes({DoobParams(1, 1), Target::mds, SearchMode::all, 1})) {
    std::stringstream io;
    write_doobset(io, s);
    EXPECT_EQ(read_doobset(io), s);
  }
}

TEST(Doobset, EmptySetAndMissingFinalNewline) {
  EXPECT_EQ(read_set("doob 0 2\n"), VertexSet(DoobParams(0, 2)));
  EXPECT_EQ(read_set("doob 0 2\n3\n7"), testing::set_of(DoobParams(0, 2), {"00.11", "01.11"}));
}

TEST(Doobset, RejectsMalformedInput) {
  EXPECT_THROW(read_set(""), FormatError);
  EXPECT_THROW(read_set("dob 1 0\n"), FormatError);
  EXPECT_THROW(read_set("doob 0 0\n"), FormatError);
  EXPECT_THROW(read_set("doob 1 0\r\n0\r\n"), FormatError);
  EXPECT_THROW(read_set("doob 1 0\n2\n1\n"), FormatError);
  EXPECT_THROW(read_set("doob 1 0\n2\n2\n"), FormatError);
  EXPECT_THROW(read_set("doob 1 0\n16\n"), FormatError);
  EXPECT_THROW(read_set("doob 1 0\n-1\n"), FormatError);
  EXPECT_THROW(read_set("doob 1 0\n1x\n"), FormatError);
}

TEST(Doobcol, RoundTrip) {
  for (const auto& f : enumerate_latin_colorings(DoobParams(1, 0))) {
    std::stringstream io;
    write_doobcol(io, f);
    EXPECT_EQ(read_doobcol(io), f);
  }
  std::istringstream k4("doob 0 1\n00\n01\n10\n11\n");
  EXPECT_EQ(read_doobcol(k4).colors(), (std::vector<std::uint8_t>{0, 1, 2, 3}));
}

TEST(Doobcol, RejectsMalformedInput) {
  std::istringstream short_file("doob 0 1\n00\n01\n10\n");
  EXPECT_THROW(read_doobcol(short_file), FormatError);
  std::istringstream bad_colour("doob 0 1\n00\n01\n12\n11\n");
  EXPECT_THROW(read_doobcol(bad_colour), FormatError);
  std::istringstream not_latin("doob 0 1\n00\n01\n10\n10\n");
  EXPECT_THROW(read_doobcol(not_latin), InvalidCode);
}

TEST(Partition, RoundTrip) {
  const auto a = testing::sh_set({"00", "02", "20", "22"});
  std::stringstream io;
  write_partition(io, a, a.complement());
  const auto [x, y] = read_partition(io);
  EXPECT_EQ(x, a);
  EXPECT_EQ(y, a.complement());
  std::istringstream missing("doob 1 0\n0\n");
  EXPECT_THROW(read_partition(missing), FormatError);
  std::istringstream mixed("doob 1 0\n0\n---\ndoob 0 2\n1\n");
  EXPECT_THROW(read_partition(mixed), FormatError);
}

TEST(Files, SaveAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "doob_io_test";
  std::filesystem::create_directories(dir);
  const auto s = enumerate_linear(DoobParams(1, 1)).front().set();
  save_doobset((dir / "a.doobset").string(), s);
  EXPECT_EQ(load_doobset((dir / "a.doobset").string()), s);
  const auto f = enumerate_latin_colorings(DoobParams(1, 0)).back();
  save_doobcol((dir / "f.doobcol").string(), f);
  EXPECT_EQ(load_doobcol((dir / "f.doobcol").string()), f);
  EXPECT_THROW(load_doobset((dir / "missing.doobset").string()), FormatError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace doob
