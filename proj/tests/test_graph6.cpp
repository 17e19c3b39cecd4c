#include <doctest.h>

#include <sstream>

#include "alphax/canonical.hpp"
#include "alphax/errors.hpp"
#include "alphax/graph6.hpp"
#include "test_support.hpp"

using namespace alphax;

TEST_CASE("small graph6 strings") {
  CHECK(encode_graph6(empty_graph(3)) == "B?");
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(decode_graph6("Bw") == complete_graph(3));
  CHECK(decode_graph6("B?\n") == empty_graph(3));
  CHECK(decode_graph6("Bw\r\n") == complete_graph(3));
  CHECK(are_isomorphic(decode_graph6("IheA@GUAo"), petersen_graph()));
}

TEST_CASE("atlas fixtures round-trip through the codec") {
  for (int n = 1; n <= 7; ++n) {
    std::ifstream in(std::string(ALPHAX_TEST_DATA) + "/atlas_n" + std::to_string(n) + ".g6");
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++lines;
      const Graph g = decode_graph6(line);
      CHECK(g.order() == n);
      CHECK(encode_graph6(g) == line);
    }
    CHECK(lines > 0);
  }
}

TEST_CASE("malformed graph6 reports the offending offset") {
  SUBCASE("byte outside the printable range") {
    try {
      decode_graph6("B w");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("length does not match the header") {
    try {
      decode_graph6("invalid~");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 8);
    }
  }
  SUBCASE("nonzero padding bits") {
    CHECK_THROWS_AS(decode_graph6("B@"), ParseError);
  }
  SUBCASE("multi-byte headers are out of scope") {
    CHECK_THROWS_AS(decode_graph6("~??~"), ParseError);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
  }
}

TEST_CASE("encoding refuses orders beyond the single-byte header") {
  CHECK_NOTHROW(encode_graph6(empty_graph(62)));
  CHECK_THROWS_AS(encode_graph6(empty_graph(63)), DomainError);
}

TEST_CASE("stream reader skips blank lines and names the bad line") {
  std::istringstream ok("Bw\n\nB?\n");
  CHECK(read_graph6_stream(ok).size() == 2);
  std::istringstream bad("Bw\nB?\nBx\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
