#include <gtest/gtest.h>

#include <sstream>

#include "kloc/families.hpp"
#include "kloc/io.hpp"

using namespace kloc;

namespace {
Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}
}  // namespace

TEST(EdgeList, ParsesWithCommentsAndBlankLines) {
    const Graph g = parse("# a path\n4 3\n\n0 1  # first\n1 2\n2 3\n");
    EXPECT_EQ(g, path(4));
}

TEST(EdgeList, RoundTrip) {
    const Graph p = petersen();
    EXPECT_EQ(parse(to_edge_list(p)), p);
}

TEST(EdgeList, SingleVertexWithoutEdges) { EXPECT_EQ(parse("1 0\n").size(), 1u); }

TEST(EdgeList, Errors) {
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("3\n"), ParseError);
    EXPECT_THROW(parse("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 3\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 x\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 -1\n"), ParseError);
    EXPECT_THROW(parse("3 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse("3 1\n0 1 2\n"), ParseError);
    EXPECT_THROW(parse("0 0\n"), ParseError);
}

TEST(EdgeList, ErrorNamesTheLine) {
    try {
        parse("3 2\n0 1\n0 7\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(EdgeList, MissingFile) { EXPECT_THROW(read_edge_list_file("/nonexistent/graph.el"), ParseError); }

TEST(Digest, StableAndSensitive) {
    EXPECT_EQ(content_digest(""), "cbf29ce484222325");
    EXPECT_EQ(content_digest("2 1\n0 1\n"), content_digest("2 1\n0 1\n"));
    EXPECT_NE(content_digest("2 1\n0 1\n"), content_digest("2 1\n1 0\n"));
    EXPECT_EQ(content_digest("abc").size(), 16u);
}
