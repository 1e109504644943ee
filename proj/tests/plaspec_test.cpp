#include <gtest/gtest.h>

#include "revpla/plaspec.hpp"
#include "test_util.hpp"

using namespace revpla;

TEST(ParsePla, Minimal) {
    const PlaSpec spec = parse_pla(".i 3\n.o 1\n111 1\n.e\n");
    EXPECT_EQ(spec.num_inputs, 3u);
    EXPECT_EQ(spec.num_outputs, 1u);
    ASSERT_EQ(spec.cubes.size(), 1u);
    EXPECT_EQ(spec.cubes[0].inputs, "111");
    EXPECT_EQ(spec.cubes[0].outputs, "1");
}

TEST(ParsePla, DontCareExpansion) {
    const PlaSpec spec = parse_pla(".i 2\n.o 1\n0- 1\n.e\n");
    EXPECT_EQ(minterm_set(spec, 0), (std::vector<std::uint32_t>{0, 1}));
}

TEST(ParsePla, WidthMismatchReportsLine) {
    try {
        (void)parse_pla(".i 2\n.o 1\n011 1\n.e\n");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string{e.what()}.find("line 3"), std::string::npos);
    }
}

TEST(ParsePla, OutputWidthMismatchReportsLine) {
    try {
        (void)parse_pla(".i 2\n.o 2\n01 1\n.e\n");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParsePla, MissingDirectives) {
    EXPECT_THROW((void)parse_pla(".o 1\n.e\n"), FormatError);
    EXPECT_THROW((void)parse_pla(".i 2\n.e\n"), FormatError);
    EXPECT_THROW((void)parse_pla("11 1\n.e\n"), FormatError);  // cube before .i/.o
}

TEST(ParsePla, InvalidCharacters) {
    EXPECT_THROW((void)parse_pla(".i 2\n.o 1\n0x 1\n.e\n"), FormatError);
    EXPECT_THROW((void)parse_pla(".i 2\n.o 1\n01 -\n.e\n"), FormatError);
    EXPECT_THROW((void)parse_pla(".i 2\n.o 1\n01 2\n.e\n"), FormatError);
}

TEST(ParsePla, CommentsAndCrlf) {
    const PlaSpec spec =
        parse_pla("# header comment\r\n.i 1\r\n.o 1\r\n1 1 # trailing comment\r\n.e\r\n");
    EXPECT_EQ(spec.num_inputs, 1u);
    ASSERT_EQ(spec.cubes.size(), 1u);
    EXPECT_EQ(spec.cubes[0].inputs, "1");
}

TEST(ParsePla, ProductCountDirective) {
    EXPECT_NO_THROW((void)parse_pla(".i 2\n.o 1\n.p 2\n01 1\n10 1\n.e\n"));
    EXPECT_THROW((void)parse_pla(".i 2\n.o 1\n.p 3\n01 1\n10 1\n.e\n"), FormatError);
}

TEST(ParsePla, DuplicateAndUnknownDirectives) {
    EXPECT_THROW((void)parse_pla(".i 2\n.i 2\n.o 1\n.e\n"), FormatError);
    EXPECT_THROW((void)parse_pla(".i 2\n.o 1\n.type fr\n.e\n"), FormatError);
}

TEST(ParsePla, WidthCap) {
    EXPECT_THROW((void)parse_pla(".i 17\n.o 1\n.e\n"), FormatError);
    EXPECT_THROW((void)parse_pla(".i 0\n.o 1\n.e\n"), FormatError);
    EXPECT_NO_THROW((void)parse_pla(".i 16\n.o 1\n.e\n"));
}

TEST(ParsePla, MissingEndIsAccepted) {
    const PlaSpec spec = parse_pla(".i 2\n.o 1\n11 1\n");
    EXPECT_EQ(spec.cubes.size(), 1u);
}

TEST(EvalSpec, SingleCube) {
    const PlaSpec spec = parse_pla(".i 2\n.o 1\n11 1\n.e\n");
    EXPECT_EQ(eval_spec(spec, 0b11), 1u);
    EXPECT_EQ(eval_spec(spec, 0b10), 0u);
}

TEST(EvalSpec, XorTable) {
    const PlaSpec spec = parse_pla(".i 2\n.o 1\n01 1\n10 1\n.e\n");
    EXPECT_EQ(eval_spec(spec, 0b00), 0u);
    EXPECT_EQ(eval_spec(spec, 0b01), 1u);
    EXPECT_EQ(eval_spec(spec, 0b10), 1u);
    EXPECT_EQ(eval_spec(spec, 0b11), 0u);
}

TEST(EvalSpec, WidthMismatchThrows) {
    const PlaSpec spec = parse_pla(".i 2\n.o 1\n11 1\n.e\n");
    EXPECT_THROW((void)eval_spec(spec, 4), std::invalid_argument);
}

TEST(MintermSet, Examples) {
    const PlaSpec xor2 = parse_pla(".i 2\n.o 1\n01 1\n10 1\n.e\n");
    EXPECT_EQ(minterm_set(xor2, 0), (std::vector<std::uint32_t>{1, 2}));

    const PlaSpec tautology = parse_pla(".i 2\n.o 1\n-- 1\n.e\n");
    EXPECT_EQ(minterm_set(tautology, 0), (std::vector<std::uint32_t>{0, 1, 2, 3}));

    const PlaSpec empty = parse_pla(".i 2\n.o 2\n.e\n");
    EXPECT_TRUE(minterm_set(empty, 0).empty());
    EXPECT_TRUE(minterm_set(empty, 1).empty());
}

TEST(MintermSet, IndexOutOfRange) {
    const PlaSpec spec = parse_pla(".i 2\n.o 1\n11 1\n.e\n");
    EXPECT_THROW((void)minterm_set(spec, 1), std::out_of_range);
}

TEST(PlaProperties, SerializeParseRoundTrip) {
    testutil::DetRng rng(11);
    for (int round = 0; round < 60; ++round) {
        const PlaSpec spec = testutil::random_spec(rng);
        const PlaSpec reparsed = parse_pla(to_pla_text(spec));
        ASSERT_EQ(reparsed.num_inputs, spec.num_inputs);
        ASSERT_EQ(reparsed.num_outputs, spec.num_outputs);
        for (std::uint32_t word = 0; word < (1u << spec.num_inputs); ++word) {
            ASSERT_EQ(eval_spec(reparsed, word), eval_spec(spec, word))
                << "round " << round << " word " << word;
        }
    }
}

TEST(PlaProperties, EvalAgreesWithMintermSet) {
    testutil::DetRng rng(13);
    for (int round = 0; round < 40; ++round) {
        const PlaSpec spec = testutil::random_spec(rng);
        for (unsigned j = 0; j < spec.num_outputs; ++j) {
            const auto minterms = minterm_set(spec, j);
            for (std::uint32_t word = 0; word < (1u << spec.num_inputs); ++word) {
                const bool in_set =
                    std::find(minterms.begin(), minterms.end(), word) != minterms.end();
                ASSERT_EQ(word_bit(eval_spec(spec, word), j, spec.num_outputs), in_set);
            }
        }
    }
}

// Parsing is total: arbitrary byte soup either parses or raises a
// FormatError; nothing else escapes.
TEST(PlaProperties, ParseTotality) {
    testutil::DetRng rng(17);
    const char alphabet[] = "01-.iope \t\r\n#xyz248";
    for (int round = 0; round < 300; ++round) {
        std::string soup;
        for (unsigned i = 2 + rng.below(60); i > 0; --i) {
            soup.push_back(alphabet[rng.below(sizeof(alphabet) - 1)]);
        }
        try {
            (void)parse_pla(soup);
        } catch (const FormatError&) {
            // diagnostic is the expected outcome for most soup
        }
    }
}
