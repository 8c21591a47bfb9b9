#include "document.hpp"

#include <gtest/gtest.h>

using namespace orthoform;
using namespace orthoform::cli;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST(Fields, Names) {
    EXPECT_EQ(parse_field("Q").kind, FieldKind::rational);
    EXPECT_EQ(parse_field("Q(i)").kind, FieldKind::gaussian_rational);
    EXPECT_EQ(parse_field("H(Q)").kind, FieldKind::rational_quaternion);
    EXPECT_EQ(parse_field("GF(7)").modulus, 7u);
    EXPECT_THROW(parse_field("GF(6)"), ParseError);
    EXPECT_THROW(parse_field("R"), ParseError);
}

TEST(Grammar, GramVariantsAgree) {
    Document a = parse_document("field: GF(5)\ndim: 2\ngram: diag(1,2)\n");
    Document b = parse_document("field: GF(5)\ngram:\n  1 0\n  0 2\n");
    EXPECT_EQ(a.space.gram(), b.space.gram());
    Document c = parse_document("# comment\nfield: Q\ndim: 3\ngram: identity\n");
    EXPECT_EQ(c.space.gram(), Matrix::identity(c.field, 3));
}

TEST(Grammar, SubspacesAndStates) {
    Document d = parse_document(
        "field: Q\ndim: 2\ngram: identity\nsubspace M: (1,0)\nsubspace N: (1,0),(0,1)\n"
        "state psi: vector (3,4)\nstate phi: atom (1,0)\nstate mix: mixture 1/2 psi, 1/2 phi\n");
    EXPECT_EQ(d.subspace("M").to_string(), "span{(1,0)}");
    EXPECT_TRUE(d.subspace("N").is_full());
    EXPECT_FALSE(d.has_subspace("Z"));
    EXPECT_THROW(d.subspace("Z"), DomainError);
    ASSERT_EQ(d.states.size(), 3u);
    EXPECT_EQ(d.states[0].kind, StateSpec::Kind::vector);
    EXPECT_EQ(d.states[1].kind, StateSpec::Kind::atom);
    EXPECT_EQ(d.states[2].parts.size(), 2u);
    EXPECT_EQ(d.states[2].parts[0].first, mpq_class(1, 2));
    EXPECT_EQ(d.states[2].line, 8u);
}

TEST(Grammar, ScalarsInEntries) {
    Document d = parse_document("field: Q(i)\ngram:\n  2 1+i\n  1-i 3\nsubspace M: (1,i)\n");
    EXPECT_EQ(d.space.gram()(0, 1).to_string(), "1+i");
    EXPECT_EQ(d.subspace("M").dim(), 1u);
}

TEST(Errors, CarryLineNumbers) {
    EXPECT_EQ(error_line("field: Q\ndim: 2\ngram: identity\nsubspace M: (1,0,0)\n"), 4u);
    EXPECT_EQ(error_line("field: Q\nfield: Q\n"), 2u);
    EXPECT_EQ(error_line("field: Q\ncolour: red\n"), 2u);
    EXPECT_EQ(error_line("field: Q\ndim: 0\n"), 2u);
    EXPECT_EQ(error_line("field: Q\ndim: 3\ngram: diag(1,2)\n"), 3u);
    EXPECT_EQ(error_line("field: Q\ngram:\n  1 0\n  0\n"), 4u);
    EXPECT_EQ(error_line("field: Q\ndim: 2\ngram: identity\nstate s: mixture 1/2 nope\n"), 4u);
    EXPECT_EQ(error_line("field: Q\ndim: 2\ngram: identity\nsubspace M: (1,0)\nsubspace M: (0,1)\n"), 5u);
    EXPECT_EQ(error_line("dim: 2\ngram: identity\n"), 0u);
    EXPECT_EQ(error_line("field: Q\ndim: 2\n"), 0u);
    EXPECT_EQ(error_line("field: Q\ngram: identity\n"), 2u);
}

TEST(Errors, SingularGramSample) {
    try {
        load_document(std::string(ORTHOFORM_SAMPLES_DIR) + "/singular_gram.txt");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 6u);
    }
    EXPECT_THROW(load_document("/nonexistent/space.txt"), ParseError);
}

TEST(Samples, AllOthersLoad) {
    for (const char* name : {"gaussian_plane", "gf3_diag11", "gf3_diag111", "gf5_diag111", "gf5_diag12",
                             "gf5_diag14", "q2_states", "q3_identity", "quaternion_line"})
        EXPECT_NO_THROW(load_document(std::string(ORTHOFORM_SAMPLES_DIR) + "/" + name + ".txt")) << name;
}
