#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "xdl/io.hpp"
#include "xdl/report.hpp"

using namespace xdl;
using testutil::example_matrix;

TEST_CASE("parse_matrix") {
    std::istringstream in("2 4\n1 0 1 1\n0 1 0 1\n");
    CHECK(parse_matrix(in) == example_matrix());

    std::istringstream frac("2 2\n1/2 0 0 1/3\n");
    const auto M = parse_matrix(frac);
    CHECK(M(0, 0) == Rational(1, 2));
    CHECK(M(1, 1) == Rational(1, 3));
}

TEST_CASE("parse_vector") {
    std::istringstream in("3\n1 0 0\n");
    CHECK(parse_vector(in) == unit_vector(3, 0));

    std::istringstream neg("2\n-5/3 +7\n");
    const auto v = parse_vector(neg);
    CHECK(v[0] == Rational(-5, 3));
    CHECK(v[1] == Rational(7));
}

TEST_CASE("parse errors carry positions") {
    std::istringstream bad_token("2 2\n1 x 3 4\n");
    try {
        parse_matrix(bad_token);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }

    std::istringstream too_few("2 2\n1 2 3\n");
    CHECK_THROWS_AS(parse_matrix(too_few), parse_error);

    std::istringstream too_many("1\n1 2\n");
    CHECK_THROWS_AS(parse_vector(too_many), parse_error);

    std::istringstream zero_den("1\n1/0\n");
    CHECK_THROWS_AS(parse_vector(zero_den), parse_error);

    std::istringstream bad_header("0 2\n");
    CHECK_THROWS_AS(parse_matrix(bad_header), parse_error);
}

TEST_CASE("rational string round trip") {
    testutil::Rng rng(51);
    for (int it = 0; it < 300; ++it) {
        const Rational q(rng.uniform(-1000, 1000), rng.uniform(1, 60));
        CHECK(parse_rational(rational_to_string(q)) == q);
    }
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("json output round-trips every rational exactly") {
    const auto A = example_matrix();
    const auto doc = report::report_document(A, 3);
    // re-parse the serialized document and recover exact values
    const auto parsed = report::json::parse(doc.dump());

    const Poly q_union = min_annihilator_union(A, 3);
    const auto& coeffs = parsed["annihilators"]["q_union"]["coeffs"];
    REQUIRE(coeffs.size() == q_union.coeffs().size());
    for (std::size_t i = 0; i < q_union.coeffs().size(); ++i)
        CHECK(parse_rational(coeffs[i].get<std::string>()) == q_union.coeffs()[i]);

    const Subspace R1 = reach_basis(A, 3, 1);
    const auto& basis = parsed["bases"][1]["subspace"]["basis"];
    REQUIRE(basis.size() == R1.dim());
    for (std::size_t i = 0; i < R1.dim(); ++i)
        for (std::size_t j = 0; j < R1.ambient(); ++j)
            CHECK(parse_rational(basis[i][j].get<std::string>()) == R1.basis()[i][j]);
}

TEST_CASE("dims text and csv agree row for row") {
    const auto doc = report::dims_document(10, 6, 68040, 7);
    const std::string text = report::render_dims_text(doc);
    const std::string csv = report::render_dims_csv(doc);

    auto split_lines = [](const std::string& s) {
        std::vector<std::string> lines;
        std::istringstream in(s);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        return lines;
    };
    const auto text_lines = split_lines(text);
    const auto csv_lines = split_lines(csv);
    REQUIRE(csv_lines.size() == 9); // header + 8 rows
    for (std::size_t i = 1; i < csv_lines.size(); ++i) {
        std::string tabbed = csv_lines[i];
        for (auto& c : tabbed)
            if (c == ',') c = '\t';
        CHECK(tabbed == text_lines[i + 1]); // text has a title line before the header
    }
}

TEST_CASE("report emits every section") {
    const auto A = example_matrix();
    const auto doc = report::report_document(A, 3);
    CHECK(doc.contains("profile"));
    CHECK(doc.contains("bases"));
    CHECK(doc.contains("union_proper"));
    CHECK(doc["union_proper"] == "proper-subset");
}
