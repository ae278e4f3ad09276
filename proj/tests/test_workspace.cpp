#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satrees/workspace.hpp"
#include "test_util.hpp"

using namespace satrees;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_workspace_text(text);
        return "";
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::parse);
        return e.what();
    }
}

} // namespace

TEST_CASE("parse basic workspace") {
    Workspace ws = parse_workspace_text("ring X Y Z\nideal I = X*Y, Y*Z, X*Z\n");
    CHECK(ws.ring.vars == std::vector<std::string>{"X", "Y", "Z"});
    CHECK(ws.ideals.at("I") == tu::ideal(ws.ring, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
}

TEST_CASE("sums in ideal generators are rejected") {
    std::string msg = error_of("ring X Y\nideal I = X + Y\n");
    CHECK(msg.find("sums are not allowed in ideal generators") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("family with polynomial saturation") {
    Workspace ws = parse_workspace_text("ring X Y\n"
                                        "poly f = X - Y\n"
                                        "ideal I = X^2, Y^2\n"
                                        "family F = [I] sat f\n");
    const IdealFamily& f = ws.families.at("F");
    CHECK(f.arity() == 1);
    REQUIRE(f.j_gens.size() == 1);
    CHECK(f.j_gens[0] == ws.polys.at("f"));

    Workspace ws2 = parse_workspace_text("ring X Y\nideal I = X\nfamily F = [I] sat m\n");
    CHECK(j_is_maximal(ws2.families.at("F")));
}

TEST_CASE("parse errors carry position and reason") {
    CHECK(error_of("ideal I = X\n").find("ring must be declared first") != std::string::npos);
    CHECK(error_of("ring X\nring Y\n").find("ring declared twice") != std::string::npos);
    CHECK(error_of("ring X Y\nideal I = X\nideal I = Y\n").find("duplicate name") !=
          std::string::npos);
    CHECK(error_of("ring X\nideal X = X\n").find("duplicate name") != std::string::npos);
    CHECK(error_of("ring X Y\nideal I = W\n").find("unknown variable") != std::string::npos);
    CHECK(error_of("ring X Y\nideal I = 2*X\n")
              .find("coefficients are not allowed") != std::string::npos);
    CHECK(error_of("ring X Y\npoly f = X - X\n").find("zero polynomial") != std::string::npos);
    CHECK(error_of("ring X Y\nfamily F = [Q] sat m\n").find("unknown ideal") !=
          std::string::npos);
    CHECK(error_of("ring X Y\nideal I = X\nfamily F = [I] sat q\n")
              .find("unknown polynomial") != std::string::npos);
    CHECK(error_of("ring X Y\npoly f = 1/0\n").find("zero denominator") != std::string::npos);
}

TEST_CASE("rational coefficients and constants in polys") {
    Workspace ws = parse_workspace_text("ring X Y\npoly f = 1/2*X^2 + 3 - 2/3*Y\n");
    const SparsePoly& f = ws.polys.at("f");
    CHECK(f.terms.at({2, 0}) == Rational(1, 2));
    CHECK(f.terms.at({0, 0}) == Rational(3));
    CHECK(f.terms.at({0, 1}) == Rational(-2, 3));
}

TEST_CASE("print/reparse round trip") {
    const std::string text = "ring X Y Z\n"
                             "ideal I = X*Y, Y*Z, X*Z\n"
                             "ideal K = X^2, X*Y^3\n"
                             "poly f = X - Y\n"
                             "poly g = 1/2*Z^2 + 3\n"
                             "poly h = -X + 2*Z\n"
                             "family F = [I] sat m\n"
                             "family G = [I, K] sat f g\n"
                             "family H = [K] sat h\n";
    Workspace ws = parse_workspace_text(text);
    std::string printed = print_workspace(ws);
    Workspace again = parse_workspace_text(printed);
    CHECK(ws == again);
    CHECK(print_workspace(again) == printed);
}

TEST_CASE("comments and blank lines") {
    Workspace ws = parse_workspace_text("# header\n"
                                        "ring X Y  # trailing\n"
                                        "\n"
                                        "ideal I = X^2   # generators\n");
    CHECK(ws.ideals.count("I") == 1);
}
