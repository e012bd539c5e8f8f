#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "coideal/inputs.hpp"

using namespace coideal;

namespace {
Scalar Q(long a) { return Scalar(nullptr, a); }
}  // namespace

TEST_CASE("inputs: rack names") {
    CHECK(parse_rack("trans3").size() == 3);
    CHECK(parse_rack("transpositions5").size() == 10);
    CHECK(parse_rack("trans(4)").size() == 6);
    CHECK(parse_rack("Tetrahedron").rows() == tetrahedron().rows());
    CHECK(parse_rack("tetra").size() == 4);
    CHECK(parse_rack("cube").rows() == cube().rows());
    CHECK(parse_rack("point").size() == 1);
    CHECK(parse_rack("trivial4").size() == 4);
    CHECK(parse_rack("dihedral5").size() == 5);
    CHECK_THROWS_WITH_AS(parse_rack("octahedron"), doctest::Contains("UnknownRack"), Error);
    CHECK_THROWS_WITH_AS(parse_rack("trans1"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("inputs: cocycle expressions") {
    Rack t3 = transpositions(3);
    CHECK(parse_cocycle(t3, "const(-1)").table() == constant(t3, Q(-1)).table());
    CHECK(parse_cocycle(t3, " t3( 2 ) ").table() == model_T3(Q(2)).table());

    Cocycle z = parse_cocycle(tetrahedron(), "tetra(t=zeta3, lambda=-zeta3^-1)");
    const ScalarDomain* d3 = ScalarDomain::cyclotomic(3);
    CHECK(z.domain() == d3);
    auto w = Scalar::generator(d3);
    CHECK(z.table() == model_tetra(w, -w.inv()).table());
    // Positional and named arguments agree; lambda and l are the same name.
    CHECK(parse_cocycle(tetrahedron(), "tetra(zeta3, -zeta3^2)").table() == z.table());
    CHECK(parse_cocycle(tetrahedron(), "tetra(l=-zeta3^2, t=zeta3)").table() == z.table());

    // One domain across all arguments: zeta4 in lambda forces Q(i) for t too.
    Cocycle c = parse_cocycle(cube(), "cube(t=-1, lambda=zeta4)");
    CHECK(c.domain() == ScalarDomain::cyclotomic(4));

    Rack t4 = transpositions(4);
    CHECK(parse_cocycle(t4, "tn(4, -1, 1)").table() == constant(t4, Q(-1)).table());
    CHECK(parse_cocycle(t4, "tn(n=4, t=-1, lambda=-1)").table() == model_Tn(4, Q(-1), Q(-1)).table());
    CHECK(parse_cocycle(t4, "chi(4)").table() == chi(4).table());
    CHECK(parse_cocycle(t4, "chi()").table() == chi(4).table());

    Cocycle g = parse_cocycle(t3, "t3(t)");
    CHECK(!g.domain()->is_cyclotomic());
}

TEST_CASE("inputs: cocycle expression errors") {
    Rack t3 = transpositions(3);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "foo(1)"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "const(1"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "const"), doctest::Contains("column"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "const(1,,2)"), doctest::Contains("empty argument"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "const(1, 2)"), doctest::Contains("too many"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "t3(s=2)"), doctest::Contains("unknown argument"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(tetrahedron(), "tetra(zeta3)"), doctest::Contains("missing"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(tetrahedron(), "cube(-1, 1)"), doctest::Contains("RackMismatch"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "chi(4)"), doctest::Contains("RackMismatch"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "tn(x, 1, 1)"), doctest::Contains("positive integer"), Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(tetrahedron(), "tetra(2, 3)"), doctest::Contains("ParameterConstraintViolated"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_cocycle(t3, "const(0)"), doctest::Contains("ZeroEntry"), Error);
}

TEST_CASE("inputs: JSON round trip and files") {
    Rack r = cube();
    Rack back = rack_from_json(rack_to_json(r));
    CHECK(back.rows() == r.rows());
    CHECK(back.labels() == r.labels());

    const ScalarDomain* d4 = ScalarDomain::cyclotomic(4);
    auto i = Scalar::generator(d4);
    Cocycle q = model_cube(-i, i);
    auto j = cocycle_to_json(q);
    Cocycle q2 = cocycle_from_json(r, j);
    CHECK(q2.table() == q.table());
    CHECK(q2.domain() == d4);

    auto dir = std::filesystem::temp_directory_path() / "coideal_inputs_test";
    std::filesystem::create_directories(dir);
    auto rack_path = (dir / "rack.json").string(), coc_path = (dir / "q.json").string();
    std::ofstream(rack_path) << rack_to_json(r).dump();
    std::ofstream(coc_path) << j.dump();
    Rack rf = parse_rack(rack_path);
    CHECK(parse_cocycle(rf, coc_path).table() == q.table());

    std::ofstream(coc_path) << "{\"q\": [[1, 2]";
    CHECK_THROWS_WITH_AS(parse_cocycle(rf, coc_path), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(read_json_file((dir / "absent.json").string()), doctest::Contains("IOError"), Error);
    CHECK_THROWS_WITH_AS(rack_from_json(nlohmann::json{{"rows", 1}}), doctest::Contains("ParseError"), Error);
    // A table that is not a rack is rejected by the rack constructor.
    CHECK_THROWS_AS(rack_from_json(nlohmann::json{{"table", {{0, 0}, {1, 1}}}}), Error);
    std::filesystem::remove_all(dir);
}
