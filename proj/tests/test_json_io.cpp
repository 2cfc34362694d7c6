#include <doctest.h>

#include "hopford/json_io.hpp"
#include "hopford/orders.hpp"

using namespace hopford;

TEST_CASE("coefficient and vector round trips") {
    auto field = CycField::get(12);
    CycNumber c = field->zeta_pow(7) * field->from_rational(make_rational(-5, 3));
    CHECK(coeff_from_json(field, coeff_to_json(c)) == c);
    Vec v{c, field->one(), field->zero()};
    CHECK(vec_from_json(field, vec_to_json(v)) == v);
}

TEST_CASE("group spec and table round trips") {
    GroupSpec spec = GroupSpec::product(GroupSpec::semidirect_qp(3, 2, 2, "s", "a"),
                                        GroupSpec::cyclic(4, "c"));
    GroupSpec back = group_spec_from_json(group_spec_to_json(spec));
    FiniteGroup g1 = build_group(spec), g2 = build_group(back);
    CHECK(g1.table == g2.table);
    CHECK(g1.labels == g2.labels);
    Json gj = group_to_json(g1);
    CHECK(gj["order"] == 24);
}

TEST_CASE("algebra serialization round trips bit-exactly") {
    std::vector<HopfPtr> algebras;
    algebras.push_back(
        group_algebra(build_group(GroupSpec::semidirect_qp(3, 2, 2)), CycField::get(6)));
    algebras.push_back(dual_hopf(*algebras[0]));
    BpqResult bp = build_bpq(2, 3, 2);
    algebras.push_back(bp.twisted);
    for (const HopfPtr& h : algebras) {
        Json j1 = hopf_to_json(*h);
        HopfPtr back = hopf_from_json(j1);
        Json j2 = hopf_to_json(*back);
        CHECK(j1.dump() == j2.dump());
        CHECK(verify_axioms(*back).all_pass());
    }
}

TEST_CASE("reloaded group algebras keep their provenance") {
    BpqResult bp = build_bpq(2, 3, 2);
    HopfPtr back = hopf_from_json(hopf_to_json(*bp.twisted));
    CHECK(back->provenance.kind == Provenance::Kind::TwistedGroupAlgebra);
    CHECK(back->group.has_value());
    // Wedderburn data is available again after the round trip
    WedderburnData wd = wedderburn(back);
    CHECK(wd.dims.size() == 9);
}

TEST_CASE("a perturbed file loses the table backing but still loads") {
    HopfPtr h = group_algebra(build_group(GroupSpec::cyclic(2, "s")), CycField::get(2));
    Json j = hopf_to_json(*h);
    j["mult"][1][3][0] = "7/1";  // corrupt one multiplication coefficient
    HopfPtr back = hopf_from_json(j);
    CHECK_FALSE(back->group.has_value());
    CHECK_FALSE(verify_axioms(*back).all_pass());
}

TEST_CASE("twist serialization round trips") {
    BpqResult bp = build_bpq(2, 3, 2);
    Json j = twist_to_json(bp.twist);
    TwistData back = twist_from_json(bp.plain, j);
    CHECK(back.J == bp.twist.J);
    CHECK(back.Jinv == bp.twist.Jinv);
    CHECK(back.U == bp.twist.U);
    CHECK(back.Uinv == bp.twist.Uinv);
}

TEST_CASE("axiom report serialization") {
    HopfPtr h = group_algebra(build_group(GroupSpec::cyclic(2, "s")), CycField::get(2));
    Json j = axiom_report_to_json(verify_axioms(*h));
    CHECK(j["checks"].size() >= 8);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
}
