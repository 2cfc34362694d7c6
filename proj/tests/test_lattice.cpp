#include <doctest.h>

#include "hopford/lattice.hpp"

using namespace hopford;

namespace {

HopfPtr kz2() { return group_algebra(build_group(GroupSpec::cyclic(2, "s")), CycField::get(2)); }

HopfPtr kn_q() {
    // rational group algebra of the order-6 semidirect product
    return group_algebra(build_group(GroupSpec::semidirect_qp(3, 2, 2)), CycField::get(1));
}

}  // namespace

TEST_CASE("ring spec parsing") {
    RingSpec z = parse_ring("Z");
    CHECK(z.conductor == 1);
    CHECK(z.inverted == 1);
    RingSpec z2 = parse_ring("Z[1/2]");
    CHECK(z2.inverted == 2);
    RingSpec zc = parse_ring("Z[zeta_12][1/3]");
    CHECK(zc.conductor == 12);
    CHECK(zc.inverted == 3);
    CHECK(zc.to_string() == "Z[zeta_12][1/3]");
    CHECK_THROWS_AS(parse_ring("Q"), std::invalid_argument);
}

TEST_CASE("span canonicalization is generator-order independent") {
    HopfPtr h = kn_q();
    RingSpec ring;  // Z
    std::vector<Vec> gens1, gens2;
    for (uint32_t i = 0; i < h->dim; ++i) gens1.push_back(basis_vec(*h, i));
    for (uint32_t i = h->dim; i-- > 0;) gens2.push_back(basis_vec(*h, i));
    Vec mixed = basis_vec(*h, 0);
    mixed[3] = h->field->from_rational(make_rational(5));
    gens2.push_back(mixed);
    Lattice l1 = lattice_span(h->field, h->dim, ring, gens1);
    Lattice l2 = lattice_span(h->field, h->dim, ring, gens2);
    CHECK(l1 == l2);
    CHECK(l1.rank() == 6);
    CHECK(l1.full_rank());
}

TEST_CASE("membership in the integral group span") {
    HopfPtr h = kz2();
    RingSpec ring;  // Z
    Lattice zg = lattice_span(h->field, h->dim, ring, {basis_vec(*h, 0), basis_vec(*h, 1)});
    CHECK(lattice_member(zg, basis_vec(*h, 0)));
    Vec w0(2, h->field->from_rational(make_rational(1, 2)));  // (1 + s)/2
    CHECK_FALSE(lattice_member(zg, w0));
    // over Z[1/2] the same element is inside
    RingSpec half{1, 2};
    Lattice zg2 = lattice_span(h->field, h->dim, half, {basis_vec(*h, 0), basis_vec(*h, 1)});
    CHECK(lattice_member(zg2, w0));
}

TEST_CASE("dual of the integral group span") {
    HopfPtr h = kn_q();
    RingSpec ring;
    std::vector<Vec> gens;
    for (uint32_t i = 0; i < h->dim; ++i) gens.push_back(basis_vec(*h, i));
    Lattice zg = lattice_span(h->field, h->dim, ring, gens);
    Lattice dual = dual_lattice(zg);
    // the dual is the span of the dual basis: every indicator functional
    for (uint32_t i = 0; i < h->dim; ++i) CHECK(lattice_member(dual, basis_vec(*h, i)));
    CHECK(dual.rank() == 6);
    CHECK(lattice_index(dual, dual) == make_rational(1));
    // dual of dual returns the original
    CHECK(dual_lattice(dual) == zg);
    // characters pair the group span into the integers
    // (the induced character of the coset action has values 3, 0, 1)
    Vec psi(h->dim, h->field->zero());
    psi[0] = h->field->from_rational(make_rational(3));
    for (unsigned i = 1; i < 2; ++i)
        for (unsigned j = 0; j < 3; ++j) psi[sd_index(3, i, j)] = h->field->one();
    CHECK(lattice_member(dual, psi));
}

TEST_CASE("dual requires full rank") {
    HopfPtr h = kz2();
    RingSpec ring;
    Lattice partial = lattice_span(h->field, h->dim, ring, {basis_vec(*h, 0)});
    CHECK_THROWS_AS(dual_lattice(partial), std::invalid_argument);
}

TEST_CASE("intersection with a subspace") {
    HopfPtr h = kn_q();
    RingSpec ring;
    std::vector<Vec> gens;
    for (uint32_t i = 0; i < h->dim; ++i) gens.push_back(basis_vec(*h, i));
    Lattice zn = lattice_span(h->field, h->dim, ring, gens);
    // subspace spanned by the cyclic subgroup <a>
    std::vector<Vec> sub;
    for (unsigned j = 0; j < 3; ++j) sub.push_back(basis_vec(*h, sd_index(3, 0, j)));
    Lattice cut = intersect_with_subspace(zn, sub);
    CHECK(cut.rank() == 3);
    for (unsigned j = 0; j < 3; ++j) CHECK(lattice_member(cut, basis_vec(*h, sd_index(3, 0, j))));
    CHECK_FALSE(lattice_member(cut, basis_vec(*h, sd_index(3, 1, 0))));
}

TEST_CASE("image under a linear map") {
    HopfPtr h = kn_q();
    HopfPtr target = kz2();
    RingSpec ring;
    std::vector<Vec> gens;
    for (uint32_t i = 0; i < h->dim; ++i) gens.push_back(basis_vec(*h, i));
    Lattice zn = lattice_span(h->field, h->dim, ring, gens);
    // sign map: s^i a^j -> s^i
    auto sign_map = [&](const Vec& v) {
        Vec out(2, target->field->zero());
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 3; ++j)
                out[i] += target->field->from_rational(v[sd_index(3, i, j)].rational_part());
        return out;
    };
    Lattice img = lattice_image(zn, sign_map, target->field, 2);
    CHECK(img.rank() == 2);
    CHECK(lattice_member(img, basis_vec(*target, 1)));
}

TEST_CASE("lattice index") {
    HopfPtr h = kz2();
    RingSpec ring;
    Lattice full = lattice_span(h->field, h->dim, ring, {basis_vec(*h, 0), basis_vec(*h, 1)});
    Vec two = basis_vec(*h, 1);
    two[1] = h->field->from_rational(make_rational(2));
    Lattice sub = lattice_span(h->field, h->dim, ring, {basis_vec(*h, 0), two});
    CHECK(lattice_contains(full, sub));
    CHECK_FALSE(lattice_contains(sub, full));
    CHECK(lattice_index(sub, full) == make_rational(2));
}

TEST_CASE("m-saturation over an inverted prime") {
    // over Z[1/2], the span of 2*e_0 and e_1 is the full lattice
    HopfPtr h = kz2();
    RingSpec half{1, 2};
    Vec twice = basis_vec(*h, 0);
    twice[0] = h->field->from_rational(make_rational(2));
    Lattice l = lattice_span(h->field, h->dim, half, {twice, basis_vec(*h, 1)});
    CHECK(lattice_member(l, basis_vec(*h, 0)));
    // over Z the same generators give an index-2 sublattice
    RingSpec zr;
    Lattice lz = lattice_span(h->field, h->dim, zr, {twice, basis_vec(*h, 1)});
    CHECK_FALSE(lattice_member(lz, basis_vec(*h, 0)));
    // but a 3-divided vector stays outside either way
    Vec third = basis_vec(*h, 0);
    third[0] = h->field->from_rational(make_rational(1, 3));
    CHECK_FALSE(lattice_member(l, third));
}

TEST_CASE("restriction of scalars round trip") {
    auto field = CycField::get(12);
    Vec v{field->zeta_pow(5), field->from_rational(make_rational(-7, 3))};
    auto r = restrict_scalars(field, v);
    CHECK(r.size() == 8);
    CHECK(unrestrict_scalars(field, 2, r) == v);
}
