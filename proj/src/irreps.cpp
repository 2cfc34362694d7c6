#include "hopford/irreps.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hopford {

namespace {

void verify_homomorphism(const Irrep& rho) {
    const FiniteGroup& g = *rho.group;
    if (!(rho.mat(g.identity) == Mat::identity(rho.dim, rho.field)))
        throw std::logic_error("irrep: identity does not map to the identity matrix");
    auto check_pair = [&](uint32_t a, uint32_t b) {
        if (!(rho.mat(a) * rho.mat(b) == rho.mat(g.mul(a, b))))
            throw std::logic_error("irrep: matrices are not a homomorphism");
    };
    if (g.order <= 64) {
        for (uint32_t a = 0; a < g.order; ++a)
            for (uint32_t b = 0; b < g.order; ++b) check_pair(a, b);
    } else {
        std::mt19937_64 rng(0x69727265u);
        for (int t = 0; t < 2000; ++t) check_pair(rng() % g.order, rng() % g.order);
    }
}

void fill_character(Irrep& rho) {
    rho.character.clear();
    for (uint32_t e = 0; e < rho.group->order; ++e) {
        CycNumber tr = rho.field->zero();
        for (unsigned i = 0; i < rho.dim; ++i) tr += rho.mat(e).at(i, i);
        rho.character.push_back(tr);
    }
}

Irrep one_dim(const FiniteGroup& g, FieldPtr field, const std::vector<CycNumber>& values) {
    Irrep rho;
    rho.group = &g;
    rho.dim = 1;
    rho.field = field;
    for (uint32_t e = 0; e < g.order; ++e) {
        Mat m(1, 1, field);
        m.at(0, 0) = values[e];
        rho.matrices.push_back(std::move(m));
    }
    fill_character(rho);
    return rho;
}

std::vector<Irrep> irreps_for(const FiniteGroup& g, const GroupSpec& spec, FieldPtr field);

std::vector<Irrep> irreps_cyclic(const FiniteGroup& g, const GroupSpec& spec, FieldPtr field) {
    const unsigned k = spec.k;
    CycNumber zeta = field->root_of_unity(k);
    std::vector<Irrep> out;
    for (unsigned j = 0; j < k; ++j) {
        std::vector<CycNumber> vals;
        for (unsigned i = 0; i < k; ++i) vals.push_back(zeta.pow(long(i) * j));
        out.push_back(one_dim(g, field, vals));
    }
    return out;
}

std::vector<Irrep> irreps_semidirect(const FiniteGroup& g, const GroupSpec& spec, FieldPtr field) {
    const unsigned q = spec.q, p = spec.p;
    std::vector<Irrep> out;
    // p one-dimensional characters factoring through <s>: s^i a^j -> zeta_p^{ti}
    CycNumber zp = field->root_of_unity(p);
    for (unsigned t = 0; t < p; ++t) {
        std::vector<CycNumber> vals(g.order, field->zero());
        for (unsigned i = 0; i < p; ++i)
            for (unsigned j = 0; j < q; ++j) vals[sd_index(q, i, j)] = zp.pow(long(t) * i);
        out.push_back(one_dim(g, field, vals));
    }
    // (q-1)/p induced representations of dimension p, one per orbit of the
    // nontrivial characters of <a> under l -> l*r mod q.
    std::vector<uint32_t> sub;
    for (unsigned j = 0; j < q; ++j) sub.push_back(sd_index(q, 0, j));
    std::vector<uint32_t> transversal;
    for (unsigned i = 0; i < p; ++i) transversal.push_back(sd_index(q, i, 0));
    CycNumber eta = field->root_of_unity(q);
    std::set<unsigned> seen;
    for (unsigned l = 1; l < q; ++l) {
        if (seen.count(l)) continue;
        unsigned x = l;
        for (unsigned i = 0; i < p; ++i) {
            seen.insert(x);
            x = (x * spec.r) % q;
        }
        SubgroupChar chi(g.order, field->zero());
        for (unsigned j = 0; j < q; ++j) chi[sd_index(q, 0, j)] = eta.pow(long(l) * j);
        out.push_back(induce_irrep(g, sub, chi, transversal, field));
    }
    return out;
}

std::vector<Irrep> irreps_product(const FiniteGroup& g, const GroupSpec& spec, FieldPtr field) {
    FiniteGroup ga = build_group(*spec.left);
    FiniteGroup gb = build_group(*spec.right);
    std::vector<Irrep> ia = irreps_for(ga, *spec.left, field);
    std::vector<Irrep> ib = irreps_for(gb, *spec.right, field);
    std::vector<Irrep> out;
    for (const Irrep& ra : ia)
        for (const Irrep& rb : ib) {
            Irrep rho;
            rho.group = &g;
            rho.dim = ra.dim * rb.dim;
            rho.field = field;
            for (uint32_t e1 = 0; e1 < ga.order; ++e1)
                for (uint32_t e2 = 0; e2 < gb.order; ++e2) {
                    Mat m(rho.dim, rho.dim, field);
                    const Mat& A = ra.mat(e1);
                    const Mat& B = rb.mat(e2);
                    for (unsigned i1 = 0; i1 < ra.dim; ++i1)
                        for (unsigned j1 = 0; j1 < ra.dim; ++j1) {
                            if (A.at(i1, j1).is_zero()) continue;
                            for (unsigned i2 = 0; i2 < rb.dim; ++i2)
                                for (unsigned j2 = 0; j2 < rb.dim; ++j2) {
                                    if (B.at(i2, j2).is_zero()) continue;
                                    m.at(i1 * rb.dim + i2, j1 * rb.dim + j2) =
                                        A.at(i1, j1) * B.at(i2, j2);
                                }
                        }
                    rho.matrices.push_back(std::move(m));
                }
            fill_character(rho);
            out.push_back(std::move(rho));
        }
    return out;
}

std::vector<Irrep> irreps_for(const FiniteGroup& g, const GroupSpec& spec, FieldPtr field) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: return irreps_cyclic(g, spec, field);
        case GroupSpec::Kind::SemidirectQP: return irreps_semidirect(g, spec, field);
        case GroupSpec::Kind::Product: return irreps_product(g, spec, field);
    }
    throw std::logic_error("irreps_for: unreachable");
}

}  // namespace

Irrep induce_irrep(const FiniteGroup& g, const std::vector<uint32_t>& subgroup,
                   const SubgroupChar& chi, const std::vector<uint32_t>& transversal,
                   FieldPtr field) {
    const unsigned n = static_cast<unsigned>(transversal.size());
    if (subgroup.size() * n != g.order)
        throw std::invalid_argument("induce_irrep: transversal size does not match the index");
    std::set<uint32_t> sub(subgroup.begin(), subgroup.end());
    {
        std::set<uint32_t> covered;
        for (uint32_t t : transversal)
            for (uint32_t s : subgroup) covered.insert(g.mul(t, s));
        if (covered.size() != g.order)
            throw std::invalid_argument("induce_irrep: not a transversal of the subgroup");
    }
    for (uint32_t a : subgroup)
        for (uint32_t b : subgroup)
            if (chi[g.mul(a, b)] != chi[a] * chi[b])
                throw std::invalid_argument("induce_irrep: character is not multiplicative");

    Irrep rho;
    rho.group = &g;
    rho.dim = n;
    rho.field = field;
    for (uint32_t e = 0; e < g.order; ++e) {
        Mat m(n, n, field);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                uint32_t x = g.mul(g.mul(g.inv(transversal[i]), e), transversal[j]);
                if (sub.count(x)) m.at(i, j) = chi[x];
            }
        rho.matrices.push_back(std::move(m));
    }
    verify_homomorphism(rho);
    fill_character(rho);
    return rho;
}

Vec induced_character_formula(const FiniteGroup& g, const std::vector<uint32_t>& subgroup,
                              const SubgroupChar& chi, FieldPtr field) {
    std::set<uint32_t> sub(subgroup.begin(), subgroup.end());
    Vec out;
    Rational inv_h = make_rational(1, static_cast<long>(subgroup.size()));
    for (uint32_t e = 0; e < g.order; ++e) {
        CycNumber acc = field->zero();
        for (uint32_t x = 0; x < g.order; ++x) {
            uint32_t c = g.mul(g.mul(g.inv(x), e), x);
            if (sub.count(c)) acc += chi[c];
        }
        acc.scale(inv_h);
        out.push_back(acc);
    }
    return out;
}

CycNumber character_inner(const FiniteGroup& g, const Vec& chi1, const Vec& chi2) {
    if (chi1[0].field() != chi2[0].field())
        throw std::invalid_argument("character_inner: field mismatch");
    CycNumber acc(chi1[0].field(), std::vector<Rational>(chi1[0].coords().size(), Rational(0)));
    for (uint32_t e = 0; e < g.order; ++e) acc += chi1[e] * chi2[g.inv(e)];
    acc.scale(make_rational(1, static_cast<long>(g.order)));
    return acc;
}

std::vector<Irrep> all_irreps(const FiniteGroup& g, FieldPtr field) {
    if (!g.spec) throw std::invalid_argument("all_irreps: group has no build spec");
    if (!field) field = CycField::get(g.exponent());
    std::vector<Irrep> out = irreps_for(g, *g.spec, field);
    unsigned long sum_sq = 0;
    for (const Irrep& r : out) sum_sq += static_cast<unsigned long>(r.dim) * r.dim;
    if (sum_sq != g.order) throw std::logic_error("all_irreps: squared dimensions do not sum to |G|");
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) {
            CycNumber ip = character_inner(g, out[i].character, out[j].character);
            bool expect_one = (i == j);
            if (expect_one ? !ip.is_one() : !ip.is_zero())
                throw std::logic_error("all_irreps: character orthogonality fails");
        }
    return out;
}

}  // namespace hopford
