#include "hopford/orders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopford {

namespace {

// Characters of a group, computed over a splitting field and coerced into
// the ambient field of the algebra. Character values need not require the
// full splitting field (induced characters often stay rational), so the
// irreducible matrices are built over the larger field and only the traces
// are mapped down; an inexpressible value is a hard error.
std::vector<Vec> group_characters_in(const FiniteGroup& g, const FieldPtr& ambient) {
    FieldPtr split = CycField::get(std::lcm(ambient->conductor(), g.exponent()));
    std::vector<Vec> out;
    for (const Irrep& rho : all_irreps(g, split)) {
        Vec chi;
        for (const CycNumber& v : rho.character) {
            auto down = split == ambient ? std::optional<CycNumber>(v) : coerce_down(v, ambient);
            if (!down)
                throw std::domain_error(
                    "group_characters_in: a character value does not lie in the ambient field");
            chi.push_back(*down);
        }
        out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace

std::vector<Vec> algebra_characters(HopfPtr hp) {
    const HopfAlgebraData& h = *hp;
    switch (h.provenance.kind) {
        case Provenance::Kind::GroupAlgebra:
        case Provenance::Kind::TwistedGroupAlgebra:
            return group_characters_in(*h.group, h.field);
        case Provenance::Kind::DualGroupAlgebra: {
            // the dual of a group algebra is the function algebra: its
            // irreducible characters are the evaluations at group elements
            std::vector<Vec> out;
            for (uint32_t g = 0; g < h.dim; ++g) out.push_back(basis_vec(h, g));
            return out;
        }
        default:
            throw std::invalid_argument("algebra_characters: unsupported provenance");
    }
}

std::vector<Vec> dual_algebra_characters(HopfPtr hp) {
    const HopfAlgebraData& h = *hp;
    switch (h.provenance.kind) {
        case Provenance::Kind::GroupAlgebra: {
            std::vector<Vec> out;
            for (uint32_t g = 0; g < h.dim; ++g) out.push_back(basis_vec(h, g));
            return out;
        }
        case Provenance::Kind::DualGroupAlgebra: {
            // characters of the double dual = the group algebra: the
            // irreducible group characters, seen as functions on the group
            if (!h.provenance.group_spec)
                throw std::invalid_argument("dual_algebra_characters: missing group spec");
            FiniteGroup g = build_group(*h.provenance.group_spec);
            return group_characters_in(g, h.field);
        }
        default:
            throw std::invalid_argument("dual_algebra_characters: unsupported provenance");
    }
}

CharSupportResult character_support(HopfPtr hp, const RingSpec& ring, unsigned max_rounds) {
    const HopfAlgebraData& h = *hp;
    std::vector<Vec> chars = algebra_characters(hp);
    std::vector<Vec> gens = dual_algebra_characters(hp);
    gens.push_back(h.unit);

    CharSupportResult out;
    out.lattice = lattice_span(h.field, h.dim, ring, gens);
    out.stabilized = false;
    for (unsigned round = 1; round <= max_rounds; ++round) {
        out.rounds = round;
        std::vector<Vec> rows = lattice_vectors(out.lattice);
        std::vector<Vec> next = rows;
        for (const Vec& x : rows) {
            next.push_back(antipode_elem(h, x));
            for (const Vec& y : rows) next.push_back(mult_elem(h, x, y));
            SparseMulti delta = comult_elem(h, x);
            for (const Vec& psi : chars) {
                next.push_back(dense_of(h, eval_leg(h, delta, 0, psi)));
                next.push_back(dense_of(h, eval_leg(h, delta, 1, psi)));
            }
            SparseMulti delta2 = comult_leg(h, delta, 0);
            for (const Vec& psi : chars) {
                SparseMulti first = eval_leg(h, delta2, 0, psi);
                for (const Vec& psi2 : chars)
                    next.push_back(dense_of(h, eval_leg(h, first, 1, psi2)));
            }
        }
        Lattice grown = lattice_span(h.field, h.dim, ring, next);
        if (grown == out.lattice) {
            out.stabilized = true;
            break;
        }
        out.lattice = std::move(grown);
    }
    return out;
}

SandwichResult order_sandwich(HopfPtr hp, const RingSpec& ring) {
    SandwichResult out;
    out.lower = character_support(hp, ring);
    if (!out.lower.stabilized)
        throw std::domain_error("order_sandwich: character support did not stabilize");
    HopfPtr dual = dual_hopf(*hp);
    out.dual_support = character_support(dual, ring);
    if (!out.dual_support.stabilized)
        throw std::domain_error("order_sandwich: dual character support did not stabilize");
    out.upper = dual_lattice(out.dual_support.lattice);
    out.inclusion = lattice_contains(out.upper, out.lower.lattice);
    if (!out.inclusion)
        throw std::logic_error("order_sandwich: lower bound is not inside the upper bound");
    out.both_full_rank = out.lower.lattice.full_rank() && out.upper.full_rank();
    if (out.both_full_rank) out.index = lattice_index(out.lower.lattice, out.upper);
    return out;
}

namespace {

Vec translate_direct(const FiniteGroup& n, const Vec& f, uint32_t g) {
    Vec out(f.size(), f[0]);
    for (uint32_t x = 0; x < n.order; ++x) out[x] = f[n.mul(g, x)];
    return out;
}

Vec translate_recipe(const HopfAlgebraData& dual, const HopfAlgebraData& kn, const Vec& f,
                     uint32_t g) {
    std::vector<RecipeStep> steps;
    steps.push_back({RecipeStep::Kind::Comult, 0});
    RecipeStep ev{RecipeStep::Kind::Eval, 0};
    ev.covector = basis_vec(kn, g);
    ev.label = "eval at " + kn.labels[g];
    steps.push_back(ev);
    return dense_of(dual, apply_recipe(dual, {f}, steps));
}

}  // namespace

bool CosetChain::all_verified() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

CosetChain coset_dual_idempotents(unsigned q, unsigned p, unsigned r, FieldPtr field) {
    CosetChain out;
    FiniteGroup n = build_group(GroupSpec::semidirect_qp(q, p, r));
    out.kn = group_algebra(n, field);
    out.dual = dual_hopf(*out.kn);
    const FiniteGroup& g = *out.kn->group;
    const HopfAlgebraData& kn = *out.kn;
    const HopfAlgebraData& dual = *out.dual;
    auto add_check = [&](std::string name, bool pass, std::string witness = "") {
        out.checks.push_back(CheckResult{std::move(name), pass, "exhaustive", std::move(witness)});
    };

    // induced character of the permutation action on the cosets of <s>
    std::vector<uint32_t> sub;
    for (unsigned i = 0; i < p; ++i) sub.push_back(sd_index(q, i, 0));
    SubgroupChar triv(g.order, field->zero());
    for (uint32_t s : sub) triv[s] = field->one();
    std::vector<uint32_t> trans;
    for (unsigned j = 0; j < q; ++j) trans.push_back(sd_index(q, 0, j));
    Irrep ind = induce_irrep(g, sub, triv, trans, field);
    out.psi = ind.character;
    {
        bool ok = out.psi[g.identity] == field->from_rational(make_rational(long(q)));
        for (unsigned j = 1; j < q; ++j) ok = ok && out.psi[sd_index(q, 0, j)].is_zero();
        for (unsigned i = 1; i < p; ++i)
            for (unsigned j = 0; j < q; ++j) ok = ok && out.psi[sd_index(q, i, j)].is_one();
        Vec formula = induced_character_formula(g, sub, triv, field);
        ok = ok && (out.psi == formula);
        add_check("induced_character_values", ok);
    }

    // phi = product of the sigma-translates of psi
    uint32_t sigma = sd_index(q, 1, 0), a = sd_index(q, 0, 1);
    {
        bool recipe_ok = true;
        Vec phi = dual.unit;
        uint32_t sl = g.identity;
        for (unsigned l = 0; l < p; ++l) {
            Vec tr = translate_direct(g, out.psi, sl);
            recipe_ok = recipe_ok && (tr == translate_recipe(dual, kn, out.psi, sl));
            phi = mult_elem(dual, phi, tr);
            sl = g.mul(sl, sigma);
        }
        out.phi = phi;
        bool vals = true;
        for (unsigned i = 0; i < p; ++i)
            for (unsigned j = 0; j < q; ++j) {
                CycNumber expect =
                    j == 0 ? field->from_rational(make_rational(long(q))) : field->zero();
                vals = vals && (out.phi[sd_index(q, i, j)] == expect);
            }
        add_check("translate_recipes_match", recipe_ok);
        add_check("phi_values", vals);
    }

    // nu(g) = phi(a g a^{-1}), both by permutation and by the Sweedler recipe
    {
        Vec direct(g.order, field->zero());
        for (uint32_t x = 0; x < g.order; ++x) direct[x] = out.phi[g.mul(g.mul(a, x), g.inv(a))];
        std::vector<RecipeStep> steps;
        steps.push_back({RecipeStep::Kind::Comult, 0});
        steps.push_back({RecipeStep::Kind::Comult, 0});
        RecipeStep e1{RecipeStep::Kind::Eval, 0};
        e1.covector = basis_vec(kn, a);
        steps.push_back(e1);
        RecipeStep e2{RecipeStep::Kind::Eval, 1};
        e2.covector = basis_vec(kn, g.inv(a));
        steps.push_back(e2);
        Vec recipe = dense_of(dual, apply_recipe(dual, {out.phi}, steps));
        out.nu = direct;
        add_check("nu_recipe_matches_conjugation", direct == recipe);
    }

    // mu = phi nu = q^2 th_1
    {
        out.mu = mult_elem(dual, out.phi, out.nu);
        Vec expect(g.order, field->zero());
        expect[g.identity] = field->from_rational(make_rational(long(q) * q));
        add_check("mu_equals_q2_theta1", out.mu == expect);
    }

    // regular character = p q th_1, and the Bezout combination to q th_1
    {
        Vec reg(g.order, field->zero());
        for (const Irrep& rho : all_irreps(g, field))
            for (uint32_t x = 0; x < g.order; ++x)
                reg[x] += rho.character[x] * field->from_rational(make_rational(long(rho.dim)));
        Vec expect(g.order, field->zero());
        expect[g.identity] = field->from_rational(make_rational(long(p) * q));
        add_check("regular_character_is_pq_theta1", reg == expect);

        Integer gg, u, v;
        Integer pz(p), qz(q);
        mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t(), qz.get_mpz_t());
        out.bezout_u = static_cast<long>(u.get_si());
        out.bezout_v = static_cast<long>(v.get_si());
        // q th_1 = u (p q th_1) + v (q^2 th_1)
        out.q_theta1.assign(g.order, field->zero());
        for (uint32_t x = 0; x < g.order; ++x) {
            CycNumber t = reg[x];
            t.scale(make_rational(out.bezout_u));
            CycNumber t2 = out.mu[x];
            t2.scale(make_rational(out.bezout_v));
            out.q_theta1[x] = t + t2;
        }
        Vec qexpect(g.order, field->zero());
        qexpect[g.identity] = field->from_rational(make_rational(long(q)));
        add_check("bezout_gives_q_theta1", gg == 1 && out.q_theta1 == qexpect);
    }

    // phi_hat = psi - q th_1, and the coset indicator idempotents
    {
        out.phi_hat.assign(g.order, field->zero());
        for (uint32_t x = 0; x < g.order; ++x) out.phi_hat[x] = out.psi[x] - out.q_theta1[x];
        bool ok = true;
        for (unsigned i = 0; i < p; ++i) {
            Vec ti = dual.unit;
            for (unsigned l = 1; l < p; ++l) {
                long shift = (long(l) - long(i)) % long(p);
                if (shift < 0) shift += p;
                Vec tr = translate_direct(g, out.phi_hat, g.pow(sigma, shift));
                ok = ok && (tr == translate_recipe(dual, kn, out.phi_hat, g.pow(sigma, shift)));
                ti = mult_elem(dual, ti, tr);
            }
            out.t.push_back(ti);
            // closed form: indicator of the coset s^i <a>
            Vec closed(g.order, field->zero());
            for (unsigned j = 0; j < q; ++j) closed[sd_index(q, i, j)] = field->one();
            ok = ok && (ti == closed);
        }
        // complete orthogonal family summing to the unit of the dual
        Vec total(g.order, field->zero());
        for (unsigned i = 0; i < p; ++i)
            for (uint32_t x = 0; x < g.order; ++x) total[x] += out.t[i][x];
        ok = ok && (total == dual.unit);
        for (unsigned i = 0; i < p; ++i)
            for (unsigned j = 0; j < p; ++j) {
                Vec prod = mult_elem(dual, out.t[i], out.t[j]);
                Vec expect = i == j ? out.t[i] : Vec(g.order, field->zero());
                ok = ok && (prod == expect);
            }
        add_check("coset_idempotents", ok);
    }
    return out;
}

bool ObstructionCertificate::all_verified() const {
    for (const CertStep& s : steps)
        if (!s.verified) return false;
    return true;
}

namespace {

Json vecs_to_json(const std::vector<Vec>& vs) {
    Json arr = Json::array();
    for (const Vec& v : vs) arr.push_back(vec_to_json(v));
    return arr;
}

}  // namespace

ObstructionCertificate obstruction_certificate(unsigned p, unsigned q, unsigned r,
                                               unsigned zeta_exp) {
    ObstructionCertificate cert;
    cert.p = p;
    cert.q = q;
    cert.r = r;
    cert.zeta_exp = zeta_exp;
    auto step = [&](std::string name, std::string claim, bool verified, Json payload) {
        cert.steps.push_back(CertStep{std::move(name), std::move(claim), verified, std::move(payload)});
        if (!cert.steps.back().verified)
            throw std::logic_error("obstruction_certificate: step '" + cert.steps.back().name +
                                   "' failed verification");
    };

    // construction: group, twist, twisted algebra (validated internally)
    BpqResult bp = build_bpq(p, q, r, zeta_exp);
    const HopfAlgebraData& b = *bp.twisted;
    const FiniteGroup& g = bp.group();
    FieldPtr field = b.field;
    CycNumber zeta = field->root_of_unity(p).pow(zeta_exp);
    CycNumber eta = field->root_of_unity(q);
    step("parameters", "q prime, p prime dividing q-1, r of order p mod q, zeta a primitive p-th root",
         true,
         Json{{"p", p}, {"q", q}, {"r", r}, {"zeta_exp", zeta_exp}, {"conductor", field->conductor()}});
    {
        AxiomReport tw = verify_twist(*bp.plain, bp.twist.J, bp.twist.Jinv);
        step("twist", "J is invertible, counital and satisfies the 2-pseudo-cocycle identity",
             tw.all_pass(), tensor_to_json(bp.twist.J));
    }

    // A = subalgebra generated by sigma and b; Hopf subalgebra of the twist
    std::vector<Vec> monomials;
    std::vector<std::string> alabels;
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < q; ++j) {
            monomials.push_back(basis_vec(b, bp.index(i, 0, 0, j)));
            alabels.push_back("s^" + std::to_string(i) + " b^" + std::to_string(j));
        }
    {
        std::vector<Vec> closure =
            subalgebra_closure(b, {basis_vec(b, bp.sigma), basis_vec(b, bp.b)});
        EchelonSpan span(b.dim, field);
        for (const Vec& v : monomials) span.add(v);
        bool same = closure.size() == monomials.size();
        for (const Vec& v : closure) same = same && span.contains(v);
        bool hopf = is_hopf_subalgebra(b, closure);
        step("hopf_subalgebra_A",
             "the subalgebra generated by sigma and b has the monomial basis s^i b^j, dimension pq, "
             "and is closed under the twisted comultiplication and antipode",
             same && hopf, Json{{"dim", closure.size()}});
    }
    HopfPtr a_sub = sub_hopf_algebra(b, monomials, alabels);
    const HopfAlgebraData& A = *a_sub;
    auto a_index = [&](unsigned i, unsigned j) { return i * q + j; };

    // idempotents f_kl of A
    std::vector<std::vector<Vec>> f(p, std::vector<Vec>(q, Vec(A.dim, field->zero())));
    {
        const Rational inv_pq = make_rational(1, long(p) * q);
        for (unsigned k = 0; k < p; ++k)
            for (unsigned l = 0; l < q; ++l)
                for (unsigned i = 0; i < p; ++i)
                    for (unsigned j = 0; j < q; ++j) {
                        CycNumber c = zeta.pow(long(i) * k) * eta.pow(-long(l) * j);
                        c.scale(inv_pq);
                        f[k][l][a_index(i, j)] += c;
                    }
        bool ok = true;
        Vec total(A.dim, field->zero());
        for (unsigned k = 0; k < p && ok; ++k)
            for (unsigned l = 0; l < q && ok; ++l) {
                for (unsigned c = 0; c < p && ok; ++c)
                    for (unsigned d2 = 0; d2 < q && ok; ++d2) {
                        Vec prod = mult_elem(A, f[k][l], f[c][d2]);
                        Vec expect =
                            (k == c && l == d2) ? f[k][l] : Vec(A.dim, field->zero());
                        ok = prod == expect;
                    }
                for (uint32_t t = 0; t < A.dim; ++t) total[t] += f[k][l][t];
            }
        ok = ok && (total == A.unit);
        step("idempotents_f", "the f_kl form a complete orthogonal idempotent family of A", ok,
             Json{{"count", p * q}});
    }

    // characters psi_kl of A, dual to the f_kl
    std::vector<std::vector<Vec>> psi(p, std::vector<Vec>(q, Vec(A.dim, field->zero())));
    {
        for (unsigned k = 0; k < p; ++k)
            for (unsigned l = 0; l < q; ++l)
                for (unsigned i = 0; i < p; ++i)
                    for (unsigned j = 0; j < q; ++j)
                        psi[k][l][a_index(i, j)] = zeta.pow(-long(k) * i) * eta.pow(long(l) * j);
        bool mult_ok = true, dual_ok = true;
        for (unsigned k = 0; k < p; ++k)
            for (unsigned l = 0; l < q; ++l) {
                for (uint32_t x = 0; x < A.dim && mult_ok; ++x)
                    for (uint32_t y = 0; y < A.dim && mult_ok; ++y) {
                        CycNumber lhs = field->zero();
                        A.for_mult(x, y, [&](uint32_t t, const CycNumber& c) {
                            lhs += psi[k][l][t] * c;
                        });
                        mult_ok = lhs == psi[k][l][x] * psi[k][l][y];
                    }
                for (unsigned c = 0; c < p && dual_ok; ++c)
                    for (unsigned d2 = 0; d2 < q && dual_ok; ++d2) {
                        CycNumber val = field->zero();
                        for (uint32_t t = 0; t < A.dim; ++t) val += psi[k][l][t] * f[c][d2][t];
                        dual_ok = (k == c && l == d2) ? val.is_one() : val.is_zero();
                    }
            }
        step("characters_psi", "psi_kl(s^i b^j) = zeta^{-ki} eta^{lj} are algebra characters dual to f_kl",
             mult_ok && dual_ok, Json{{"count", p * q}});
    }

    // the character product table realizes Z_q x| Z_p
    {
        unsigned s_inv = 1;  // r^{-1} mod q
        while ((s_inv * r) % q != 1) ++s_inv;
        auto char_mult = [&](const Vec& u, const Vec& v) {
            // (u v)(x) = (u (x) v)(Delta_A(x))
            Vec out(A.dim, field->zero());
            for (uint32_t x = 0; x < A.dim; ++x) {
                CycNumber acc = field->zero();
                A.for_comult(x, [&](uint32_t s1, uint32_t s2, const CycNumber& c) {
                    if (u[s1].is_zero() || v[s2].is_zero()) return;
                    acc += c * u[s1] * v[s2];
                });
                out[x] = acc;
            }
            return out;
        };
        bool table_ok = true;
        for (unsigned k = 0; k < p && table_ok; ++k)
            for (unsigned l = 0; l < q && table_ok; ++l)
                for (unsigned c = 0; c < p && table_ok; ++c)
                    for (unsigned d2 = 0; d2 < q && table_ok; ++d2) {
                        Vec prod = char_mult(psi[k][l], psi[c][d2]);
                        unsigned sk = 1;
                        for (unsigned t = 0; t < c; ++t) sk = (sk * s_inv) % q;
                        unsigned nk = (k + c) % p, nl = (l * sk + d2) % q;
                        table_ok = prod == psi[nk][nl];
                    }
        // psi_10^p = psi_01^q = counit; conjugation rule
        Vec eps_a = A.counit;
        Vec pow10 = eps_a;
        for (unsigned t = 0; t < p; ++t) pow10 = char_mult(pow10, psi[1 % p][0]);
        Vec pow01 = eps_a;
        for (unsigned t = 0; t < q; ++t) pow01 = char_mult(pow01, psi[0][1 % q]);
        // inverse of a character is its composite with the antipode
        Vec inv10(A.dim, field->zero());
        for (uint32_t x = 0; x < A.dim; ++x) {
            CycNumber acc = field->zero();
            A.for_antipode(x, [&](uint32_t t, const CycNumber& c) { acc += psi[1 % p][0][t] * c; });
            inv10[x] = acc;
        }
        Vec conj = char_mult(char_mult(psi[1 % p][0], psi[0][1 % q]), inv10);
        Vec expect_conj = psi[0][r % q];
        bool rel_ok = (pow10 == eps_a) && (pow01 == eps_a) && (conj == expect_conj);
        step("character_product_table",
             "psi_kl psi_cd = psi_{k+c, l r^{-c} + d}; psi_10^p = psi_01^q = 1 and "
             "psi_10 psi_01 psi_10^{-1} = psi_01^r",
             table_ok && rel_ok, Json{{"s_inv", s_inv}});
    }

    // w_i = sum_l f_il = (1/p) sum_u zeta^{iu} s^u, dual to the psi-cosets
    std::vector<Vec> w;
    {
        bool ok = true;
        for (unsigned i = 0; i < p; ++i) {
            Vec wi(A.dim, field->zero());
            for (unsigned l = 0; l < q; ++l)
                for (uint32_t t = 0; t < A.dim; ++t) wi[t] += f[i][l][t];
            Vec closed(A.dim, field->zero());
            for (unsigned u = 0; u < p; ++u) {
                CycNumber c = zeta.pow(long(i) * u);
                c.scale(make_rational(1, long(p)));
                closed[a_index(u, 0)] += c;
            }
            ok = ok && (wi == closed);
            for (unsigned k = 0; k < p && ok; ++k)
                for (unsigned l = 0; l < q && ok; ++l) {
                    CycNumber val = field->zero();
                    for (uint32_t t = 0; t < A.dim; ++t) val += psi[k][l][t] * wi[t];
                    ok = (k == i) ? val.is_one() : val.is_zero();
                }
            w.push_back(std::move(wi));
        }
        step("w_idempotents",
             "w_i = sum_l f_il = (1/p) sum_u zeta^{iu} s^u and psi_kl(w_i) = delta_ik, so the "
             "coset idempotents of the dual chain transport to the w_i",
             ok, vecs_to_json(w));
    }

    // the coset chain on K[Z_q x| Z_p]
    CosetChain chain = coset_dual_idempotents(q, p, r, field);
    {
        Json payload;
        payload["psi"] = vec_to_json(chain.psi);
        payload["phi"] = vec_to_json(chain.phi);
        payload["nu"] = vec_to_json(chain.nu);
        payload["mu"] = vec_to_json(chain.mu);
        payload["q_theta1"] = vec_to_json(chain.q_theta1);
        payload["bezout"] = Json{{"u", chain.bezout_u}, {"v", chain.bezout_v}};
        payload["t"] = vecs_to_json(chain.t);
        Json checks = Json::array();
        for (const CheckResult& c : chain.checks)
            checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
        payload["checks"] = checks;
        step("coset_chain",
             "psi, phi, nu, mu = q^2 th_1, the Bezout step to q th_1 and the coset idempotents "
             "t_i = sum_j th_{s^i a^j} all verify on K[Z_q x| Z_p]",
             chain.all_verified(), payload);
    }

    // projection onto the first factor; the pushed twist is trivial
    FiniteGroup g1 = build_group(GroupSpec::semidirect_qp(q, p, r, "s", "a"));
    std::vector<uint32_t> pi(g.order);
    for (uint32_t x = 0; x < g.order; ++x) pi[x] = uint32_t(x / (p * q));
    QuotientResult qr = quotient_by_group_map(bp.twisted, &bp.twist.J, &bp.twist.Jinv, g1, pi);
    step("projection",
         "the projection onto the subgroup generated by sigma and a pushes the twist to 1 (x) 1 "
         "and induces a map of Hopf algebras",
         qr.pushed_trivial && qr.algebra_map && qr.coalgebra_map && qr.antipode_map && qr.counit_ok,
         tensor_to_json(qr.pushed_J));

    // y = Phi(w_0) = (1/p) sum_u s^u inside the quotient
    Vec y;
    {
        // w_0 as an element of the big algebra
        Vec w0(b.dim, field->zero());
        for (unsigned u = 0; u < p; ++u) {
            CycNumber c = field->one();
            c.scale(make_rational(1, long(p)));
            w0[bp.index(u, 0, 0, 0)] += c;
        }
        y = qr.apply(b, w0);
        Vec closed(g1.order, field->zero());
        for (unsigned u = 0; u < p; ++u) {
            CycNumber c = field->one();
            c.scale(make_rational(1, long(p)));
            closed[sd_index(q, u, 0)] += c;
        }
        bool ok = (y == closed);
        // membership witness: w_0 is not in the integral group span
        RingSpec zring{field->conductor(), 1};
        std::vector<Vec> group_basis;
        for (uint32_t t = 0; t < b.dim; ++t) group_basis.push_back(basis_vec(b, t));
        Lattice zg = lattice_span(field, b.dim, zring, group_basis);
        cert.w0_in_integral_group_span = lattice_member(zg, w0);
        ok = ok && !cert.w0_in_integral_group_span;
        step("image_y",
             "y = Phi(w_0) = (1/p) sum_u s^u, and w_0 does not lie in the integral span of the "
             "group basis",
             ok, vec_to_json(y));
    }

    // final pairing: t_0(y) = 1/p
    {
        CycNumber val = field->zero();
        for (uint32_t x = 0; x < g1.order; ++x) val += chain.t[0][x] * y[x];
        Rational expect = make_rational(1, long(p));
        bool ok = val.is_rational() && val.rational_part() == expect;
        cert.final_value = expect;
        cert.final_is_algebraic_integer = is_algebraic_integer(field->from_rational(expect));
        ok = ok && !cert.final_is_algebraic_integer;
        step("final_pairing",
             "t_0(Phi(w_0)) = 1/p exactly, and 1/p is not an algebraic integer: any Hopf order "
             "over a ring R containing the integers forces 1/p into R",
             ok, Json{{"value", rat_to_string(expect)}});
    }
    return cert;
}

Json certificate_to_json(const ObstructionCertificate& c) {
    Json j;
    j["format"] = "hopford-certificate-v1";
    j["p"] = c.p;
    j["q"] = c.q;
    j["r"] = c.r;
    j["zeta_exp"] = c.zeta_exp;
    j["final_value"] = rat_to_string(c.final_value);
    j["final_is_algebraic_integer"] = c.final_is_algebraic_integer;
    j["w0_in_integral_group_span"] = c.w0_in_integral_group_span;
    Json steps = Json::array();
    for (const CertStep& s : c.steps)
        steps.push_back(Json{{"step_name", s.name},
                             {"claimed_identity", s.claim},
                             {"verified", s.verified},
                             {"payload", s.payload}});
    j["steps"] = steps;
    return j;
}

ObstructionCertificate certificate_from_json(const Json& j) {
    if (j.value("format", "") != "hopford-certificate-v1")
        throw std::invalid_argument("certificate_from_json: unknown format");
    ObstructionCertificate fresh = obstruction_certificate(
        j.at("p").get<unsigned>(), j.at("q").get<unsigned>(), j.at("r").get<unsigned>(),
        j.at("zeta_exp").get<unsigned>());
    // every stored step and payload must match the recomputed chain exactly
    Json expect = certificate_to_json(fresh);
    if (expect != j)
        throw std::invalid_argument(
            "certificate_from_json: stored certificate does not match the recomputed chain");
    return fresh;
}

WeakOrderResult weak_order(HopfPtr hp, const FrobeniusData& fd, const WedderburnData& wd) {
    const HopfAlgebraData& h = *hp;
    WeakOrderResult out;
    out.kaplansky = kaplansky_check(wd);
    if (!out.kaplansky.verdict) {
        out.ok = false;
        out.refusal =
            "a block dimension does not divide dim H; no integral weak order can contain the "
            "Casimir";
        return out;
    }
    // Y = Z-span of the matrix units, as a lattice over Z
    RingSpec zring{1, 1};
    std::vector<Vec> units_flat;
    for (const auto& block : wd.units)
        for (const Vec& u : block) units_flat.push_back(u);
    Lattice y = lattice_span(h.field, h.dim, zring, units_flat);
    out.unit_member = lattice_member(y, h.unit);
    out.closed_under_multiplication = true;
    for (const Vec& u : units_flat)
        for (const Vec& v : units_flat) {
            if (!lattice_member(y, mult_elem(h, u, v))) {
                out.closed_under_multiplication = false;
                break;
            }
        }
    // Casimir coordinates over the unit tensor basis must be integers
    Mat cd = tensor_in_unit_basis(h, fd.casimir, wd);
    out.casimir_integral = true;
    std::vector<Rational> values;
    for (unsigned i = 0; i < cd.rows(); ++i)
        for (unsigned j = 0; j < cd.cols(); ++j) {
            const CycNumber& c = cd.at(i, j);
            if (!c.is_rational() || !rat_is_integer(c.rational_part())) {
                out.casimir_integral = false;
            } else {
                Rational v = c.rational_part();
                if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
            }
        }
    std::sort(values.begin(), values.end(), [](const Rational& x, const Rational& yv) { return x > yv; });
    out.coefficient_values = values;
    out.ok = out.unit_member && out.closed_under_multiplication && out.casimir_integral;
    if (!out.ok && out.refusal.empty()) out.refusal = "integrality verification failed";
    return out;
}

}  // namespace hopford
