#include "hopford/frobenius.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace hopford {

namespace {

// Intersect the current candidate row space with the kernel of the linear
// condition rows |-> cond(row). cond maps a vector to a vector.
std::vector<Vec> refine_space(const FieldPtr& field, const std::vector<Vec>& space,
                              const std::function<Vec(const Vec&)>& cond) {
    if (space.empty()) return space;
    const unsigned k = static_cast<unsigned>(space.size());
    const unsigned m = static_cast<unsigned>(cond(space[0]).size());
    Mat a(m, k, field);
    for (unsigned j = 0; j < k; ++j) {
        Vec img = cond(space[j]);
        for (unsigned i = 0; i < m; ++i) a.at(i, j) = img[i];
    }
    std::vector<Vec> combos = nullspace(a);
    std::vector<Vec> out;
    for (const Vec& c : combos) {
        Vec v(space[0].size(), field->zero());
        for (unsigned j = 0; j < k; ++j) {
            if (c[j].is_zero()) continue;
            for (size_t t = 0; t < v.size(); ++t) v[t] += c[j] * space[j][t];
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

FrobeniusData compute_integrals(HopfPtr hp, bool swapped_sides) {
    const HopfAlgebraData& h = *hp;
    if (h.algebra_only) throw std::invalid_argument("compute_integrals: input has no coalgebra data");
    const FieldPtr& field = h.field;

    // integral in H: x Lambda = eps(x) Lambda for all basis x (left), or
    // Lambda x = eps(x) Lambda (right, swapped)
    std::vector<Vec> space;
    for (uint32_t i = 0; i < h.dim; ++i) space.push_back(basis_vec(h, i));
    for (uint32_t i = 0; i < h.dim; ++i) {
        Vec xi = basis_vec(h, i);
        auto cond = [&](const Vec& v) {
            Vec prod = swapped_sides ? mult_elem(h, v, xi) : mult_elem(h, xi, v);
            for (uint32_t t = 0; t < h.dim; ++t) prod[t] -= h.counit[i] * v[t];
            return prod;
        };
        space = refine_space(field, space, cond);
        if (space.empty()) break;
    }
    if (space.size() != 1)
        throw std::domain_error("compute_integrals: integral space dimension is " +
                                std::to_string(space.size()));
    Vec lambda_raw = space[0];
    CycNumber eps_l = counit_elem(h, lambda_raw);
    if (eps_l.is_zero())
        throw std::domain_error("compute_integrals: eps(Lambda) = 0, the algebra is not semisimple");
    // the chosen integral is two-sided in this (unimodular) setting
    for (uint32_t i = 0; i < h.dim; ++i) {
        Vec xi = basis_vec(h, i);
        Vec other = swapped_sides ? mult_elem(h, xi, lambda_raw) : mult_elem(h, lambda_raw, xi);
        Vec expect = lambda_raw;
        for (auto& c : expect) c = c * h.counit[i];
        if (other != expect)
            throw std::domain_error("compute_integrals: integral is not two-sided");
    }
    // normalize eps(Lambda) = dim H
    CycNumber target = field->from_rational(make_rational(long(h.dim)));
    CycNumber scale_c = target / eps_l;
    FrobeniusData out;
    out.parent = hp;
    out.swapped = swapped_sides;
    out.integral.assign(h.dim, field->zero());
    for (uint32_t i = 0; i < h.dim; ++i) out.integral[i] = lambda_raw[i] * scale_c;

    // integral in the dual: right when not swapped (sum lambda(x_(1)) x_(2)
    // = lambda(x) 1), left when swapped (sum x_(1) lambda(x_(2)) = lambda(x) 1)
    {
        std::vector<Vec> dspace;
        for (uint32_t i = 0; i < h.dim; ++i) dspace.push_back(basis_vec(h, i));
        for (uint32_t i = 0; i < h.dim; ++i) {
            auto cond = [&](const Vec& lam) {
                Vec acc(h.dim, field->zero());
                h.for_comult(i, [&](uint32_t a, uint32_t b, const CycNumber& c) {
                    if (!swapped_sides) {
                        if (!lam[a].is_zero()) {
                            CycNumber f = lam[a] * c;
                            acc[b] += f;
                        }
                    } else {
                        if (!lam[b].is_zero()) {
                            CycNumber f = lam[b] * c;
                            acc[a] += f;
                        }
                    }
                });
                for (uint32_t t = 0; t < h.dim; ++t) acc[t] -= lam[i] * h.unit[t];
                return acc;
            };
            dspace = refine_space(field, dspace, cond);
            if (dspace.empty()) break;
        }
        if (dspace.size() != 1)
            throw std::domain_error("compute_integrals: dual integral space dimension is " +
                                    std::to_string(dspace.size()));
        Vec lam = dspace[0];
        // normalize lambda(Lambda) = 1
        CycNumber pairing = field->zero();
        for (uint32_t i = 0; i < h.dim; ++i) pairing += lam[i] * out.integral[i];
        if (pairing.is_zero())
            throw std::domain_error("compute_integrals: lambda(Lambda) = 0");
        CycNumber inv = pairing.inverse();
        out.dual_integral.assign(h.dim, field->zero());
        for (uint32_t i = 0; i < h.dim; ++i) out.dual_integral[i] = lam[i] * inv;
    }

    // Casimir: Lambda_(1) (x) S(Lambda_(2)), or S(Gamma_(1)) (x) Gamma_(2)
    SparseMulti delta = comult_elem(h, out.integral);
    out.casimir = antipode_leg(h, delta, swapped_sides ? 0 : 1);
    return out;
}

WedderburnData wedderburn(HopfPtr hp) {
    const HopfAlgebraData& h = *hp;
    if (!h.group || (h.provenance.kind != Provenance::Kind::GroupAlgebra &&
                     h.provenance.kind != Provenance::Kind::TwistedGroupAlgebra))
        throw std::invalid_argument(
            "wedderburn: irreducible representations are available only for group-algebra-backed "
            "inputs");
    const FiniteGroup& g = *h.group;
    std::vector<Irrep> irr = all_irreps(g, h.field);

    WedderburnData out;
    out.parent = hp;
    const Rational inv_g = make_rational(1, long(g.order));
    for (const Irrep& rho : irr) {
        const unsigned n = rho.dim;
        out.dims.push_back(n);
        Vec e(h.dim, h.field->zero());
        for (uint32_t x = 0; x < g.order; ++x) {
            CycNumber c = rho.character[g.inv(x)];
            c.scale(inv_g * Rational(long(n)));
            e[x] += c;
        }
        out.idempotents.push_back(std::move(e));
        std::vector<Vec> block_units;
        for (unsigned k = 0; k < n; ++k)
            for (unsigned l = 0; l < n; ++l) {
                Vec d(h.dim, h.field->zero());
                for (uint32_t x = 0; x < g.order; ++x) {
                    CycNumber c = rho.mat(g.inv(x)).at(l, k);
                    if (c.is_zero()) continue;
                    c.scale(inv_g * Rational(long(n)));
                    d[x] += c;
                }
                block_units.push_back(std::move(d));
            }
        out.units.push_back(std::move(block_units));
        out.characters.push_back(rho.character);
    }

    // exact verification of all structural relations
    const unsigned s = static_cast<unsigned>(out.dims.size());
    Vec total(h.dim, h.field->zero());
    for (unsigned i = 0; i < s; ++i)
        for (uint32_t t = 0; t < h.dim; ++t) total[t] += out.idempotents[i][t];
    if (total != h.unit) throw std::logic_error("wedderburn: idempotents do not sum to 1");
    for (unsigned i = 0; i < s; ++i) {
        for (uint32_t j = 0; j < h.dim; ++j) {
            Vec xj = basis_vec(h, j);
            if (mult_elem(h, out.idempotents[i], xj) != mult_elem(h, xj, out.idempotents[i]))
                throw std::logic_error("wedderburn: idempotent is not central");
        }
        // diagonal units sum to the idempotent
        Vec diag(h.dim, h.field->zero());
        for (unsigned k = 0; k < out.dims[i]; ++k) {
            const Vec& dkk = out.units[i][k * out.dims[i] + k];
            for (uint32_t t = 0; t < h.dim; ++t) diag[t] += dkk[t];
        }
        if (diag != out.idempotents[i])
            throw std::logic_error("wedderburn: diagonal units do not sum to the idempotent");
    }
    for (unsigned i = 0; i < s; ++i)
        for (unsigned j = 0; j < s; ++j)
            for (unsigned a = 0; a < out.dims[i] * out.dims[i]; ++a)
                for (unsigned b = 0; b < out.dims[j] * out.dims[j]; ++b) {
                    unsigned k = a / out.dims[i], l = a % out.dims[i];
                    unsigned u = b / out.dims[j], v = b % out.dims[j];
                    Vec prod = mult_elem(h, out.units[i][a], out.units[j][b]);
                    Vec expect(h.dim, h.field->zero());
                    if (i == j && l == u) expect = out.units[i][k * out.dims[i] + v];
                    if (prod != expect)
                        throw std::logic_error("wedderburn: matrix unit relations fail");
                }
    unsigned long sum_sq = 0;
    for (unsigned n : out.dims) sum_sq += static_cast<unsigned long>(n) * n;
    if (sum_sq != h.dim) throw std::logic_error("wedderburn: dimension count fails");
    return out;
}

bool check_casimir_commutation(const HopfAlgebraData& h, const SparseMulti& casimir,
                               std::string* witness) {
    for (uint32_t g = 0; g < h.dim; ++g)
        for (uint32_t x = 0; x < h.dim; ++x) {
            SparseMulti gh = tensor_of(h, basis_vec(h, g), basis_vec(h, x));
            SparseMulti hg = tensor_of(h, basis_vec(h, x), basis_vec(h, g));
            if (!(mult2(h, gh, casimir) == mult2(h, casimir, hg))) {
                if (witness) {
                    std::ostringstream os;
                    os << "(g,h) = (" << h.labels[g] << ", " << h.labels[x] << ")";
                    *witness = os.str();
                }
                return false;
            }
        }
    return true;
}

Mat tensor_in_unit_basis(const HopfAlgebraData& h, const SparseMulti& casimir,
                         const WedderburnData& wd) {
    const unsigned d = h.dim;
    Mat w(d, d, h.field);
    unsigned col = 0;
    for (const auto& block : wd.units)
        for (const Vec& u : block) {
            for (unsigned i = 0; i < d; ++i) w.at(i, col) = u[i];
            ++col;
        }
    if (col != d) throw std::invalid_argument("tensor_in_unit_basis: units do not form a basis");
    Mat winv = inverse(w);
    // M1 = Winv * C (C as a d x d matrix), then Cd = M1 * Winv^T
    Mat m1(d, d, h.field);
    for (const auto& [key, c] : casimir.terms()) {
        uint32_t i = uint32_t(key / d), j = uint32_t(key % d);
        for (unsigned r = 0; r < d; ++r) {
            if (winv.at(r, i).is_zero()) continue;
            m1.at(r, j) += winv.at(r, i) * c;
        }
    }
    Mat cd(d, d, h.field);
    for (unsigned r = 0; r < d; ++r)
        for (unsigned j = 0; j < d; ++j) {
            if (m1.at(r, j).is_zero()) continue;
            for (unsigned s2 = 0; s2 < d; ++s2) {
                if (winv.at(s2, j).is_zero()) continue;
                cd.at(r, s2) += m1.at(r, j) * winv.at(s2, j);
            }
        }
    return cd;
}

CasimirDecomposition casimir_decomposition(const HopfAlgebraData& h, const FrobeniusData& fd,
                                           const WedderburnData& wd, bool check_squares) {
    CasimirDecomposition out;
    std::string witness;
    if (!check_casimir_commutation(h, fd.casimir, &witness)) {
        out.valid = false;
        out.detail = "commutation (g (x) h) C = C (h (x) g) fails at " + witness;
        return out;
    }
    CycNumber eps_lambda = counit_elem(h, fd.integral);
    if (!eps_lambda.is_rational()) {
        out.valid = false;
        out.detail = "eps(Lambda) is not rational";
        return out;
    }
    const Rational eps_r = eps_lambda.rational_part();

    Mat cd = tensor_in_unit_basis(h, fd.casimir, wd);
    // block offsets in the flattened unit order
    std::vector<unsigned> offset{0};
    for (unsigned n : wd.dims) offset.push_back(offset.back() + n * n);
    const unsigned s = static_cast<unsigned>(wd.dims.size());
    for (unsigned i = 0; i < s; ++i) out.betas.push_back(eps_r / Rational(long(wd.dims[i])));

    for (unsigned r = 0; r < h.dim; ++r)
        for (unsigned c = 0; c < h.dim; ++c) {
            // locate blocks
            unsigned bi = 0, bj = 0;
            while (r >= offset[bi + 1]) ++bi;
            while (c >= offset[bj + 1]) ++bj;
            unsigned a = r - offset[bi], b = c - offset[bj];
            unsigned k = a / wd.dims[bi], l = a % wd.dims[bi];
            unsigned u = b / wd.dims[bj], v = b % wd.dims[bj];
            bool expect_beta = (bi == bj && u == l && v == k);
            const CycNumber& got = cd.at(r, c);
            if (expect_beta) {
                if (!got.is_rational() || got.rational_part() != out.betas[bi]) {
                    out.valid = false;
                    out.detail = "coefficient at a transposed unit pair is not eps(Lambda)/n_i";
                    return out;
                }
            } else if (!got.is_zero()) {
                out.valid = false;
                out.detail = "nonzero coefficient outside the transposed-unit pairs";
                return out;
            }
        }

    if (check_squares) {
        for (unsigned i = 0; i < s; ++i) {
            SparseMulti fii = tensor_of(h, wd.idempotents[i], wd.idempotents[i]);
            SparseMulti di = mult2(h, fii, fd.casimir);
            SparseMulti di2 = mult2(h, di, di);
            SparseMulti expect = fii;
            expect.scale(out.betas[i] * out.betas[i]);
            if (!(di2 == expect)) {
                out.valid = false;
                out.detail = "(f_ii C)^2 != beta_i^2 (e_i (x) e_i) at block " + std::to_string(i);
                return out;
            }
        }
    }

    // reconstruction: sum_i beta_i sum_{k,l} d_kl (x) d_lk equals C
    SparseMulti rebuilt(h.dim, 2);
    for (unsigned i = 0; i < s; ++i) {
        const unsigned n = wd.dims[i];
        for (unsigned k = 0; k < n; ++k)
            for (unsigned l = 0; l < n; ++l) {
                const Vec& dkl = wd.units[i][k * n + l];
                const Vec& dlk = wd.units[i][l * n + k];
                for (uint32_t x = 0; x < h.dim; ++x) {
                    if (dkl[x].is_zero()) continue;
                    for (uint32_t y = 0; y < h.dim; ++y) {
                        if (dlk[y].is_zero()) continue;
                        CycNumber c = dkl[x] * dlk[y];
                        c.scale(out.betas[i]);
                        rebuilt.add_term(uint64_t(x) * h.dim + y, c);
                    }
                }
            }
    }
    rebuilt.flush();
    if (!(rebuilt == fd.casimir)) {
        out.valid = false;
        out.detail = "reconstruction from blocks does not equal the Casimir";
        return out;
    }
    out.valid = true;
    return out;
}

CentralElementResult central_element_action(const HopfAlgebraData& h, const FrobeniusData& fd,
                                            const WedderburnData& wd, unsigned char_index) {
    CentralElementResult out;
    out.block = char_index;
    const Vec& psi = wd.characters[char_index];
    const unsigned n = wd.dims[char_index];

    // E = Lambda_(1) psi(S(Lambda_(2)))
    SparseMulti delta = comult_elem(h, fd.integral);
    SparseMulti s2 = antipode_leg(h, delta, 1);
    SparseMulti e1 = eval_leg(h, s2, 1, psi);
    out.element = dense_of(h, e1);

    out.central = true;
    for (uint32_t i = 0; i < h.dim && out.central; ++i) {
        Vec xi = basis_vec(h, i);
        out.central = mult_elem(h, xi, out.element) == mult_elem(h, out.element, xi);
    }

    out.alpha = make_rational(long(h.dim), long(n));
    out.alpha_algebraic_integer = rat_is_integer(out.alpha);
    out.block_action_ok = true;
    const CycNumber alpha_c = h.field->from_rational(out.alpha);
    for (unsigned a = 0; a < n * n && out.block_action_ok; ++a) {
        Vec prod = mult_elem(h, out.element, wd.units[char_index][a]);
        Vec expect = wd.units[char_index][a];
        for (auto& c : expect) c = c * alpha_c;
        out.block_action_ok = (prod == expect);
    }
    // cross-check alpha = psi(E)/dim V
    if (out.block_action_ok) {
        CycNumber pe = h.field->zero();
        for (uint32_t i = 0; i < h.dim; ++i) pe += psi[i] * out.element[i];
        CycNumber expect = alpha_c * h.field->from_rational(make_rational(long(n)));
        out.block_action_ok = (pe == expect);
    }
    return out;
}

namespace {

MinPolyResult minpoly_from_powers(const FieldPtr& field, unsigned ambient_dim,
                                  const std::function<Vec(const Vec&)>& step, const Vec& one) {
    EchelonSpan span(ambient_dim, field, true);
    Vec cur = one;
    while (span.add(cur)) cur = step(cur);
    MinPolyResult out;
    out.coeffs = span.dependence();
    out.integer_coeffs = true;
    for (const CycNumber& c : out.coeffs)
        if (!c.is_rational() || !rat_is_integer(c.rational_part())) {
            out.integer_coeffs = false;
            break;
        }
    return out;
}

}  // namespace

MinPolyResult minpoly_element(const HopfAlgebraData& h, const Vec& x) {
    return minpoly_from_powers(
        h.field, h.dim, [&](const Vec& v) { return mult_elem(h, v, x); }, h.unit);
}

MinPolyResult minpoly_tensor(const HopfAlgebraData& h, const SparseMulti& t) {
    if (t.arity() != 2) throw std::invalid_argument("minpoly_tensor: arity 2 expected");
    const size_t dd = size_t(h.dim) * h.dim;
    SparseMulti one2 = tensor_of(h, h.unit, h.unit);
    auto to_vec = [&](const SparseMulti& s) {
        Vec v(dd, h.field->zero());
        for (const auto& [key, c] : s.terms()) v[key] += c;
        return v;
    };
    auto from_vec = [&](const Vec& v) {
        SparseMulti s(h.dim, 2);
        for (size_t i = 0; i < dd; ++i)
            if (!v[i].is_zero()) s.add_term(i, v[i]);
        s.flush();
        return s;
    };
    return minpoly_from_powers(
        h.field, static_cast<unsigned>(dd),
        [&](const Vec& v) { return to_vec(mult2(h, from_vec(v), t)); }, to_vec(one2));
}

KaplanskyReport kaplansky_check(const std::vector<unsigned>& dims, unsigned dim) {
    KaplanskyReport out;
    out.dims = dims;
    out.dim = dim;
    out.verdict = true;
    for (unsigned n : dims) {
        out.remainders.push_back(dim % n);
        if (dim % n != 0) out.verdict = false;
    }
    return out;
}

KaplanskyReport kaplansky_check(const WedderburnData& wd) {
    return kaplansky_check(wd.dims, wd.parent->dim);
}

SyntheticSemisimple matrix_algebra_direct_sum(const std::vector<unsigned>& dims, FieldPtr field) {
    unsigned dim = 0;
    for (unsigned n : dims) dim += n * n;
    auto h = std::make_shared<HopfAlgebraData>();
    h->field = field;
    h->dim = dim;
    h->algebra_only = true;
    h->mult.assign(size_t(dim) * dim, {});
    h->unit.assign(dim, field->zero());
    h->counit.assign(dim, field->zero());
    std::vector<unsigned> offset{0};
    for (unsigned n : dims) offset.push_back(offset.back() + n * n);
    for (size_t b = 0; b < dims.size(); ++b) {
        const unsigned n = dims[b];
        for (unsigned k = 0; k < n; ++k)
            for (unsigned l = 0; l < n; ++l) {
                h->labels.push_back("E" + std::to_string(b) + "_" + std::to_string(k) + "," +
                                    std::to_string(l));
                if (k == l) h->unit[offset[b] + k * n + l] = field->one();
                for (unsigned u = 0; u < n; ++u)
                    for (unsigned v = 0; v < n; ++v)
                        if (l == u)
                            h->mult[size_t(offset[b] + k * n + l) * dim + (offset[b] + u * n + v)] = {
                                Term{offset[b] + k * n + v, field->one()}};
            }
    }
    h->cache_one();

    SyntheticSemisimple out;
    out.algebra = h;
    out.wedderburn.parent = h;
    out.wedderburn.dims = dims;
    for (size_t b = 0; b < dims.size(); ++b) {
        const unsigned n = dims[b];
        Vec e(dim, field->zero());
        for (unsigned k = 0; k < n; ++k) e[offset[b] + k * n + k] = field->one();
        out.wedderburn.idempotents.push_back(std::move(e));
        std::vector<Vec> block;
        for (unsigned a = 0; a < n * n; ++a) {
            Vec d(dim, field->zero());
            d[offset[b] + a] = field->one();
            block.push_back(std::move(d));
        }
        out.wedderburn.units.push_back(std::move(block));
        Vec chi(dim, field->zero());
        for (unsigned k = 0; k < n; ++k) chi[offset[b] + k * n + k] = field->one();
        out.wedderburn.characters.push_back(std::move(chi));
    }
    // Casimir from the block decomposition with eps(Lambda) = dim
    SparseMulti c(dim, 2);
    for (size_t b = 0; b < dims.size(); ++b) {
        const unsigned n = dims[b];
        Rational beta = make_rational(long(dim), long(n));
        for (unsigned k = 0; k < n; ++k)
            for (unsigned l = 0; l < n; ++l) {
                CycNumber cf = field->from_rational(beta);
                c.add_term(uint64_t(offset[b] + k * n + l) * dim + (offset[b] + l * n + k), cf);
            }
    }
    c.flush();
    out.casimir = c;
    return out;
}

}  // namespace hopford
