#include "hopford/hopf.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hopford/parallel.hpp"

namespace hopford {

namespace {

// out += a * b without exposing temporaries at call sites.
inline void acc_mul(CycNumber& out, const CycNumber& a, const CycNumber& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.is_rational()) {
        out.add_scaled(b, a.rational_part());
        return;
    }
    if (b.is_rational()) {
        out.add_scaled(a, b.rational_part());
        return;
    }
    out += a * b;
}

std::string term_string(const HopfAlgebraData& h, const SparseMulti& t) {
    std::ostringstream os;
    size_t shown = 0;
    for (const auto& [key, c] : t.terms()) {
        if (shown++ > 6) {
            os << " + ...";
            break;
        }
        if (shown > 1) os << " + ";
        os << "(" << c.to_string() << ")*[";
        auto legs = t.unpack(key);
        for (size_t i = 0; i < legs.size(); ++i) os << (i ? "," : "") << h.labels[legs[i]];
        os << "]";
    }
    if (t.terms().empty()) os << "0";
    return os.str();
}

}  // namespace

// ---- SparseMulti ----

uint64_t SparseMulti::pack(const std::vector<uint32_t>& legs) const {
    uint64_t key = 0;
    for (uint32_t l : legs) key = key * dim_ + l;
    return key;
}

std::vector<uint32_t> SparseMulti::unpack(uint64_t key) const {
    std::vector<uint32_t> legs(arity_);
    for (unsigned i = arity_; i-- > 0;) {
        legs[i] = static_cast<uint32_t>(key % dim_);
        key /= dim_;
    }
    return legs;
}

void SparseMulti::add_term(uint64_t key, const CycNumber& c) {
    if (c.is_zero()) return;
    terms_.emplace_back(key, c);
    dirty_ = true;
}

void SparseMulti::flush() {
    if (!dirty_) return;
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<uint64_t, CycNumber>> out;
    out.reserve(terms_.size());
    for (auto& [key, c] : terms_) {
        if (!out.empty() && out.back().first == key)
            out.back().second += c;
        else
            out.emplace_back(key, std::move(c));
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
    dirty_ = false;
}

bool SparseMulti::operator==(const SparseMulti& o) const {
    SparseMulti a = *this, b = o;
    a.flush();
    b.flush();
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

SparseMulti& SparseMulti::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v.scale(c);
    return *this;
}

// ---- construction ----

void HopfAlgebraData::densify_mult() {
    if (!group_mult) return;
    mult.assign(size_t(dim) * dim, {});
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j) mult[size_t(i) * dim + j] = {Term{group->mul(i, j), one_}};
    group_mult = false;
}

void HopfAlgebraData::densify_comult() {
    if (!group_comult) return;
    comult.assign(dim, {});
    for (uint32_t i = 0; i < dim; ++i) comult[i] = {TensorTerm{i, i, one_}};
    group_comult = false;
}

void HopfAlgebraData::densify_antipode() {
    if (!group_antipode) return;
    antipode.assign(dim, {});
    for (uint32_t j = 0; j < dim; ++j) antipode[j] = {Term{group->inv(j), one_}};
    group_antipode = false;
}

HopfPtr group_algebra(FiniteGroup g, FieldPtr field) {
    auto h = std::make_shared<HopfAlgebraData>();
    h->field = field;
    h->dim = g.order;
    h->labels = g.labels;
    h->unit.assign(g.order, field->zero());
    h->unit[g.identity] = field->one();
    h->counit.assign(g.order, field->one());
    h->group_mult = h->group_comult = h->group_antipode = true;
    h->provenance.kind = Provenance::Kind::GroupAlgebra;
    h->provenance.group_spec = g.spec;
    h->group = std::move(g);
    h->cache_one();
    return h;
}

HopfPtr dual_hopf(const HopfAlgebraData& h) {
    if (h.algebra_only) throw std::invalid_argument("dual_hopf: input has no coalgebra data");
    auto d = std::make_shared<HopfAlgebraData>();
    const uint32_t n = h.dim;
    d->field = h.field;
    d->dim = n;
    d->labels.reserve(n);
    for (const std::string& l : h.labels) d->labels.push_back("th(" + l + ")");
    // multiplication of functionals from the comultiplication of h
    d->mult.assign(size_t(n) * n, {});
    for (uint32_t k = 0; k < n; ++k)
        h.for_comult(k, [&](uint32_t a, uint32_t b, const CycNumber& c) {
            d->mult[size_t(a) * n + b].push_back(Term{k, c});
        });
    d->unit = h.counit;
    // comultiplication of functionals from the multiplication of h
    d->comult.assign(n, {});
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            h.for_mult(i, j, [&](uint32_t k, const CycNumber& c) {
                d->comult[k].push_back(TensorTerm{i, j, c});
            });
    d->counit = h.unit;
    d->antipode.assign(n, {});
    for (uint32_t i = 0; i < n; ++i)
        h.for_antipode(i, [&](uint32_t row, const CycNumber& c) {
            d->antipode[row].push_back(Term{i, c});
        });
    d->provenance.kind = h.provenance.kind == Provenance::Kind::GroupAlgebra
                             ? Provenance::Kind::DualGroupAlgebra
                             : Provenance::Kind::Custom;
    d->provenance.group_spec = h.provenance.group_spec;
    d->cache_one();
    return d;
}

// ---- element arithmetic ----

Vec basis_vec(const HopfAlgebraData& h, uint32_t i) {
    Vec v(h.dim, h.field->zero());
    v[i] = h.field->one();
    return v;
}

Vec mult_elem(const HopfAlgebraData& h, const Vec& x, const Vec& y) {
    Vec out(h.dim, h.field->zero());
    for (uint32_t i = 0; i < h.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (uint32_t j = 0; j < h.dim; ++j) {
            if (y[j].is_zero()) continue;
            CycNumber f = x[i] * y[j];
            h.for_mult(i, j, [&](uint32_t k, const CycNumber& c) { acc_mul(out[k], f, c); });
        }
    }
    return out;
}

Vec antipode_elem(const HopfAlgebraData& h, const Vec& x) {
    Vec out(h.dim, h.field->zero());
    for (uint32_t j = 0; j < h.dim; ++j) {
        if (x[j].is_zero()) continue;
        h.for_antipode(j, [&](uint32_t i, const CycNumber& c) { acc_mul(out[i], x[j], c); });
    }
    return out;
}

CycNumber counit_elem(const HopfAlgebraData& h, const Vec& x) {
    CycNumber out = h.field->zero();
    for (uint32_t i = 0; i < h.dim; ++i) acc_mul(out, x[i], h.counit[i]);
    return out;
}

SparseMulti comult_elem(const HopfAlgebraData& h, const Vec& x) {
    SparseMulti out(h.dim, 2);
    for (uint32_t i = 0; i < h.dim; ++i) {
        if (x[i].is_zero()) continue;
        h.for_comult(i, [&](uint32_t a, uint32_t b, const CycNumber& c) {
            out.add_term(uint64_t(a) * h.dim + b, x[i] * c);
        });
    }
    out.flush();
    return out;
}

SparseMulti tensor_of(const HopfAlgebraData& h, const Vec& x, const Vec& y) {
    SparseMulti out(h.dim, 2);
    for (uint32_t i = 0; i < h.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (uint32_t j = 0; j < h.dim; ++j) {
            if (y[j].is_zero()) continue;
            out.add_term(uint64_t(i) * h.dim + j, x[i] * y[j]);
        }
    }
    out.flush();
    return out;
}

Vec dense_of(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg_count) {
    if (t.arity() != leg_count) throw std::invalid_argument("dense_of: arity mismatch");
    size_t n = 1;
    for (unsigned i = 0; i < leg_count; ++i) n *= h.dim;
    Vec out(n, h.field->zero());
    SparseMulti tt = t;
    tt.flush();
    for (const auto& [key, c] : tt.terms()) out[key] += c;
    return out;
}

SparseMulti mult2(const HopfAlgebraData& h, const SparseMulti& x, const SparseMulti& y) {
    if (x.arity() != y.arity()) throw std::invalid_argument("mult2: arity mismatch");
    const unsigned ar = x.arity();
    SparseMulti out(h.dim, ar);
    std::vector<uint32_t> legs(ar);
    for (const auto& [kx, cx] : x.terms()) {
        auto lx = x.unpack(kx);
        for (const auto& [ky, cy] : y.terms()) {
            auto ly = y.unpack(ky);
            CycNumber f = cx * cy;
            if (f.is_zero()) continue;
            // componentwise product of basis legs; expand each leg's product
            std::vector<std::pair<uint64_t, CycNumber>> partial{{0, f}};
            for (unsigned t = 0; t < ar; ++t) {
                std::vector<std::pair<uint64_t, CycNumber>> next;
                for (const auto& [keyp, cp] : partial)
                    h.for_mult(lx[t], ly[t], [&](uint32_t k, const CycNumber& c) {
                        CycNumber nc = cp * c;
                        if (!nc.is_zero()) next.emplace_back(keyp * h.dim + k, nc);
                    });
                partial = std::move(next);
            }
            for (auto& [keyp, cp] : partial) out.add_term(keyp, cp);
        }
    }
    out.flush();
    return out;
}

SparseMulti eval_leg(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg, const Vec& covector) {
    if (leg >= t.arity()) throw std::invalid_argument("eval_leg: leg out of range");
    SparseMulti out(h.dim, t.arity() - 1);
    for (const auto& [key, c] : t.terms()) {
        auto legs = t.unpack(key);
        const CycNumber& s = covector[legs[leg]];
        if (s.is_zero()) continue;
        legs.erase(legs.begin() + leg);
        out.add_term(out.pack(legs), c * s);
    }
    out.flush();
    return out;
}

SparseMulti antipode_leg(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg) {
    if (leg >= t.arity()) throw std::invalid_argument("antipode_leg: leg out of range");
    SparseMulti out(h.dim, t.arity());
    for (const auto& [key, c] : t.terms()) {
        auto legs = t.unpack(key);
        uint32_t old = legs[leg];
        h.for_antipode(old, [&](uint32_t i, const CycNumber& sc) {
            legs[leg] = i;
            out.add_term(out.pack(legs), c * sc);
        });
    }
    out.flush();
    return out;
}

SparseMulti comult_leg(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg) {
    if (leg >= t.arity()) throw std::invalid_argument("comult_leg: leg out of range");
    SparseMulti out(h.dim, t.arity() + 1);
    for (const auto& [key, c] : t.terms()) {
        auto legs = t.unpack(key);
        uint32_t old = legs[leg];
        std::vector<uint32_t> nl(legs.size() + 1);
        for (unsigned i = 0; i < legs.size(); ++i) nl[i < leg ? i : i + 1] = legs[i];
        h.for_comult(old, [&](uint32_t a, uint32_t b, const CycNumber& cc) {
            nl[leg] = a;
            nl[leg + 1] = b;
            out.add_term(out.pack(nl), c * cc);
        });
    }
    out.flush();
    return out;
}

SparseMulti mul_legs(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg) {
    if (leg + 1 >= t.arity()) throw std::invalid_argument("mul_legs: legs out of range");
    SparseMulti out(h.dim, t.arity() - 1);
    for (const auto& [key, c] : t.terms()) {
        auto legs = t.unpack(key);
        uint32_t a = legs[leg], b = legs[leg + 1];
        std::vector<uint32_t> nl = legs;
        nl.erase(nl.begin() + leg + 1);
        h.for_mult(a, b, [&](uint32_t k, const CycNumber& cc) {
            nl[leg] = k;
            out.add_term(out.pack(nl), c * cc);
        });
    }
    out.flush();
    return out;
}

SparseMulti swap_legs(const HopfAlgebraData& h, const SparseMulti& t, unsigned l1, unsigned l2) {
    (void)h;
    if (l1 >= t.arity() || l2 >= t.arity()) throw std::invalid_argument("swap_legs: leg out of range");
    SparseMulti out(t.dim(), t.arity());
    for (const auto& [key, c] : t.terms()) {
        auto legs = t.unpack(key);
        std::swap(legs[l1], legs[l2]);
        out.add_term(out.pack(legs), c);
    }
    out.flush();
    return out;
}

SparseMulti apply_recipe(const HopfAlgebraData& h, const std::vector<Vec>& inputs,
                         const std::vector<RecipeStep>& steps) {
    if (inputs.empty()) throw std::invalid_argument("apply_recipe: no inputs");
    SparseMulti cur(h.dim, 1);
    for (uint32_t i = 0; i < h.dim; ++i) cur.add_term(i, inputs[0][i]);
    cur.flush();
    for (size_t m = 1; m < inputs.size(); ++m) {
        SparseMulti next(h.dim, cur.arity() + 1);
        for (const auto& [key, c] : cur.terms())
            for (uint32_t i = 0; i < h.dim; ++i) {
                if (inputs[m][i].is_zero()) continue;
                next.add_term(key * h.dim + i, c * inputs[m][i]);
            }
        next.flush();
        cur = std::move(next);
    }
    for (const RecipeStep& s : steps) {
        switch (s.kind) {
            case RecipeStep::Kind::Comult: cur = comult_leg(h, cur, s.leg); break;
            case RecipeStep::Kind::Antipode: cur = antipode_leg(h, cur, s.leg); break;
            case RecipeStep::Kind::Eval: cur = eval_leg(h, cur, s.leg, s.covector); break;
            case RecipeStep::Kind::MulLegs: cur = mul_legs(h, cur, s.leg); break;
            case RecipeStep::Kind::Swap: cur = swap_legs(h, cur, s.leg, s.leg2); break;
        }
    }
    return cur;
}

// ---- verification ----

bool AxiomReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult* AxiomReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

// Product of two basis elements as a flushed arity-1 sparse vector.
SparseMulti basis_product(const HopfAlgebraData& h, uint32_t i, uint32_t j) {
    SparseMulti out(h.dim, 1);
    h.for_mult(i, j, [&](uint32_t k, const CycNumber& c) { out.add_term(k, c); });
    out.flush();
    return out;
}

bool check_assoc_triple(const HopfAlgebraData& h, uint32_t a, uint32_t b, uint32_t c,
                        std::string* witness) {
    SparseMulti lhs(h.dim, 1), rhs(h.dim, 1);
    h.for_mult(a, b, [&](uint32_t u, const CycNumber& cu) {
        h.for_mult(u, c, [&](uint32_t k, const CycNumber& ck) { lhs.add_term(k, cu * ck); });
    });
    h.for_mult(b, c, [&](uint32_t u, const CycNumber& cu) {
        h.for_mult(a, u, [&](uint32_t k, const CycNumber& ck) { rhs.add_term(k, cu * ck); });
    });
    lhs.flush();
    rhs.flush();
    if (lhs == rhs) return true;
    if (witness) {
        std::ostringstream os;
        os << "triple (" << h.labels[a] << ", " << h.labels[b] << ", " << h.labels[c]
           << "): (xy)z = " << term_string(h, lhs) << " but x(yz) = " << term_string(h, rhs);
        *witness = os.str();
    }
    return false;
}

bool check_comult_pair(const HopfAlgebraData& h, uint32_t i, uint32_t j, std::string* witness) {
    SparseMulti lhs(h.dim, 2);
    h.for_mult(i, j, [&](uint32_t k, const CycNumber& ck) {
        h.for_comult(k, [&](uint32_t a, uint32_t b, const CycNumber& c) {
            lhs.add_term(uint64_t(a) * h.dim + b, ck * c);
        });
    });
    lhs.flush();
    SparseMulti di(h.dim, 2), dj(h.dim, 2);
    h.for_comult(i, [&](uint32_t a, uint32_t b, const CycNumber& c) {
        di.add_term(uint64_t(a) * h.dim + b, c);
    });
    h.for_comult(j, [&](uint32_t a, uint32_t b, const CycNumber& c) {
        dj.add_term(uint64_t(a) * h.dim + b, c);
    });
    di.flush();
    dj.flush();
    SparseMulti rhs = mult2(h, di, dj);
    if (lhs == rhs) return true;
    if (witness) {
        std::ostringstream os;
        os << "pair (" << h.labels[i] << ", " << h.labels[j] << "): Delta(xy) = " << term_string(h, lhs)
           << " but Delta(x)Delta(y) = " << term_string(h, rhs);
        *witness = os.str();
    }
    return false;
}

}  // namespace

AxiomReport verify_axioms(const HopfAlgebraData& h, const VerifyOptions& opts) {
    AxiomReport rep;
    rep.seed = opts.seed;
    const uint32_t d = h.dim;
    const bool exhaustive = d <= opts.exhaustive_limit;
    rep.samples = exhaustive ? 0 : opts.samples;
    const std::string pair_mode = exhaustive ? "exhaustive" : "sampled";

    auto add = [&](std::string name, bool pass, std::string mode, std::string witness) {
        rep.checks.push_back(CheckResult{std::move(name), pass, std::move(mode), std::move(witness)});
    };

    // associativity over triples
    {
        bool pass = true;
        std::string witness;
        if (exhaustive) {
            for (uint32_t a = 0; a < d && pass; ++a)
                for (uint32_t b = 0; b < d && pass; ++b)
                    for (uint32_t c = 0; c < d && pass; ++c)
                        pass = check_assoc_triple(h, a, b, c, &witness);
        } else {
            std::mt19937_64 rng(opts.seed);
            std::vector<std::array<uint32_t, 3>> triples(opts.samples);
            for (auto& t : triples) t = {uint32_t(rng() % d), uint32_t(rng() % d), uint32_t(rng() % d)};
            std::vector<std::string> fails(triples.size());
            std::vector<char> ok(triples.size(), 1);
            parallel_for(triples.size(), [&](size_t i) {
                ok[i] = check_assoc_triple(h, triples[i][0], triples[i][1], triples[i][2], &fails[i]);
            });
            for (size_t i = 0; i < triples.size() && pass; ++i)
                if (!ok[i]) {
                    pass = false;
                    witness = fails[i];
                }
        }
        add("associativity", pass, pair_mode, witness);
    }

    // unit laws
    {
        bool pass = true;
        std::string witness;
        for (uint32_t i = 0; i < d && pass; ++i) {
            Vec e = basis_vec(h, i);
            if (mult_elem(h, h.unit, e) != e || mult_elem(h, e, h.unit) != e) {
                pass = false;
                witness = "unit law fails at basis " + h.labels[i];
            }
        }
        add("unit", pass, "exhaustive", witness);
    }

    if (!h.algebra_only) {
        // coassociativity, element-wise (always full)
        {
            bool pass = true;
            std::string witness;
            std::vector<char> ok(d, 1);
            parallel_for(d, [&](size_t i) {
                SparseMulti delta(h.dim, 2);
                h.for_comult(uint32_t(i), [&](uint32_t a, uint32_t b, const CycNumber& c) {
                    delta.add_term(uint64_t(a) * h.dim + b, c);
                });
                delta.flush();
                SparseMulti lhs = comult_leg(h, delta, 0);
                SparseMulti rhs = comult_leg(h, delta, 1);
                ok[i] = (lhs == rhs);
            });
            for (uint32_t i = 0; i < d && pass; ++i)
                if (!ok[i]) {
                    pass = false;
                    witness = "coassociativity fails at basis " + h.labels[i];
                }
            add("coassociativity", pass, "exhaustive", witness);
        }

        // counit laws
        {
            bool pass = true;
            std::string witness;
            for (uint32_t i = 0; i < d && pass; ++i) {
                Vec left(d, h.field->zero()), right(d, h.field->zero());
                h.for_comult(i, [&](uint32_t a, uint32_t b, const CycNumber& c) {
                    acc_mul(left[b], h.counit[a], c);
                    acc_mul(right[a], h.counit[b], c);
                });
                Vec e = basis_vec(h, i);
                if (left != e || right != e) {
                    pass = false;
                    witness = "counit law fails at basis " + h.labels[i];
                }
            }
            add("counit", pass, "exhaustive", witness);
        }

        // comultiplication is an algebra map
        {
            bool pass = true;
            std::string witness;
            if (exhaustive) {
                for (uint32_t i = 0; i < d && pass; ++i)
                    for (uint32_t j = 0; j < d && pass; ++j) pass = check_comult_pair(h, i, j, &witness);
            } else {
                std::mt19937_64 rng(opts.seed ^ 0x434f4d55ull);
                std::vector<std::array<uint32_t, 2>> pairs(opts.samples);
                for (auto& t : pairs) t = {uint32_t(rng() % d), uint32_t(rng() % d)};
                std::vector<std::string> fails(pairs.size());
                std::vector<char> ok(pairs.size(), 1);
                parallel_for(pairs.size(), [&](size_t i) {
                    ok[i] = check_comult_pair(h, pairs[i][0], pairs[i][1], &fails[i]);
                });
                for (size_t i = 0; i < pairs.size() && pass; ++i)
                    if (!ok[i]) {
                        pass = false;
                        witness = fails[i];
                    }
            }
            if (pass) {
                SparseMulti d1 = comult_elem(h, h.unit);
                if (!(d1 == tensor_of(h, h.unit, h.unit))) {
                    pass = false;
                    witness = "Delta(1) != 1 (x) 1";
                }
            }
            add("comult_algebra_map", pass, pair_mode, witness);
        }

        // counit is an algebra map
        {
            bool pass = true;
            std::string witness;
            for (uint32_t i = 0; i < d && pass; ++i)
                for (uint32_t j = 0; j < d && pass; ++j) {
                    CycNumber lhs = h.field->zero();
                    h.for_mult(i, j, [&](uint32_t k, const CycNumber& c) { acc_mul(lhs, h.counit[k], c); });
                    if (lhs != h.counit[i] * h.counit[j]) {
                        pass = false;
                        witness = "counit not multiplicative at (" + h.labels[i] + ", " + h.labels[j] + ")";
                        break;
                    }
                }
            if (pass && !counit_elem(h, h.unit).is_one()) {
                pass = false;
                witness = "counit(1) != 1";
            }
            add("counit_algebra_map", pass, "exhaustive", witness);
        }

        // antipode laws, element-wise
        {
            bool passL = true, passR = true;
            std::string witL, witR;
            for (uint32_t i = 0; i < d; ++i) {
                Vec lhs(d, h.field->zero()), rhs(d, h.field->zero());
                h.for_comult(i, [&](uint32_t a, uint32_t b, const CycNumber& c) {
                    // m(S (x) id): S(x_a) * x_b
                    h.for_antipode(a, [&](uint32_t sa, const CycNumber& cs) {
                        CycNumber f = c * cs;
                        h.for_mult(sa, b, [&](uint32_t k, const CycNumber& cm) { acc_mul(lhs[k], f, cm); });
                    });
                    // m(id (x) S): x_a * S(x_b)
                    h.for_antipode(b, [&](uint32_t sb, const CycNumber& cs) {
                        CycNumber f = c * cs;
                        h.for_mult(a, sb, [&](uint32_t k, const CycNumber& cm) { acc_mul(rhs[k], f, cm); });
                    });
                });
                Vec target = h.unit;
                for (auto& t : target) t = t * h.counit[i];
                if (passL && lhs != target) {
                    passL = false;
                    witL = "left antipode law fails at basis " + h.labels[i];
                }
                if (passR && rhs != target) {
                    passR = false;
                    witR = "right antipode law fails at basis " + h.labels[i];
                }
            }
            add("antipode_left", passL, "exhaustive", witL);
            add("antipode_right", passR, "exhaustive", witR);
        }
    }

    return rep;
}

// ---- subobjects ----

std::vector<Vec> subalgebra_closure(const HopfAlgebraData& h, const std::vector<Vec>& gens) {
    EchelonSpan span(h.dim, h.field);
    span.add(h.unit);
    for (const Vec& g : gens) span.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> rows = span.basis();
        for (const Vec& r : rows)
            for (const Vec& g : gens)
                if (span.add(mult_elem(h, r, g))) grew = true;
    }
    return span.basis();
}

bool is_hopf_subalgebra(const HopfAlgebraData& h, const std::vector<Vec>& basis) {
    EchelonSpan span(h.dim, h.field);
    for (const Vec& b : basis) span.add(b);
    if (!span.contains(h.unit)) return false;
    const auto& rows = span.basis();
    const auto& piv = span.pivots();
    for (const Vec& bvec : rows) {
        if (!span.contains(antipode_elem(h, bvec))) return false;
        // Delta(b) must lie in span (x) span: read candidate coordinates off
        // the pivot entries, rebuild, and compare exactly.
        SparseMulti delta = comult_elem(h, bvec);
        SparseMulti rebuilt(h.dim, 2);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t s = 0; s < rows.size(); ++s) {
                uint64_t key = uint64_t(piv[r]) * h.dim + piv[s];
                const auto& terms = delta.terms();
                auto it = std::lower_bound(terms.begin(), terms.end(), key,
                                           [](const auto& t, uint64_t k) { return t.first < k; });
                if (it == terms.end() || it->first != key || it->second.is_zero()) continue;
                const CycNumber coeff = it->second;
                for (uint32_t u = 0; u < h.dim; ++u) {
                    if (rows[r][u].is_zero()) continue;
                    for (uint32_t v = 0; v < h.dim; ++v) {
                        if (rows[s][v].is_zero()) continue;
                        rebuilt.add_term(uint64_t(u) * h.dim + v, coeff * rows[r][u] * rows[s][v]);
                    }
                }
            }
        rebuilt.flush();
        if (!(rebuilt == delta)) return false;
    }
    return true;
}

HopfPtr sub_hopf_algebra(const HopfAlgebraData& h, const std::vector<Vec>& basis,
                         const std::vector<std::string>& labels) {
    EchelonSpan span(h.dim, h.field);
    for (const Vec& b : basis) span.add(b);
    const std::vector<Vec> rows = span.basis();
    const std::vector<unsigned>& piv = span.pivots();
    const uint32_t k = static_cast<uint32_t>(rows.size());

    auto coords_of = [&](const Vec& v) -> Vec {
        auto c = span.coordinates(v);
        if (!c) throw std::invalid_argument("sub_hopf_algebra: element escapes the subspace");
        return *c;
    };

    auto sub = std::make_shared<HopfAlgebraData>();
    sub->field = h.field;
    sub->dim = k;
    if (!labels.empty()) {
        if (labels.size() != k) throw std::invalid_argument("sub_hopf_algebra: label count mismatch");
        sub->labels = labels;
    } else {
        for (uint32_t i = 0; i < k; ++i) sub->labels.push_back("b" + std::to_string(i));
    }
    sub->unit = coords_of(h.unit);
    sub->mult.assign(size_t(k) * k, {});
    for (uint32_t r = 0; r < k; ++r)
        for (uint32_t s = 0; s < k; ++s) {
            Vec prod = mult_elem(h, rows[r], rows[s]);
            Vec c = coords_of(prod);
            for (uint32_t t = 0; t < k; ++t)
                if (!c[t].is_zero()) sub->mult[size_t(r) * k + s].push_back(Term{t, c[t]});
        }
    sub->counit.assign(k, h.field->zero());
    for (uint32_t r = 0; r < k; ++r) sub->counit[r] = counit_elem(h, rows[r]);
    sub->antipode.assign(k, {});
    for (uint32_t r = 0; r < k; ++r) {
        Vec c = coords_of(antipode_elem(h, rows[r]));
        for (uint32_t t = 0; t < k; ++t)
            if (!c[t].is_zero()) sub->antipode[r].push_back(Term{t, c[t]});
    }
    sub->comult.assign(k, {});
    for (uint32_t r = 0; r < k; ++r) {
        SparseMulti delta = comult_elem(h, rows[r]);
        // coordinates in the basis tensor square via pivot positions
        SparseMulti rebuilt(h.dim, 2);
        for (uint32_t u = 0; u < k; ++u)
            for (uint32_t v = 0; v < k; ++v) {
                uint64_t key = uint64_t(piv[u]) * h.dim + piv[v];
                const auto& terms = delta.terms();
                auto it = std::lower_bound(terms.begin(), terms.end(), key,
                                           [](const auto& t, uint64_t kk) { return t.first < kk; });
                if (it == terms.end() || it->first != key || it->second.is_zero()) continue;
                sub->comult[r].push_back(TensorTerm{u, v, it->second});
                for (uint32_t a = 0; a < h.dim; ++a) {
                    if (rows[u][a].is_zero()) continue;
                    for (uint32_t b = 0; b < h.dim; ++b) {
                        if (rows[v][b].is_zero()) continue;
                        rebuilt.add_term(uint64_t(a) * h.dim + b, it->second * rows[u][a] * rows[v][b]);
                    }
                }
            }
        rebuilt.flush();
        if (!(rebuilt == delta))
            throw std::invalid_argument("sub_hopf_algebra: comultiplication escapes the subspace");
    }
    sub->provenance.kind = Provenance::Kind::Custom;
    sub->cache_one();
    return sub;
}

}  // namespace hopford
