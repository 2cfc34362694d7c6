#include "hopford/lattice.hpp"

#include <stdexcept>

#include "hopford/linalg.hpp"

namespace hopford {

std::string RingSpec::to_string() const {
    std::string s = "Z";
    if (conductor > 1) s += "[zeta_" + std::to_string(conductor) + "]";
    if (inverted != 1) s += "[1/" + inverted.get_str() + "]";
    return s;
}

unsigned RingSpec::degree() const { return CycField::get(conductor)->degree(); }

RingSpec parse_ring(const std::string& s) {
    RingSpec r;
    size_t pos = 0;
    if (s.empty() || s[0] != 'Z') throw std::invalid_argument("parse_ring: expected leading Z");
    pos = 1;
    while (pos < s.size()) {
        if (s[pos] != '[') throw std::invalid_argument("parse_ring: expected [");
        size_t close = s.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("parse_ring: missing ]");
        std::string inner = s.substr(pos + 1, close - pos - 1);
        if (inner.rfind("zeta_", 0) == 0) {
            r.conductor = static_cast<unsigned>(std::stoul(inner.substr(5)));
        } else if (inner.rfind("1/", 0) == 0) {
            r.inverted = Integer(inner.substr(2));
            if (r.inverted < 1) throw std::invalid_argument("parse_ring: inverted must be >= 1");
        } else {
            throw std::invalid_argument("parse_ring: unknown bracket '" + inner + "'");
        }
        pos = close + 1;
    }
    return r;
}

bool Lattice::full_rank() const {
    return rank() == ambient_dim * ambient_field->degree();
}

std::vector<Rational> restrict_scalars(const FieldPtr& field, const Vec& v) {
    const unsigned e = field->degree();
    std::vector<Rational> out;
    out.reserve(v.size() * e);
    for (const CycNumber& c : v)
        for (unsigned j = 0; j < e; ++j) out.push_back(c.coords()[j]);
    return out;
}

Vec unrestrict_scalars(const FieldPtr& field, unsigned dim, const std::vector<Rational>& r) {
    const unsigned e = field->degree();
    if (r.size() != size_t(dim) * e) throw std::invalid_argument("unrestrict_scalars: size mismatch");
    Vec out;
    out.reserve(dim);
    for (unsigned i = 0; i < dim; ++i) {
        std::vector<Rational> c(r.begin() + size_t(i) * e, r.begin() + size_t(i + 1) * e);
        out.emplace_back(field.get(), std::move(c));
    }
    return out;
}

namespace {

// Split d into (m-part, m-free part) where the m-part only contains primes
// dividing m.
std::pair<Integer, Integer> split_m_part(Integer d, const Integer& m) {
    Integer mpart = 1;
    if (m != 1) {
        for (;;) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
            if (g == 1) break;
            mpart *= g;
            d /= g;
        }
    }
    return {mpart, d};
}

}  // namespace

Lattice lattice_span(FieldPtr field, unsigned dim, const RingSpec& ring,
                     const std::vector<Vec>& generators) {
    if (field->conductor() % ring.conductor != 0)
        throw std::invalid_argument("lattice_span: ring conductor must divide the ambient conductor");
    Lattice out;
    out.ambient_field = field;
    out.ambient_dim = dim;
    out.ring = ring;
    const unsigned e = field->degree();
    const unsigned n = dim * e;
    const unsigned er = ring.degree();

    // Z[1/m]-generators: zeta_R^t * g for t < deg(ring)
    std::vector<std::vector<Rational>> rows;
    CycNumber zeta_r =
        field->zeta_pow(ring.conductor == 1 ? 0 : field->conductor() / ring.conductor);
    for (const Vec& g : generators) {
        Vec cur = g;
        for (unsigned t = 0; t < er; ++t) {
            rows.push_back(restrict_scalars(field, cur));
            if (t + 1 < er) {
                for (CycNumber& c : cur) c = c * zeta_r;
            }
        }
    }
    if (rows.empty()) {
        out.denom = 1;
        out.basis = IntMat(0, n);
        return out;
    }
    // common denominator
    Integer d0 = 1;
    for (const auto& row : rows)
        for (const Rational& c : row) {
            Integer den = c.get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), d0.get_mpz_t(), den.get_mpz_t());
            d0 *= den / g;
        }
    auto [mpart, mfree] = split_m_part(d0, ring.inverted);
    (void)mpart;  // a unit of the ring, absorbed into the module
    IntMat a(static_cast<unsigned>(rows.size()), n);
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < n; ++j) {
            Rational scaled = rows[i][j] * Rational(d0);
            if (scaled.get_den() != 1) throw std::logic_error("lattice_span: clearing failed");
            // remove the m-part of the common denominator again: the module
            // is (1/d0) span = (1/mfree) span after absorbing the unit
            a.at(i, j) = scaled.get_num();
        }
    out.denom = mfree;
    out.basis = m_saturate_rows(a, ring.inverted);
    // minimality of the denominator: cancel common m-free content
    for (;;) {
        Integer c = content(out.basis);
        if (c == 0) {
            out.denom = 1;
            break;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), out.denom.get_mpz_t());
        if (g == 1) break;
        for (Integer& v : out.basis.a) v /= g;
        out.denom /= g;
    }
    return out;
}

bool lattice_member(const Lattice& l, const Vec& x) {
    std::vector<Rational> v = restrict_scalars(l.ambient_field, x);
    const unsigned n = l.ambient_dim * l.ambient_field->degree();
    // y = denom * x must lie in Z[1/m]-span(basis): every remaining
    // denominator has to consist of inverted primes only
    std::vector<Rational> w(n);
    Integer extra = 1;
    for (unsigned j = 0; j < n; ++j) {
        w[j] = v[j] * Rational(l.denom);
        Integer den = w[j].get_den();
        for (;;) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), l.ring.inverted.get_mpz_t());
            if (g == 1) break;
            den /= g;
        }
        if (den != 1) return false;  // a denominator outside the inverted primes
        Integer full = w[j].get_den();
        Integer lc;
        mpz_lcm(lc.get_mpz_t(), extra.get_mpz_t(), full.get_mpz_t());
        extra = lc;
    }
    std::vector<Integer> y(n);
    for (unsigned j = 0; j < n; ++j) {
        Rational scaled = w[j] * Rational(extra);
        if (scaled.get_den() != 1) return false;
        y[j] = scaled.get_num();
    }
    return solve_in_hnf(l.basis, y).has_value();
}

std::vector<Vec> lattice_vectors(const Lattice& l) {
    std::vector<Vec> out;
    const unsigned n = l.ambient_dim * l.ambient_field->degree();
    for (unsigned i = 0; i < l.basis.rows; ++i) {
        std::vector<Rational> row(n);
        for (unsigned j = 0; j < n; ++j) row[j] = Rational(l.basis.at(i, j)) / Rational(l.denom);
        out.push_back(unrestrict_scalars(l.ambient_field, l.ambient_dim, row));
    }
    return out;
}

Lattice dual_lattice(const Lattice& l) {
    if (!l.full_rank()) throw std::invalid_argument("dual_lattice: lattice is not of full rank");
    if (l.ring.conductor != l.ambient_field->conductor() &&
        !(l.ambient_field->degree() == 1 && l.ring.conductor == 1))
        throw std::invalid_argument(
            "dual_lattice: ring fraction field must equal the ambient field");
    const FieldPtr& field = l.ambient_field;
    const unsigned e = field->degree();
    const unsigned d = l.ambient_dim;
    const unsigned n = d * e;

    // T maps functional coordinates phi_(i,j) (f = sum phi_(i,j) th_i zeta^j)
    // to the power-basis coordinates of the values f(b_k) on the basis rows.
    std::vector<Vec> brows = lattice_vectors(l);
    auto f1 = CycField::get(1);
    Mat t(n, n, f1);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned i = 0; i < d; ++i) {
            const CycNumber& beta = brows[k][i];  // coefficient of x_i in b_k
            if (beta.is_zero()) continue;
            for (unsigned j = 0; j < e; ++j) {
                CycNumber val = beta * field->zeta_pow(j);
                for (unsigned s = 0; s < e; ++s) {
                    if (val.coords()[s] == 0) continue;
                    t.at(k * e + s, i * e + j) =
                        t.at(k * e + s, i * e + j) + f1->from_rational(val.coords()[s]);
                }
            }
        }
    Mat tinv = inverse(t);
    // dual = Z[1/m]-span of the columns of T^{-1}
    std::vector<Vec> gens;
    for (unsigned c = 0; c < n; ++c) {
        std::vector<Rational> col(n);
        for (unsigned r = 0; r < n; ++r) col[r] = tinv.at(r, c).rational_part();
        gens.push_back(unrestrict_scalars(field, d, col));
    }
    return lattice_span(field, d, l.ring, gens);
}

Lattice lattice_image(const Lattice& l, const std::function<Vec(const Vec&)>& map, FieldPtr tfield,
                      unsigned tdim) {
    std::vector<Vec> gens;
    for (const Vec& v : lattice_vectors(l)) gens.push_back(map(v));
    return lattice_span(tfield, tdim, l.ring, gens);
}

Lattice intersect_with_subspace(const Lattice& l, const std::vector<Vec>& subspace) {
    const FieldPtr& field = l.ambient_field;
    const unsigned e = field->degree();
    const unsigned n = l.ambient_dim * e;
    // rational basis of the subspace after restriction of scalars
    auto f1 = CycField::get(1);
    std::vector<std::vector<Rational>> wrows;
    for (const Vec& w : subspace) {
        Vec cur = w;
        for (unsigned t = 0; t < e; ++t) {
            wrows.push_back(restrict_scalars(field, cur));
            if (t + 1 < e)
                for (CycNumber& c : cur) c = c * field->zeta_pow(1);
        }
    }
    // reduce the lattice basis rows modulo the subspace and keep the integer
    // kernel of what remains
    EchelonSpan wspan(n, f1);
    for (auto& row : wrows) {
        Vec rv;
        rv.reserve(n);
        for (const Rational& c : row) rv.push_back(f1->from_rational(c));
        wspan.add(std::move(rv));
    }
    const unsigned r = l.basis.rows;
    // residues of basis rows after projecting out the subspace
    std::vector<Vec> residues;
    for (unsigned i = 0; i < r; ++i) {
        Vec rv;
        rv.reserve(n);
        for (unsigned j = 0; j < n; ++j) rv.push_back(f1->from_rational(Rational(l.basis.at(i, j))));
        // reduce against wspan rows
        Vec red = rv;
        const auto& rows = wspan.basis();
        const auto& piv = wspan.pivots();
        for (size_t t = 0; t < rows.size(); ++t) {
            CycNumber f = red[piv[t]];
            if (f.is_zero()) continue;
            for (unsigned j = 0; j < n; ++j)
                if (!rows[t][j].is_zero()) red[j] -= f * rows[t][j];
        }
        residues.push_back(std::move(red));
    }
    // integer kernel of the residue matrix (cleared to integers)
    Integer den = 1;
    for (const Vec& row : residues)
        for (const CycNumber& c : row) {
            Integer dd = c.rational_part().get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), dd.get_mpz_t());
            den *= dd / g;
        }
    IntMat res(r, n);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Rational scaled = residues[i][j].rational_part() * Rational(den);
            res.at(i, j) = scaled.get_num();
        }
    IntMat kern = left_kernel(res);
    // sublattice generated by kernel combinations of the basis rows
    std::vector<Vec> gens;
    for (unsigned i = 0; i < kern.rows; ++i) {
        std::vector<Rational> combo(n, Rational(0));
        for (unsigned t = 0; t < r; ++t) {
            if (kern.at(i, t) == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                combo[j] += Rational(kern.at(i, t)) * Rational(l.basis.at(t, j));
        }
        for (Rational& c : combo) c /= Rational(l.denom);
        gens.push_back(unrestrict_scalars(field, l.ambient_dim, combo));
    }
    return lattice_span(field, l.ambient_dim, l.ring, gens);
}

bool lattice_contains(const Lattice& outer, const Lattice& inner) {
    for (const Vec& v : lattice_vectors(inner))
        if (!lattice_member(outer, v)) return false;
    return true;
}

Rational lattice_index(const Lattice& sub, const Lattice& super) {
    if (!sub.full_rank() || !super.full_rank())
        throw std::invalid_argument("lattice_index: both lattices must have full rank");
    const unsigned n = sub.basis.cols;
    // express each sub row (scaled) in the super basis over Q
    auto f1 = CycField::get(1);
    Mat sup(n, n, f1);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            sup.at(i, j) = f1->from_rational(Rational(super.basis.at(i, j)));
    Mat supinv = inverse(sup);
    // C = (D_super / D_sub) * sub_basis * super_basis^{-1}
    Rational scale = Rational(super.denom) / Rational(sub.denom);
    Mat c(n, n, f1);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            CycNumber acc = f1->zero();
            for (unsigned t = 0; t < n; ++t) {
                if (sub.basis.at(i, t) == 0) continue;
                acc += f1->from_rational(Rational(sub.basis.at(i, t))) * supinv.at(t, j);
            }
            c.at(i, j) = acc * f1->from_rational(scale);
        }
    // |det C|
    Rational det(1);
    // rational Bareiss is overkill; use plain elimination over Q
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m[i][j] = c.at(i, j).rational_part();
    int sign = 1;
    for (unsigned k = 0; k < n; ++k) {
        unsigned piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        det *= m[k][k];
        Rational inv = Rational(1) / m[k][k];
        for (unsigned i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] * inv;
            for (unsigned j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    if (sign < 0) det = -det;
    if (det < 0) det = -det;
    return det;
}

}  // namespace hopford
