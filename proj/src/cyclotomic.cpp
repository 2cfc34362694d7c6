#include "hopford/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopford {

Rational rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (num.empty() || den.empty()) throw std::invalid_argument("rational: bad literal '" + std::string(s) + "'");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw std::invalid_argument("rational: bad literal '" + std::string(s) + "'");
    if (r.get_den() == 0) throw std::domain_error("rational: zero denominator");
    r.canonicalize();
    return r;
}

namespace {

// Dense integer polynomials, low degree first, used only to build Phi_n.
using IPoly = std::vector<Integer>;

IPoly x_pow_minus_one(unsigned n) {
    IPoly p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division of integer polynomials; divisor must be monic.
IPoly divide_exact(IPoly num, const IPoly& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("divide_exact: divisor not monic");
    if (num.size() < den.size()) throw std::logic_error("divide_exact: degree underflow");
    IPoly quot(num.size() - den.size() + 1, Integer(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    for (const Integer& c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const IPoly& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, IPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    std::function<const IPoly&(unsigned)> get = [&](unsigned k) -> const IPoly& {
        auto f = cache.find(k);
        if (f != cache.end()) return f->second;
        IPoly num = x_pow_minus_one(k);
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) num = divide_exact(std::move(num), get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(n);
}

}  // namespace

CycField::CycField(unsigned conductor) : conductor_(conductor) {
    if (conductor == 0) throw std::invalid_argument("CycField: conductor must be positive");
    phi_ = cyclotomic_polynomial(conductor);
    degree_ = euler_phi(conductor);
    if (phi_.size() != degree_ + 1) throw std::logic_error("CycField: degree mismatch");

    // Reduction rows x^{degree+k} mod Phi for k = 0..degree-2, integer
    // entries since Phi is monic integral. Row 0 folds x^degree.
    {
        std::vector<Integer> row(degree_, Integer(0));
        for (unsigned i = 0; i < degree_; ++i) row[i] = -phi_[i];
        reduction_.push_back(std::move(row));
        for (unsigned k = 1; k + 1 < degree_; ++k) {
            const std::vector<Integer>& prev = reduction_.back();
            std::vector<Integer> next(degree_, Integer(0));
            for (unsigned i = 0; i + 1 < degree_; ++i) next[i + 1] = prev[i];
            const Integer top = prev[degree_ - 1];
            if (top != 0)
                for (unsigned i = 0; i < degree_; ++i) next[i] += top * reduction_[0][i];
            reduction_.push_back(std::move(next));
        }
    }

    // Canonical coordinates of zeta^k for all k < n, by shift-and-fold.
    zeta_coords_.resize(conductor_);
    std::vector<Rational> cur(degree_, Rational(0));
    cur[0] = 1;
    zeta_coords_[0] = cur;
    for (unsigned k = 1; k < conductor_; ++k) {
        std::vector<Rational> next(degree_, Rational(0));
        for (unsigned i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
        const Rational top = cur[degree_ - 1];
        if (top != 0)
            for (unsigned i = 0; i < degree_; ++i) next[i] += top * Rational(reduction_[0][i]);
        zeta_coords_[k] = next;
        cur = std::move(next);
    }
}

std::shared_ptr<const CycField> CycField::get(unsigned conductor) {
    static std::map<unsigned, std::shared_ptr<const CycField>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(conductor);
    if (it != registry.end()) return it->second;
    auto f = std::shared_ptr<const CycField>(new CycField(conductor));
    registry.emplace(conductor, f);
    return f;
}

CycNumber CycField::zero() const {
    return CycNumber(this, std::vector<Rational>(degree_, Rational(0)));
}

CycNumber CycField::one() const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = 1;
    return CycNumber(this, std::move(c));
}

CycNumber CycField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = r;
    return CycNumber(this, std::move(c));
}

CycNumber CycField::zeta_pow(long k) const {
    long m = k % static_cast<long>(conductor_);
    if (m < 0) m += conductor_;
    return CycNumber(this, zeta_coords_[static_cast<unsigned>(m)]);
}

CycNumber CycField::root_of_unity(unsigned order) const {
    if (order == 0 || conductor_ % order != 0)
        throw std::domain_error("root_of_unity: order " + std::to_string(order) +
                                " does not divide conductor " + std::to_string(conductor_));
    return zeta_pow(conductor_ / order);
}

CycNumber::CycNumber(const CycField* field, std::vector<Rational> coords)
    : field_(field), coords_(std::move(coords)) {
    if (coords_.size() != field_->degree()) throw std::invalid_argument("CycNumber: wrong coordinate count");
}

bool CycNumber::is_zero() const {
    for (const Rational& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_one() const {
    if (coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool CycNumber::operator==(const CycNumber& o) const {
    if (field_ != o.field_) return false;
    return coords_ == o.coords_;
}

namespace {
void check_same_field(const CycNumber& a, const CycNumber& b) {
    if (a.field() != b.field()) throw std::invalid_argument("CycNumber: field mismatch");
}
}  // namespace

CycNumber CycNumber::operator+(const CycNumber& o) const {
    check_same_field(*this, o);
    CycNumber r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    check_same_field(*this, o);
    CycNumber r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

CycNumber CycNumber::operator-() const {
    CycNumber r(*this);
    for (Rational& c : r.coords_) c = -c;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    check_same_field(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    check_same_field(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

void CycNumber::scale(const Rational& c) {
    for (Rational& x : coords_) x *= c;
}

void CycNumber::add_scaled(const CycNumber& x, const Rational& c) {
    check_same_field(*this, x);
    static thread_local mpq_t scratch;
    static thread_local bool init = false;
    if (!init) {
        mpq_init(scratch);
        init = true;
    }
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (x.coords_[i] == 0) continue;
        mpq_mul(scratch, x.coords_[i].get_mpq_t(), c.get_mpq_t());
        mpq_add(coords_[i].get_mpq_t(), coords_[i].get_mpq_t(), scratch);
    }
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    check_same_field(*this, o);
    const unsigned e = field_->degree();
    // Fast paths for rational factors keep the hot loops light.
    if (is_rational()) {
        CycNumber r(o);
        r.scale(coords_[0]);
        return r;
    }
    if (o.is_rational()) {
        CycNumber r(*this);
        r.scale(o.coords_[0]);
        return r;
    }
    static thread_local std::vector<Rational> acc;
    static thread_local mpq_t scratch;
    static thread_local bool init = false;
    if (!init) {
        mpq_init(scratch);
        init = true;
    }
    if (acc.size() < 2 * e) acc.resize(2 * e);
    for (unsigned i = 0; i < 2 * e - 1; ++i) acc[i] = 0;
    for (unsigned i = 0; i < e; ++i) {
        if (coords_[i] == 0) continue;
        for (unsigned j = 0; j < e; ++j) {
            if (o.coords_[j] == 0) continue;
            mpq_mul(scratch, coords_[i].get_mpq_t(), o.coords_[j].get_mpq_t());
            mpq_add(acc[i + j].get_mpq_t(), acc[i + j].get_mpq_t(), scratch);
        }
    }
    // Fold the tail back with the precomputed integer reduction rows.
    std::vector<Rational> out(e, Rational(0));
    for (unsigned d = 2 * e - 2; d >= e && d < 2 * e; --d) {
        if (acc[d] != 0) {
            const std::vector<Integer>& row = field_->reduction_row(d - e);
            for (unsigned i = 0; i < e; ++i) {
                if (row[i] == 0) continue;
                Rational t(row[i]);
                mpq_mul(scratch, acc[d].get_mpq_t(), t.get_mpq_t());
                mpq_add(acc[i].get_mpq_t(), acc[i].get_mpq_t(), scratch);
            }
        }
        if (d == e) break;
    }
    for (unsigned i = 0; i < e; ++i) out[i] = acc[i];
    return CycNumber(field_, std::move(out));
}

namespace {

// Polynomial extended gcd over Q, used for inversion mod Phi_n. Phi_n is
// irreducible over Q, so any nonzero element is invertible.
using QPoly = std::vector<Rational>;

unsigned qdeg(const QPoly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<unsigned>(i);
    return 0;
}

bool qzero(const QPoly& p) {
    for (const Rational& c : p)
        if (c != 0) return false;
    return true;
}

// num = quot * den + rem
void qdivmod(QPoly num, const QPoly& den, QPoly& quot, QPoly& rem) {
    unsigned dd = qdeg(den);
    const Rational lead = den[dd];
    quot.assign(num.size(), Rational(0));
    while (!qzero(num) && qdeg(num) >= dd) {
        unsigned dn = qdeg(num);
        Rational c = num[dn] / lead;
        quot[dn - dd] += c;
        for (unsigned i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
    }
    rem = std::move(num);
}

}  // namespace

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber: division by zero");
    const unsigned e = field_->degree();
    if (is_rational()) return field_->from_rational(Rational(1) / coords_[0]);
    // Extended Euclid on (this, Phi): find u with u*this = 1 mod Phi.
    QPoly r0(e + 1, Rational(0)), r1(coords_.begin(), coords_.end());
    for (unsigned i = 0; i <= e; ++i) r0[i] = Rational(field_->cyclotomic_poly()[i]);
    r1.resize(e + 1, Rational(0));
    QPoly s0(e + 1, Rational(0)), s1(e + 1, Rational(0));
    s1[0] = 1;  // s tracks the coefficient of `this`
    while (!qzero(r1)) {
        QPoly quot, rem;
        qdivmod(r0, r1, quot, rem);
        QPoly s2(e + 1, Rational(0));
        // s2 = s0 - quot * s1
        for (unsigned i = 0; i <= e; ++i) s2[i] = s0[i];
        for (unsigned i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (unsigned j = 0; j + i <= e; ++j) s2[i + j] -= quot[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd = nonzero constant (Phi irreducible), s0 * this = r0 mod Phi
    if (qdeg(r0) != 0 || r0[0] == 0) throw std::logic_error("CycNumber: inverse failed");
    std::vector<Rational> out(e, Rational(0));
    for (unsigned i = 0; i < e && i < s0.size(); ++i) out[i] = s0[i] / r0[0];
    // s0 may exceed degree e-1 formally; reduce through field multiplication by 1
    CycNumber inv(field_, std::move(out));
    return inv;
}

CycNumber CycNumber::operator/(const CycNumber& o) const {
    return *this * o.inverse();
}

CycNumber CycNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNumber base(*this), result = field_->one();
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string CycNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(coords_[i]);
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool is_algebraic_integer(const CycNumber& a) {
    for (const Rational& c : a.coords_)
        if (!rat_is_integer(c)) return false;
    return true;
}

CycNumber embed(const CycNumber& a, const FieldPtr& target) {
    unsigned n = a.field()->conductor();
    unsigned m = target->conductor();
    if (m % n != 0)
        throw std::domain_error("embed: conductor " + std::to_string(n) + " does not divide " +
                                std::to_string(m));
    unsigned step = m / n;
    CycNumber out = target->zero();
    for (unsigned k = 0; k < a.field()->degree(); ++k) {
        if (a.coords()[k] == 0) continue;
        out.add_scaled(target->zeta_pow(static_cast<long>(k) * step), a.coords()[k]);
    }
    return out;
}

std::optional<CycNumber> coerce_down(const CycNumber& a, const FieldPtr& target) {
    unsigned m = a.field()->conductor();
    unsigned t = target->conductor();
    if (m == t) return CycNumber(target.get(), a.coords());
    if (m % t != 0)
        throw std::domain_error("coerce_down: target conductor does not divide the source");
    const unsigned em = a.field()->degree(), et = target->degree();
    auto source = CycField::get(m);
    // columns: images of the target power basis; solve for the preimage by
    // Gaussian elimination over Q
    std::vector<std::vector<Rational>> cols;
    for (unsigned j = 0; j < et; ++j) cols.push_back(embed(target->zeta_pow(j), source).coords());
    std::vector<Rational> rhs = a.coords();
    // forward elimination on the (em x et) system
    std::vector<std::vector<Rational>> mat(em, std::vector<Rational>(et, Rational(0)));
    for (unsigned i = 0; i < em; ++i)
        for (unsigned j = 0; j < et; ++j) mat[i][j] = cols[j][i];
    std::vector<int> pivot_col_of_row(em, -1);
    unsigned row = 0;
    std::vector<Rational> x(et, Rational(0));
    for (unsigned c = 0; c < et && row < em; ++c) {
        unsigned piv = row;
        while (piv < em && mat[piv][c] == 0) ++piv;
        if (piv == em) continue;
        std::swap(mat[piv], mat[row]);
        std::swap(rhs[piv], rhs[row]);
        Rational inv = Rational(1) / mat[row][c];
        for (unsigned j = c; j < et; ++j) mat[row][j] *= inv;
        rhs[row] *= inv;
        for (unsigned i = 0; i < em; ++i) {
            if (i == row || mat[i][c] == 0) continue;
            Rational f = mat[i][c];
            for (unsigned j = c; j < et; ++j) mat[i][j] -= f * mat[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col_of_row[row] = static_cast<int>(c);
        ++row;
    }
    for (unsigned i = row; i < em; ++i)
        if (rhs[i] != 0) return std::nullopt;  // not in the subfield
    for (unsigned i = 0; i < row; ++i)
        if (pivot_col_of_row[i] >= 0) x[pivot_col_of_row[i]] = rhs[i];
    CycNumber out(target.get(), std::move(x));
    if (embed(out, source) != a) return std::nullopt;
    return out;
}

std::vector<std::string> serialize_coords(const CycNumber& a) {
    std::vector<std::string> out;
    out.reserve(a.coords().size());
    for (const Rational& c : a.coords()) out.push_back(rat_to_string(c));
    return out;
}

CycNumber parse_coords(const FieldPtr& field, const std::vector<std::string>& strs) {
    if (strs.size() != field->degree())
        throw std::invalid_argument("parse_coords: expected " + std::to_string(field->degree()) +
                                    " coordinates, got " + std::to_string(strs.size()));
    std::vector<Rational> c;
    c.reserve(strs.size());
    for (const std::string& s : strs) c.push_back(rat_from_string(s));
    return CycNumber(field.get(), std::move(c));
}

}  // namespace hopford
