#include "hopford/group.hpp"

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace hopford {

GroupSpec GroupSpec::cyclic(unsigned k, std::string gen) {
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.k = k;
    s.gen1 = std::move(gen);
    return s;
}

GroupSpec GroupSpec::semidirect_qp(unsigned q, unsigned p, unsigned r, std::string sg, std::string ag) {
    GroupSpec s;
    s.kind = Kind::SemidirectQP;
    s.q = q;
    s.p = p;
    s.r = r;
    s.gen1 = std::move(sg);
    s.gen2 = std::move(ag);
    return s;
}

GroupSpec GroupSpec::product(GroupSpec l, GroupSpec r) {
    GroupSpec s;
    s.kind = Kind::Product;
    s.left = std::make_shared<GroupSpec>(std::move(l));
    s.right = std::make_shared<GroupSpec>(std::move(r));
    return s;
}

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned mul_order_mod(unsigned r, unsigned q) {
    unsigned x = r % q, ord = 1;
    while (x != 1) {
        x = (x * r) % q;
        ++ord;
        if (ord > q) throw std::logic_error("mul_order_mod: not a unit");
    }
    return ord;
}

std::string exp_label(const std::string& gen, unsigned e) {
    if (e == 0) return "";
    if (e == 1) return gen;
    return gen + "^" + std::to_string(e);
}

void validate(const FiniteGroup& g) {
    const unsigned n = g.order;
    // Latin square
    for (unsigned i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (unsigned j = 0; j < n; ++j) {
            uint32_t a = g.mul(i, j), b = g.mul(j, i);
            if (a >= n || b >= n) throw std::logic_error("group table: index out of range");
            if (seen_row[a] || seen_col[b]) throw std::logic_error("group table: not a Latin square");
            seen_row[a] = seen_col[b] = true;
        }
    }
    // identity and inverses
    for (unsigned i = 0; i < n; ++i) {
        if (g.mul(g.identity, i) != i || g.mul(i, g.identity) != i)
            throw std::logic_error("group table: identity fails");
        if (g.mul(i, g.inverse[i]) != g.identity) throw std::logic_error("group table: inverse fails");
    }
    // associativity: exhaustive for small orders, sampled above
    if (n <= 64) {
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw std::logic_error("group table: associativity fails");
    } else {
        std::mt19937_64 rng(0x67726f75u);
        for (int t = 0; t < 20000; ++t) {
            uint32_t a = rng() % n, b = rng() % n, c = rng() % n;
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw std::logic_error("group table: associativity fails (sampled)");
        }
    }
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
    FiniteGroup g;
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: {
            if (spec.k == 0) throw std::invalid_argument("build_group: cyclic order must be positive");
            const unsigned n = spec.k;
            g.order = n;
            g.table.resize(size_t(n) * n);
            g.inverse.resize(n);
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = 0; j < n; ++j) g.table[size_t(i) * n + j] = (i + j) % n;
                g.inverse[i] = (n - i) % n;
                std::string l = exp_label(spec.gen1, i);
                g.labels.push_back(l.empty() ? "1" : l);
            }
            g.identity = 0;
            break;
        }
        case GroupSpec::Kind::SemidirectQP: {
            const unsigned q = spec.q, p = spec.p, r = spec.r;
            if (!is_prime(q)) throw std::invalid_argument("build_group: q must be prime");
            if (p == 0 || (q - 1) % p != 0) throw std::invalid_argument("build_group: p must divide q-1");
            if (r % q == 0 || mul_order_mod(r, q) != p)
                throw std::invalid_argument("build_group: r must have multiplicative order p mod q");
            const unsigned n = p * q;
            g.order = n;
            g.table.resize(size_t(n) * n);
            g.inverse.resize(n);
            // r^i mod q table; rpow[(p-k)%p] = r^{-k}
            std::vector<unsigned> rpow(p);
            rpow[0] = 1;
            for (unsigned i = 1; i < p; ++i) rpow[i] = (rpow[i - 1] * r) % q;
            // s a s^{-1} = a^r gives a^j s^k = s^k a^{j r^{-k}}, hence
            // (s^i a^j)(s^k a^l) = s^{i+k} a^{j r^{-k} + l}
            for (unsigned i = 0; i < p; ++i)
                for (unsigned j = 0; j < q; ++j)
                    for (unsigned k = 0; k < p; ++k)
                        for (unsigned l = 0; l < q; ++l)
                            g.table[size_t(sd_index(q, i, j)) * n + sd_index(q, k, l)] =
                                sd_index(q, (i + k) % p, (j * rpow[(p - k) % p] + l) % q);
            for (unsigned i = 0; i < p; ++i)
                for (unsigned j = 0; j < q; ++j) {
                    // (s^i a^j)^{-1} = s^{p-i} a^{-j r^i}
                    unsigned ii = (p - i) % p;
                    unsigned jj = (q - (j * rpow[i]) % q) % q;
                    g.inverse[sd_index(q, i, j)] = sd_index(q, ii, jj);
                    std::string l1 = exp_label(spec.gen1, i), l2 = exp_label(spec.gen2, j);
                    std::string lab = l1 + (l1.empty() || l2.empty() ? "" : " ") + l2;
                    g.labels.push_back(lab.empty() ? "1" : lab);
                }
            g.identity = 0;
            break;
        }
        case GroupSpec::Kind::Product: {
            FiniteGroup a = build_group(*spec.left);
            FiniteGroup b = build_group(*spec.right);
            const unsigned n = a.order * b.order;
            g.order = n;
            g.table.resize(size_t(n) * n);
            g.inverse.resize(n);
            for (unsigned i1 = 0; i1 < a.order; ++i1)
                for (unsigned i2 = 0; i2 < b.order; ++i2) {
                    uint32_t i = prod_index(b, i1, i2);
                    for (unsigned j1 = 0; j1 < a.order; ++j1)
                        for (unsigned j2 = 0; j2 < b.order; ++j2)
                            g.table[size_t(i) * n + prod_index(b, j1, j2)] =
                                prod_index(b, a.mul(i1, j1), b.mul(i2, j2));
                    g.inverse[i] = prod_index(b, a.inverse[i1], b.inverse[i2]);
                    std::string lab;
                    if (a.labels[i1] != "1") lab = a.labels[i1];
                    if (b.labels[i2] != "1") lab += (lab.empty() ? "" : " ") + b.labels[i2];
                    g.labels.push_back(lab.empty() ? "1" : lab);
                }
            g.identity = 0;
            break;
        }
    }
    g.spec = spec;
    validate(g);
    return g;
}

uint32_t FiniteGroup::pow(uint32_t g, long e) const {
    long m = e % static_cast<long>(element_order(g));
    if (m < 0) m += element_order(g);
    uint32_t acc = identity;
    for (long i = 0; i < m; ++i) acc = mul(acc, g);
    return acc;
}

unsigned FiniteGroup::element_order(uint32_t g) const {
    unsigned ord = 1;
    uint32_t x = g;
    while (x != identity) {
        x = mul(x, g);
        ++ord;
    }
    return ord;
}

unsigned FiniteGroup::exponent() const {
    unsigned l = 1;
    for (uint32_t g = 0; g < order; ++g) l = std::lcm(l, element_order(g));
    return l;
}

std::vector<uint32_t> FiniteGroup::subgroup_generated(const std::vector<uint32_t>& gens) const {
    std::set<uint32_t> closure{identity};
    std::vector<uint32_t> frontier{identity};
    while (!frontier.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t x : frontier)
            for (uint32_t g : gens) {
                uint32_t y = mul(x, g);
                if (closure.insert(y).second) next.push_back(y);
                uint32_t z = mul(g, x);
                if (closure.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    return std::vector<uint32_t>(closure.begin(), closure.end());
}

bool FiniteGroup::is_abelian() const {
    for (uint32_t a = 0; a < order; ++a)
        for (uint32_t b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

}  // namespace hopford
