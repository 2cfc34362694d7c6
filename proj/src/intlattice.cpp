#include "hopford/intlattice.hpp"

#include <stdexcept>

namespace hopford {

namespace {

// Row HNF with unimodular tracking: returns (H with zero rows kept, U) such
// that U m = H. Column-by-column gcd elimination.
std::pair<IntMat, IntMat> hnf_tracked(IntMat m) {
    const unsigned rws = m.rows, cls = m.cols;
    IntMat u(rws, rws);
    for (unsigned i = 0; i < rws; ++i) u.at(i, i) = 1;
    unsigned r = 0;
    for (unsigned c = 0; c < cls && r < rws; ++c) {
        // eliminate below row r in column c via extended gcd combinations
        for (unsigned i = r + 1; i < rws; ++i) {
            if (m.at(i, c) == 0) continue;
            if (m.at(r, c) == 0) {
                for (unsigned j = 0; j < cls; ++j) std::swap(m.at(r, j), m.at(i, j));
                for (unsigned j = 0; j < rws; ++j) std::swap(u.at(r, j), u.at(i, j));
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.at(r, c).get_mpz_t(),
                       m.at(i, c).get_mpz_t());
            Integer p = m.at(r, c) / g, q = m.at(i, c) / g;
            for (unsigned j = 0; j < cls; ++j) {
                Integer top = s * m.at(r, j) + t * m.at(i, j);
                Integer bot = -q * m.at(r, j) + p * m.at(i, j);
                m.at(r, j) = top;
                m.at(i, j) = bot;
            }
            for (unsigned j = 0; j < rws; ++j) {
                Integer top = s * u.at(r, j) + t * u.at(i, j);
                Integer bot = -q * u.at(r, j) + p * u.at(i, j);
                u.at(r, j) = top;
                u.at(i, j) = bot;
            }
        }
        if (m.at(r, c) == 0) continue;
        if (m.at(r, c) < 0) {
            for (unsigned j = 0; j < cls; ++j) m.at(r, j) = -m.at(r, j);
            for (unsigned j = 0; j < rws; ++j) u.at(r, j) = -u.at(r, j);
        }
        // reduce entries above the pivot into [0, pivot)
        for (unsigned i = 0; i < r; ++i) {
            Integer qf;
            mpz_fdiv_q(qf.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
            if (qf == 0) continue;
            for (unsigned j = 0; j < cls; ++j) m.at(i, j) -= qf * m.at(r, j);
            for (unsigned j = 0; j < rws; ++j) u.at(i, j) -= qf * u.at(r, j);
        }
        ++r;
    }
    return {std::move(m), std::move(u)};
}

IntMat drop_zero_rows(const IntMat& m, unsigned keep) {
    IntMat out(keep, m.cols);
    for (unsigned i = 0; i < keep; ++i)
        for (unsigned j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

unsigned nonzero_row_count(const IntMat& m) {
    unsigned r = 0;
    for (unsigned i = 0; i < m.rows; ++i) {
        bool nz = false;
        for (unsigned j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (nz) ++r;
    }
    return r;
}

}  // namespace

IntMat hnf_rows(IntMat m) {
    auto [h, u] = hnf_tracked(std::move(m));
    return drop_zero_rows(h, nonzero_row_count(h));
}

IntMat left_kernel(const IntMat& m) {
    auto [h, u] = hnf_tracked(m);
    unsigned rank = nonzero_row_count(h);
    IntMat k(m.rows - rank, m.rows);
    for (unsigned i = rank; i < m.rows; ++i)
        for (unsigned j = 0; j < m.rows; ++j) k.at(i - rank, j) = u.at(i, j);
    return hnf_rows(std::move(k));
}

IntMat saturate_rows(const IntMat& m) {
    // double orthogonal complement: sat(L) = ker(ker(L)^T applied from the left)
    // Build the integer kernel of x . row_i = 0 conditions: columns are the
    // rows of m; the kernel of m^T from the left.
    IntMat mt(m.cols, m.rows);
    for (unsigned i = 0; i < m.rows; ++i)
        for (unsigned j = 0; j < m.cols; ++j) mt.at(j, i) = m.at(i, j);
    IntMat orth = left_kernel(mt);  // rows orthogonal to all rows of m
    IntMat ot(orth.cols, orth.rows);
    for (unsigned i = 0; i < orth.rows; ++i)
        for (unsigned j = 0; j < orth.cols; ++j) ot.at(j, i) = orth.at(i, j);
    return left_kernel(ot);
}

IntMat intersect_rows(const IntMat& a, const IntMat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("intersect_rows: column mismatch");
    // solutions of x a = y b: stack a over -b and take the left kernel
    IntMat stacked(a.rows + b.rows, a.cols);
    for (unsigned i = 0; i < a.rows; ++i)
        for (unsigned j = 0; j < a.cols; ++j) stacked.at(i, j) = a.at(i, j);
    for (unsigned i = 0; i < b.rows; ++i)
        for (unsigned j = 0; j < b.cols; ++j) stacked.at(a.rows + i, j) = -b.at(i, j);
    IntMat k = left_kernel(stacked);
    IntMat result(k.rows, a.cols);
    for (unsigned i = 0; i < k.rows; ++i)
        for (unsigned j = 0; j < a.cols; ++j) {
            Integer acc = 0;
            for (unsigned t = 0; t < a.rows; ++t) acc += k.at(i, t) * a.at(t, j);
            result.at(i, j) = acc;
        }
    return hnf_rows(std::move(result));
}

IntMat m_saturate_rows(const IntMat& m, const Integer& m_inv) {
    IntMat cur = hnf_rows(m);
    if (m_inv == 1 || cur.rows == 0) return cur;
    IntMat sat = saturate_rows(cur);
    for (;;) {
        // P = {x in sat : m_inv * x in cur} = (1/m_inv) (m_inv*sat ^ cur)
        IntMat scaled = sat;
        for (Integer& v : scaled.a) v *= m_inv;
        IntMat inter = intersect_rows(scaled, cur);
        for (Integer& v : inter.a) {
            if (v % m_inv != 0) throw std::logic_error("m_saturate_rows: division fails");
            v /= m_inv;
        }
        IntMat next = hnf_rows(std::move(inter));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

std::optional<std::vector<Integer>> solve_in_hnf(const IntMat& h, const std::vector<Integer>& x) {
    if (x.size() != h.cols) throw std::invalid_argument("solve_in_hnf: dimension mismatch");
    // pivot positions
    std::vector<Integer> rem(x);
    std::vector<Integer> coeff(h.rows, Integer(0));
    unsigned col = 0;
    for (unsigned r = 0; r < h.rows; ++r) {
        while (col < h.cols && h.at(r, col) == 0) ++col;
        if (col == h.cols) break;
        Integer qf = rem[col] / h.at(r, col);
        if (qf * h.at(r, col) != rem[col]) return std::nullopt;
        coeff[r] = qf;
        if (qf != 0)
            for (unsigned j = col; j < h.cols; ++j) rem[j] -= qf * h.at(r, j);
        ++col;
    }
    for (const Integer& v : rem)
        if (v != 0) return std::nullopt;
    return coeff;
}

Integer determinant(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    const unsigned n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Integer prev = 1;
    int sign = 1;
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            unsigned swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (unsigned j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i)
            for (unsigned j = k + 1; j < n; ++j) {
                Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

Integer content(const IntMat& m) {
    Integer g = 0;
    for (const Integer& v : m.a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return g;
    }
    return g;
}

}  // namespace hopford
