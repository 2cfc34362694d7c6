#include "hopford/linalg.hpp"

#include <stdexcept>

namespace hopford {

Mat::Mat(unsigned rows, unsigned cols, const FieldPtr& field)
    : rows_(rows), cols_(cols), field_(field), data_(size_t(rows) * cols, field->zero()) {}

Mat Mat::identity(unsigned n, const FieldPtr& field) {
    Mat m(n, n, field);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat r(rows_, o.cols_, field_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const CycNumber& a = at(i, k);
            if (a.is_zero()) continue;
            for (unsigned j = 0; j < o.cols_; ++j) {
                const CycNumber& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

std::vector<unsigned> rref(Mat& m) {
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
        unsigned piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(piv, j));
        CycNumber inv = m.at(row, col).inverse();
        for (unsigned j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (unsigned i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CycNumber f = m.at(i, col);
            for (unsigned j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

unsigned rank(Mat m) { return static_cast<unsigned>(rref(m).size()); }

std::vector<Vec> nullspace(const Mat& a) {
    Mat m = a;
    std::vector<unsigned> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (unsigned p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (unsigned free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), a.field()->zero());
        v[free] = a.field()->one();
        for (unsigned r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Mat aug(a.rows(), a.cols() + 1, a.field());
    for (unsigned i = 0; i < a.rows(); ++i) {
        for (unsigned j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<unsigned> pivots = rref(aug);
    for (unsigned p : pivots)
        if (p == a.cols()) return std::nullopt;  // inconsistent
    Vec x(a.cols(), a.field()->zero());
    for (unsigned r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    Mat aug(a.rows(), 2 * a.cols(), a.field());
    for (unsigned i = 0; i < a.rows(); ++i) {
        for (unsigned j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols() + i) = a.field()->one();
    }
    std::vector<unsigned> pivots = rref(aug);
    if (pivots.size() != a.rows() || pivots.back() >= a.cols())
        throw std::domain_error("inverse: singular matrix");
    Mat inv(a.rows(), a.cols(), a.field());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
    return inv;
}

bool EchelonSpan::add(Vec v) {
    if (v.size() != dim_) throw std::invalid_argument("EchelonSpan: dimension mismatch");
    Vec combo;
    if (track_) {
        combo.assign(inserted_ + 1, field_->zero());
        combo[inserted_] = field_->one();
    }
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNumber& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        CycNumber f = c;  // rows are normalized, pivot entry = 1
        for (unsigned j = 0; j < dim_; ++j) {
            if (rows_[r][j].is_zero()) continue;
            v[j] -= f * rows_[r][j];
        }
        if (track_)
            for (size_t t = 0; t < combos_[r].size(); ++t) combo[t] -= f * combos_[r][t];
    }
    unsigned piv = dim_;
    for (unsigned j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    ++inserted_;
    if (piv == dim_) {
        // v reduced to zero: combo satisfies sum_t combo[t] * inserted_t = 0
        // with combo.back() = 1 (a monic dependence on the newest vector).
        if (track_) last_dependence_ = std::move(combo);
        return false;
    }
    CycNumber inv = v[piv].inverse();
    for (unsigned j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
    if (track_) {
        for (auto& c : combo) c = c * inv;
        combo.resize(inserted_, field_->zero());
    }
    // Back-substitute into existing rows to keep the basis reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNumber& c = rows_[r][piv];
        if (c.is_zero()) continue;
        CycNumber f = c;
        for (unsigned j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
        if (track_) {
            combos_[r].resize(inserted_, field_->zero());
            for (size_t t = 0; t < combo.size(); ++t) combos_[r][t] -= f * combo[t];
        }
    }
    // Insert keeping pivots ordered.
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
    return true;
}

bool EchelonSpan::contains(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNumber& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        CycNumber f = c;
        for (unsigned j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    for (const CycNumber& c : v)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Vec> EchelonSpan::coordinates(Vec v) const {
    Vec coords(rows_.size(), field_->zero());
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNumber& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        CycNumber f = c;
        coords[r] = f;
        for (unsigned j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    for (const CycNumber& c : v)
        if (!c.is_zero()) return std::nullopt;
    return coords;
}

}  // namespace hopford
