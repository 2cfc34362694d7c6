#pragma once

#include <optional>
#include <vector>

#include "hopford/cyclotomic.hpp"

namespace hopford {

using Vec = std::vector<CycNumber>;

/// Dense matrix over a cyclotomic field, row-major. All elimination is
/// exact; no pivot scaling tricks are needed since the entries are rationals.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(unsigned rows, unsigned cols, const FieldPtr& field);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    CycNumber& at(unsigned i, unsigned j) { return data_[size_t(i) * cols_ + j]; }
    const CycNumber& at(unsigned i, unsigned j) const { return data_[size_t(i) * cols_ + j]; }

    static Mat identity(unsigned n, const FieldPtr& field);
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    unsigned rows_, cols_;
    FieldPtr field_;
    std::vector<CycNumber> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<unsigned> rref(Mat& m);

unsigned rank(Mat m);

/// Basis of {x : A x = 0} (right kernel), one vector per returned row.
std::vector<Vec> nullspace(const Mat& a);

/// Solve A x = b; empty when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Exact inverse; throws std::domain_error when singular.
Mat inverse(const Mat& a);

/// Incrementally maintained reduced echelon basis of a span. Optionally
/// tracks each reduction as a combination of the inserted vectors, which is
/// how minimal-polynomial dependencies are recovered.
class EchelonSpan {
public:
    EchelonSpan(unsigned dim, const FieldPtr& field, bool track = false)
        : dim_(dim), field_(field), track_(track), inserted_(0) {}

    /// Insert a vector; returns true if the span grew. When the vector was
    /// already in the span and tracking is on, dependence() gives the
    /// coefficients c with v = sum_i c_i * inserted_i.
    bool add(Vec v);

    bool contains(Vec v) const;
    /// Coordinates of v in the echelon basis; empty when v is outside.
    std::optional<Vec> coordinates(Vec v) const;

    unsigned dim_span() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<unsigned>& pivots() const { return pivots_; }
    const Vec& dependence() const { return last_dependence_; }

private:
    unsigned dim_;
    FieldPtr field_;
    bool track_;
    unsigned inserted_;
    std::vector<Vec> rows_;
    std::vector<unsigned> pivots_;
    std::vector<Vec> combos_;  // combos_[r][t]: coefficient of inserted vector t in row r
    Vec last_dependence_;
};

}  // namespace hopford
