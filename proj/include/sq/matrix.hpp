#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sq {

using Rat = mpq_class;

// Dense matrix over the rationals, row-major.  All arithmetic is exact.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivots;  // pivot column indices, ascending
    int rank = 0;
};

// Reduced row echelon form.  Pivot choice: first nonzero entry in column
// order, so output is deterministic.
RrefResult rref(const RatMatrix& m);

// Basis of the right null space, one vector (length = cols) per free column,
// ordered by free column index.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

// A particular solution of m*x = b, or nullopt if inconsistent.
// Free variables are set to zero.  Throws on dimension mismatch.
std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b);

int rank_of(const RatMatrix& m);

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const Rat& c, const RatMatrix& a);
RatMatrix mat_pow(const RatMatrix& a, int k);

// Stack b below a (equal column counts).
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
// Stack b to the right of a (equal row counts).
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

std::vector<Rat> mat_apply(const RatMatrix& a, const std::vector<Rat>& v);

bool is_invertible(const RatMatrix& a);

Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace sq
