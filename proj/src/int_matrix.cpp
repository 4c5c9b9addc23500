#include "bing/int_matrix.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bing {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<bigint> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<bigint>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m.at(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix multiply: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const bigint& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

bigint determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    bigint prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct SnfState {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k)
            return;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a.at(i, j), a.at(k, j));
        for (std::size_t j = 0; j < u.cols(); ++j)
            std::swap(u.at(i, j), u.at(k, j));
    }
    void swap_cols(std::size_t j, std::size_t l) {
        if (j == l)
            return;
        for (std::size_t i = 0; i < a.rows(); ++i)
            std::swap(a.at(i, j), a.at(i, l));
        for (std::size_t i = 0; i < v.rows(); ++i)
            std::swap(v.at(i, j), v.at(i, l));
    }
    // row_i += c * row_k
    void add_row(std::size_t i, std::size_t k, const bigint& c) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.at(i, j) += c * a.at(k, j);
        for (std::size_t j = 0; j < u.cols(); ++j)
            u.at(i, j) += c * u.at(k, j);
    }
    // col_j += c * col_l
    void add_col(std::size_t j, std::size_t l, const bigint& c) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            a.at(i, j) += c * a.at(i, l);
        for (std::size_t i = 0; i < v.rows(); ++i)
            v.at(i, j) += c * v.at(i, l);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.at(i, j) = -a.at(i, j);
        for (std::size_t j = 0; j < u.cols(); ++j)
            u.at(i, j) = -u.at(i, j);
    }

    // Pinned pivot rule: smallest nonzero |entry| in the trailing block,
    // ties by lowest row index, then lowest column index.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        bigint best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                const bigint& e = a.at(i, j);
                if (e == 0)
                    continue;
                bigint mag = abs(e);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

// Truncated quotient keeps remainders small relative to the pivot.
bigint quot(const bigint& a, const bigint& b) {
    return a / b;  // cpp_int division truncates toward zero
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const std::size_t limit = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < limit; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!s.find_pivot(t, pi, pj))
            break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        for (;;) {
            // Reduce column t below the pivot, then row t right of it.
            bool dirty = false;
            for (std::size_t i = t + 1; i < s.a.rows(); ++i) {
                if (s.a.at(i, t) == 0)
                    continue;
                bigint q = quot(s.a.at(i, t), s.a.at(t, t));
                if (q != 0)
                    s.add_row(i, t, -q);
                if (s.a.at(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < s.a.cols(); ++j) {
                if (s.a.at(t, j) == 0)
                    continue;
                bigint q = quot(s.a.at(t, j), s.a.at(t, t));
                if (q != 0)
                    s.add_col(j, t, -q);
                if (s.a.at(t, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                // A remainder survived; it is smaller than the pivot, so
                // re-picking strictly decreases the pivot magnitude.
                std::size_t ni = 0, nj = 0;
                s.find_pivot(t, ni, nj);
                s.swap_rows(t, ni);
                s.swap_cols(t, nj);
                continue;
            }
            // Row and column are clear. Enforce divisibility of the rest.
            bool fixed = false;
            for (std::size_t i = t + 1; i < s.a.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < s.a.cols() && !fixed; ++j)
                    if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                        s.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (s.a.at(t, t) < 0)
            s.negate_row(t);
    }
    return {std::move(s.u), std::move(s.a), std::move(s.v)};
}

std::vector<bigint> SmithDecomposition::diagonal() const {
    std::vector<bigint> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(D.at(i, i));
    return d;
}

std::size_t rank(const IntMatrix& m) {
    auto diag = smith_normal_form(m).diagonal();
    std::size_t r = 0;
    for (const auto& d : diag)
        if (d != 0)
            ++r;
    return r;
}

InvariantFactors invariant_factors(const IntMatrix& m) {
    InvariantFactors out;
    std::size_t r = 0;
    for (const auto& d : smith_normal_form(m).diagonal()) {
        if (d == 0)
            continue;
        ++r;
        if (d == 1)
            ++out.unit_count;
        else
            out.nontrivial.push_back(d);
    }
    out.zero_cols = m.cols() - r;
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    auto diag = snf.diagonal();
    std::size_t r = 0;
    for (const auto& d : diag)
        if (d != 0)
            ++r;
    // M = U^-1 D V^-1, so M x = 0 iff (V^-1 x) is supported on the zero part
    // of D; the matching columns of V are a basis of the kernel.
    IntMatrix basis(m.cols(), m.cols() - r);
    for (std::size_t j = r; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            basis.at(i, j - r) = snf.V.at(i, j);
    return basis;
}

CokernelStructure cokernel_structure(const IntMatrix& m) {
    CokernelStructure out;
    std::size_t r = 0;
    for (const auto& d : smith_normal_form(m).diagonal()) {
        if (d == 0)
            continue;
        ++r;
        if (d > 1)
            out.torsion.push_back(d);
    }
    out.free_rank = m.rows() - r;
    return out;
}

bool submodule_has_primitive(const IntMatrix& s_generators, std::size_t k) {
    if (s_generators.rows() != k)
        throw std::invalid_argument("submodule_has_primitive: generator rows != ambient rank");
    for (const auto& d : smith_normal_form(s_generators).diagonal())
        if (d == 1)
            return true;
    return false;
}

}  // namespace bing
