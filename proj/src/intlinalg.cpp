#include "toric/intlinalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExponentVector IntMatrix::column(std::size_t j) const {
    ExponentVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

ExponentVector IntMatrix::row(std::size_t i) const {
    return ExponentVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::select_columns(const IndexSet& cols) const {
    IntMatrix out(rows_, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] >= cols_) throw std::out_of_range("select_columns: index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, cols[k]);
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::size_t IntMatrix::max_bit_length() const {
    std::size_t b = 0;
    for (const auto& x : data_) b = std::max(b, bit_length(x));
    return b;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

ExponentVector operator*(const IntMatrix& m, const ExponentVector& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    ExponentVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

IntMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    auto tokens_of = [](const std::string& l) {
        std::vector<std::string> out;
        std::istringstream ls(l);
        for (std::string tok; ls >> tok;) out.push_back(tok);
        return out;
    };
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };
    auto next_nonblank = [&](std::vector<std::string>& toks) {
        while (std::getline(in, line)) {
            ++line_no;
            toks = tokens_of(line);
            if (!toks.empty() && toks.front()[0] != '#') return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_nonblank(toks)) throw ParseError("line 1: missing header \"d n\"");
    if (toks.size() != 2) fail("expected header \"d n\"");
    long d = 0;
    long n = 0;
    try {
        d = parse_integer(toks[0]).get_si();
        n = parse_integer(toks[1]).get_si();
    } catch (const ParseError&) {
        fail("header must contain two integers");
    }
    if (d < 0 || n < 0) fail("negative dimension");

    IntMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
    for (long i = 0; i < d; ++i) {
        if (!next_nonblank(toks)) {
            ++line_no;
            fail("expected " + std::to_string(d) + " rows, found " + std::to_string(i));
        }
        if (toks.size() != static_cast<std::size_t>(n)) {
            fail("expected " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
        }
        for (long j = 0; j < n; ++j) {
            try {
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_integer(toks[j]);
            } catch (const ParseError& e) {
                fail(e.what());
            }
        }
    }
    if (next_nonblank(toks)) fail("unexpected trailing content");
    return m;
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

namespace {

// Row/column operations applied simultaneously to D and its transform.
struct SmithWorkspace {
    IntMatrix D, U, W;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
        for (std::size_t i = 0; i < W.rows(); ++i) std::swap(W(i, a), W(i, b));
    }
    // row_dst += f * row_src
    void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(dst, j) += f * D(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
    }
    // col_dst += f * col_src
    void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < D.rows(); ++i) D(i, dst) += f * D(i, src);
        for (std::size_t i = 0; i < W.rows(); ++i) W(i, dst) += f * W(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t d = m.rows();
    const std::size_t n = m.cols();
    SmithWorkspace ws{m, IntMatrix::identity(d), IntMatrix::identity(n)};
    std::size_t rank = 0;

    for (std::size_t t = 0; t < std::min(d, n); ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot: smallest nonzero magnitude in the trailing block.
            std::size_t pi = d, pj = n;
            for (std::size_t i = t; i < d; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const BigInt& x = ws.D(i, j);
                    if (x != 0 && (pi == d || mpz_cmpabs(x.get_mpz_t(), ws.D(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == d) {
                exhausted = true;
                break;
            }
            ws.swap_rows(t, pi);
            ws.swap_cols(t, pj);

            const BigInt pivot = ws.D(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < d; ++i) {
                if (ws.D(i, t) == 0) continue;
                BigInt q = ws.D(i, t) / pivot;  // truncating
                if (q != 0) ws.add_row(i, t, -q);
                if (ws.D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (ws.D(t, j) == 0) continue;
                BigInt q = ws.D(t, j) / pivot;
                if (q != 0) ws.add_col(j, t, -q);
                if (ws.D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block.
            std::size_t bad_row = d;
            for (std::size_t i = t + 1; i < d && bad_row == d; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (ws.D(i, j) % pivot != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == d) break;
            ws.add_row(t, bad_row, 1);
        }
        if (exhausted) break;
        if (ws.D(t, t) < 0) ws.negate_row(t);
        ++rank;
    }
    return {std::move(ws.U), std::move(ws.D), std::move(ws.W), rank};
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

LatticeBasis kernel_lattice_basis(const IntMatrix& m, const IndexSet& support) {
    const IntMatrix sub = m.select_columns(support);
    const SmithDecomposition snf = smith_normal_form(sub);
    LatticeBasis basis;
    for (std::size_t j = snf.rank; j < sub.cols(); ++j) {
        ExponentVector w = snf.W.column(j);
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

ExponentVector lift_to_ambient(const ExponentVector& local, const IndexSet& support, std::size_t n) {
    if (local.size() != support.size()) throw std::invalid_argument("lift_to_ambient: length mismatch");
    ExponentVector out(n);
    for (std::size_t k = 0; k < support.size(); ++k) out.at(support[k]) = local[k];
    return out;
}

std::optional<std::vector<BigInt>> integer_coordinates(const LatticeBasis& basis, const ExponentVector& x) {
    const std::size_t r = basis.size();
    const std::size_t len = x.size();
    IntMatrix b(len, r);
    for (std::size_t k = 0; k < r; ++k) {
        if (basis[k].size() != len) throw std::invalid_argument("integer_coordinates: length mismatch");
        for (std::size_t i = 0; i < len; ++i) b(i, k) = basis[k][i];
    }
    // B y = x  <=>  D (W^-1 y) = U x.
    const SmithDecomposition snf = smith_normal_form(b);
    const ExponentVector ux = snf.U * x;
    ExponentVector z(r);
    for (std::size_t i = 0; i < len; ++i) {
        if (i < snf.rank) {
            if (ux[i] % snf.D(i, i) != 0) return std::nullopt;
            z[i] = ux[i] / snf.D(i, i);
        } else if (ux[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.W * z;
}

}  // namespace toric
