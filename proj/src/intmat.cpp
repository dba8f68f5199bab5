#include "ribbon/intmat.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>

namespace ribbon {

using boost::multiprecision::cpp_rational;

IntMat IntMat::transpose() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMat::mul shape");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            std::int64_t v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMat IntMat::gram() const { return transpose().mul(*this); }

bool IntMat::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string IntMat::to_string() const {
    std::ostringstream s;
    for (int i = 0; i < rows; ++i) {
        s << (i ? "\n[" : "[");
        for (int j = 0; j < cols; ++j) s << (j ? " " : "") << at(i, j);
        s << "]";
    }
    return s.str();
}

int rank(const IntMat& m) {
    int r = m.rows, c = m.cols;
    std::vector<BigInt> w((size_t)r * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) w[(size_t)i * c + j] = m.at(i, j);
    auto W = [&](int i, int j) -> BigInt& { return w[(size_t)i * c + j]; };

    int rk = 0;
    BigInt prev = 1;
    for (int col = 0; col < c && rk < r; ++col) {
        int piv = -1;
        for (int i = rk; i < r; ++i)
            if (W(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = 0; j < c; ++j) std::swap(W(piv, j), W(rk, j));
        for (int i = rk + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j)
                W(i, j) = (W(rk, col) * W(i, j) - W(i, col) * W(rk, j)) / prev;
            W(i, col) = 0;
        }
        prev = W(rk, col);
        ++rk;
    }
    return rk;
}

BigInt det(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<BigInt> w((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[(size_t)i * n + j] = m.at(i, j);
    auto W = [&](int i, int j) -> BigInt& { return w[(size_t)i * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (W(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (W(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(W(piv, j), W(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                W(i, j) = (W(k, k) * W(i, j) - W(i, k) * W(k, j)) / prev;
        prev = W(k, k);
    }
    return sign > 0 ? W(n - 1, n - 1) : -W(n - 1, n - 1);
}

bool is_psd(const IntMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_psd: not symmetric");
    int n = m.rows;
    std::vector<cpp_rational> w((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[(size_t)i * n + j] = m.at(i, j);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    auto W = [&](int i, int j) -> cpp_rational& {
        return w[(size_t)idx[i] * n + idx[j]];
    };

    for (int k = 0; k < n; ++k) {
        // diagonal pivoting: pick a positive diagonal entry
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (W(i, i) > 0) { piv = i; break; }
        if (piv < 0) {
            // all remaining diagonal entries <= 0; PSD requires the whole
            // remaining block to vanish
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (W(i, j) != 0) return false;
            return true;
        }
        std::swap(idx[k], idx[piv]);
        cpp_rational d = W(k, k);
        for (int i = k + 1; i < n; ++i) {
            cpp_rational f = W(i, k) / d;
            if (f == 0) continue;
            for (int j = k + 1; j < n; ++j) W(i, j) -= f * W(k, j);
        }
        for (int i = k + 1; i < n; ++i) W(i, k) = W(k, i) = 0;
    }
    return true;
}

}  // namespace ribbon
