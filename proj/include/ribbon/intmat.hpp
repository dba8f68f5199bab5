#pragma once
// Exact integer matrix utilities (small dense symmetric matrices).
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>
#include <cstdint>
#include <string>

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with int64 entries. Everything in this project is
// tiny (<= ~30x30, small entries); exact arithmetic uses BigInt internally
// where intermediate growth matters.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    std::int64_t& at(int i, int j) { return a[(size_t)i * cols + j]; }
    std::int64_t at(int i, int j) const { return a[(size_t)i * cols + j]; }

    bool operator==(const IntMat&) const = default;

    IntMat transpose() const;
    IntMat mul(const IntMat& o) const;       // this * o
    IntMat gram() const;                     // transpose() * this
    bool is_symmetric() const;
    std::string to_string() const;
};

// Rank over Q (fraction-free Gaussian elimination).
int rank(const IntMat& m);

// Determinant of a square matrix (Bareiss).
BigInt det(const IntMat& m);

// Exact test: symmetric matrix positive semidefinite?
// (All principal leading minors after symmetric pivoting are >= 0; done via
// rational LDL^T with diagonal pivoting.)
bool is_psd(const IntMat& m);

}  // namespace ribbon
