/**
 * Independent test oracles. Betti numbers here come from plain fraction-free
 * rational Gaussian elimination over the boundary matrices, written without
 * reference to the SNF path they cross-check.
 */

#ifndef CUTCERT_TESTS_ORACLE_HPP
#define CUTCERT_TESTS_ORACLE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "cutcert/complex.hpp"
#include "cutcert/homology.hpp"

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

// rank over Q by straightforward elimination
inline int rational_rank(const cutcert::IntegerMatrix& A) {
    std::vector<std::vector<Rat>> m(A.rows, std::vector<Rat>(A.cols));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) m[i][j] = Rat(A.at(i, j));
    int rank = 0;
    for (int col = 0; col < A.cols && rank < A.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < A.rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int i = rank + 1; i < A.rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (int j = col; j < A.cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<long long> betti_numbers(const cutcert::SimplicialComplex& K) {
    int d = K.dimension;
    std::vector<int> rank(d + 2, 0);
    for (int k = 1; k <= d; ++k) rank[k] = rational_rank(cutcert::boundary_matrix(K, k));
    std::vector<long long> betti(d + 1);
    for (int k = 0; k <= d; ++k) betti[k] = K.count(k) - rank[k] - rank[k + 1];
    return betti;
}

}  // namespace oracle

#endif  // CUTCERT_TESTS_ORACLE_HPP
