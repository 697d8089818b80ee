#pragma once

#include "endo/clans.hpp"

#include <vector>

namespace endo {

namespace detail {

template <typename F>
int profile_inter_dim(const Mat<F> &A, const Mat<F> &B) {
    if (A.cols() == 0 || B.cols() == 0) return 0;
    return A.cols() + B.cols() - rank(Mat<F>::hcat(A, B));
}

template <typename F>
Mat<F> profile_prefix(const Mat<F> &m, int k) {
    Mat<F> r(m.rows(), k);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < k; ++j) r(i, j) = m(i, j);
    return r;
}

// basis (as columns) of F_j intersected with the coordinate subspace `keep`
// (complement rows `kill` must vanish)
template <typename F>
Mat<F> prefix_cap_coords(const Mat<F> &flag, int j, const std::vector<int> &kill) {
    int n = flag.rows();
    if (j == 0) return Mat<F>(n, 0);
    Mat<F> rows(static_cast<int>(kill.size()), j);
    for (size_t r = 0; r < kill.size(); ++r)
        for (int c = 0; c < j; ++c) rows(static_cast<int>(r), c) = flag(kill[r], c);
    auto ker = kernel_basis(rows);
    Mat<F> out(n, static_cast<int>(ker.size()));
    for (size_t k = 0; k < ker.size(); ++k)
        for (int i = 0; i < n; ++i) {
            F acc(0);
            for (int c = 0; c < j; ++c) acc += flag(i, c) * ker[k][c];
            out(i, static_cast<int>(k)) = acc;
        }
    return out;
}

} // namespace detail

// Full orbit profile of a complete flag with respect to the coordinate split
// given by plus_coords / minus_coords.
template <typename F>
ClanProfile flag_profile_on_coords(const Mat<F> &flag, const std::vector<int> &plus_coords,
                                   const std::vector<int> &minus_coords) {
    using detail::prefix_cap_coords;
    using detail::profile_inter_dim;
    using detail::profile_prefix;
    int n = flag.rows();
    ClanProfile pr;
    pr.n = n;
    Mat<F> Vp(n, static_cast<int>(plus_coords.size()));
    for (size_t i = 0; i < plus_coords.size(); ++i) Vp(plus_coords[i], static_cast<int>(i)) = F(1);
    Mat<F> Vm(n, static_cast<int>(minus_coords.size()));
    for (size_t i = 0; i < minus_coords.size(); ++i) Vm(minus_coords[i], static_cast<int>(i)) = F(1);
    Mat<F> theta_flag = flag;
    for (int mc : minus_coords)
        for (int j = 0; j < n; ++j) theta_flag(mc, j) = F(0) - flag(mc, j);

    pr.dim_plus.resize(n);
    pr.dim_minus.resize(n);
    pr.dim_u.assign(n, std::vector<int>(n, 0));
    pr.dim_v.assign(n, std::vector<int>(n, 0));
    pr.dim_theta.assign(n, std::vector<int>(n, 0));

    std::vector<Mat<F>> prefixes(n + 1, Mat<F>(n, 0));
    for (int i = 1; i <= n; ++i) prefixes[i] = profile_prefix(flag, i);

    for (int i = 1; i <= n; ++i) {
        pr.dim_plus[i - 1] = profile_inter_dim(prefixes[i], Vp);
        pr.dim_minus[i - 1] = profile_inter_dim(prefixes[i], Vm);
    }
    for (int j = 1; j <= n; ++j) {
        Mat<F> in_plus = prefix_cap_coords(flag, j, minus_coords); // F_j cap V+
        Mat<F> in_minus = prefix_cap_coords(flag, j, plus_coords); // F_j cap V-
        Mat<F> Uj = Mat<F>::hcat(in_plus, Vm);
        Mat<F> Wj = Mat<F>::hcat(in_minus, Vp);
        Mat<F> Tj = profile_prefix(theta_flag, j);
        for (int i = 1; i <= n; ++i) {
            pr.dim_u[i - 1][j - 1] = profile_inter_dim(prefixes[i], Uj);
            pr.dim_v[i - 1][j - 1] = profile_inter_dim(prefixes[i], Wj);
            pr.dim_theta[i - 1][j - 1] = profile_inter_dim(prefixes[i], Tj);
        }
    }
    return pr;
}

} // namespace endo
