/*
 * Copyright 2026 The cdwork Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cdwork/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SparseCore>

namespace cdwork {

void fix_gauge(CMatrix& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        auto col = vectors.col(c);
        double best = 0.0;
        for (Eigen::Index r = 0; r < col.size(); ++r) best = std::max(best, std::abs(col(r)));
        if (best == 0.0) continue;
        // Lowest index within rounding of the maximum, so ties do not depend on solver noise.
        Eigen::Index pick = 0;
        for (Eigen::Index r = 0; r < col.size(); ++r) {
            if (std::abs(col(r)) >= best * (1.0 - 1e-10)) {
                pick = r;
                break;
            }
        }
        const Complex phase = std::conj(col(pick)) / std::abs(col(pick));
        col *= phase;
        col(pick) = Complex(col(pick).real(), 0.0);
    }
}

namespace {

// Connected components of the nonzero pattern; exact zeros only.
std::vector<std::vector<Eigen::Index>> coupled_blocks(const CMatrix& m) {
    const Eigen::Index d = m.rows();
    std::vector<Eigen::Index> label(static_cast<std::size_t>(d), -1);
    std::vector<std::vector<Eigen::Index>> blocks;
    for (Eigen::Index seed = 0; seed < d; ++seed) {
        if (label[static_cast<std::size_t>(seed)] >= 0) continue;
        const auto id = static_cast<Eigen::Index>(blocks.size());
        std::vector<Eigen::Index> members{seed};
        label[static_cast<std::size_t>(seed)] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            const Eigen::Index r = members[head];
            for (Eigen::Index c = 0; c < d; ++c) {
                if (label[static_cast<std::size_t>(c)] < 0 && m(r, c) != Complex(0.0, 0.0)) {
                    label[static_cast<std::size_t>(c)] = id;
                    members.push_back(c);
                }
            }
        }
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }
    return blocks;
}

void diagonalize_block(const CMatrix& full, bool real, const std::vector<Eigen::Index>& idx, RVector& values,
                       CMatrix& vectors) {
    const auto n = static_cast<Eigen::Index>(idx.size());
    CMatrix block(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) block(i, j) = full(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    if (real) {
        Eigen::SelfAdjointEigenSolver<RMatrix> solver(block.real());
        values = solver.eigenvalues();
        vectors = solver.eigenvectors().cast<Complex>();
    } else {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(block);
        values = solver.eigenvalues();
        vectors = solver.eigenvectors();
    }
}

}  // namespace

Spectrum spectrum(const HermitianOperator& h) {
    Spectrum s;
    const CMatrix& m = h.matrix();
    const Eigen::Index d = m.rows();
    const auto blocks = coupled_blocks(m);
    if (blocks.size() <= 1) {
        diagonalize_block(m, h.is_real(), blocks.empty() ? std::vector<Eigen::Index>{} : blocks.front(),
                          s.eigenvalues, s.eigenvectors);
    } else {
        // Independent blocks (e.g. parity sectors), merged in ascending order.
        struct Entry {
            double value;
            std::size_t block;
            Eigen::Index column;
        };
        std::vector<Entry> entries;
        std::vector<RVector> values(blocks.size());
        std::vector<CMatrix> vectors(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            diagonalize_block(m, h.is_real(), blocks[b], values[b], vectors[b]);
            for (Eigen::Index c = 0; c < values[b].size(); ++c) entries.push_back({values[b](c), b, c});
        }
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry& a, const Entry& b) { return a.value < b.value; });
        s.eigenvalues.resize(d);
        s.eigenvectors = CMatrix::Zero(d, d);
        for (Eigen::Index k = 0; k < d; ++k) {
            const Entry& e = entries[static_cast<std::size_t>(k)];
            s.eigenvalues(k) = e.value;
            const auto& idx = blocks[e.block];
            for (std::size_t r = 0; r < idx.size(); ++r)
                s.eigenvectors(idx[r], k) = vectors[e.block](static_cast<Eigen::Index>(r), e.column);
        }
    }
    fix_gauge(s.eigenvectors);
    s.norm = s.eigenvalues.size() == 0 ? 0.0 : s.eigenvalues.cwiseAbs().maxCoeff();
    const double gap_floor = Spectrum::kDegeneracyTolerance * s.norm;
    for (Eigen::Index n = 1; n < s.eigenvalues.size(); ++n)
        if (s.eigenvalues(n) - s.eigenvalues(n - 1) < gap_floor) s.degenerate_gauge = true;
    return s;
}

RVector rayleigh_quotients(const HermitianOperator& h, const Spectrum& s) {
    const Eigen::SparseMatrix<Complex> sparse = h.matrix().sparseView();
    const CMatrix hv = sparse * s.eigenvectors;
    return s.eigenvectors.conjugate().cwiseProduct(hv).colwise().sum().real().transpose();
}

double spectral_residual(const HermitianOperator& h, const Spectrum& s) {
    const CMatrix r = h.matrix() * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
    return r.colwise().norm().maxCoeff();
}

CMatrix evolution_operator(const Spectrum& s, double dt) {
    CVector phases(s.eigenvalues.size());
    for (Eigen::Index n = 0; n < phases.size(); ++n) phases(n) = std::exp(Complex(0.0, -s.eigenvalues(n) * dt));
    return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

}  // namespace cdwork
