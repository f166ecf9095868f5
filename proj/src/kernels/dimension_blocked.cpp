#include "l2k/dimension.hpp"
#include "l2k/errors.hpp"
#include "kernels/partition.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

namespace l2k {

namespace {

Scalar conj_dot(const SparseVec& a, const SparseVec& b)
{
    Scalar sum;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += ia->second.conj() * ib->second;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

struct BlockResult {
    Scalar algebraic;
    Scalar l2;
    std::size_t rank = 0;
};

class BlockSolver {
public:
    BlockSolver(const ColumnSource& src, const detail::RowPartition& part, std::size_t block)
        : src_(src), part_(part), alg_(*src.algebra()), d_(alg_.dim()), rows_(part.rows[block]), block_(block),
          pivot_of_(rows_.size(), -1)
    {
    }

    BlockResult run(Route route)
    {
        eliminate();
        BlockResult out;
        out.rank = basis_.size();
        if (route == Route::Algebraic || route == Route::Both) out.algebraic = density_trace();
        if (route == Route::L2 || route == Route::Both) out.l2 = gns_trace();
        return out;
    }

private:
    SparseVec to_local(const SparseVec& global) const
    {
        SparseVec v;
        v.reserve(global.size());
        for (const auto& [g, x] : global) v.emplace_back(part_.local_of_row[g], x);
        return v;
    }

    // Leading-entry reduction; returns the residue (empty if in the span).
    void reduce(SparseVec& v) const
    {
        while (!v.empty()) {
            const int k = pivot_of_[v.front().first];
            if (k < 0) return;
            const Scalar coeff = v.front().second;
            v = sparse_axpy(v, -coeff, basis_[static_cast<std::size_t>(k)]);
        }
    }

    void eliminate()
    {
        SparseVec col;
        for (std::uint32_t c : part_.cols[block_]) {
            if (basis_.size() == rows_.size()) break;  // block already spanned
            src_.column(c, col);
            SparseVec v = to_local(col);
            reduce(v);
            if (v.empty()) continue;
            const Scalar inv = v.front().second.inverse();
            pivot_of_[v.front().first] = static_cast<int>(basis_.size());
            basis_.push_back(sparse_scale(v, inv));
        }
    }

    // Apply left multiplication by the density element to a local vector.
    SparseVec density_apply(const SparseVec& w, SparseAccumulator& acc) const
    {
        for (const auto& [loc, x] : w) {
            const std::uint32_t g = rows_[loc];
            const std::uint32_t slot_base = g - g % static_cast<std::uint32_t>(d_);
            for (const auto& [s, cv] : alg_.density_action()[g % d_]) acc.add(part_.local_of_row[slot_base + s], x * cv);
        }
        return acc.take();
    }

    SparseVec gram_apply(const SparseVec& w, SparseAccumulator& acc) const
    {
        for (const auto& [loc, x] : w) {
            const std::uint32_t g = rows_[loc];
            const std::uint32_t slot_base = g - g % static_cast<std::uint32_t>(d_);
            // (G w)_s = Σ_{s'} G[s][s'] w_{s'}, and G[s][s'] = conj(G[s'][s]).
            for (const auto& [s, gv] : alg_.gram_rows()[g % d_]) acc.add(part_.local_of_row[slot_base + s], gv.conj() * x);
        }
        return acc.take();
    }

    Scalar density_trace() const
    {
        Scalar trace;
        if (alg_.diagonal_coupling()) {
            // W_P is triangular and C diagonal, so Tr(C|W) = Σ over pivot rows.
            for (std::size_t loc = 0; loc < rows_.size(); ++loc) {
                if (pivot_of_[loc] < 0) continue;
                const std::uint32_t s = rows_[loc] % static_cast<std::uint32_t>(d_);
                trace += alg_.density_action()[s].front().second;
            }
            return trace;
        }
        SparseAccumulator acc(rows_.size());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            SparseVec u = density_apply(basis_[k], acc);
            while (!u.empty()) {
                const int m = pivot_of_[u.front().first];
                if (m < 0) throw InvariantViolation("image is not invariant under the density element");
                const Scalar coeff = u.front().second;
                if (static_cast<std::size_t>(m) == k) trace += coeff;
                u = sparse_axpy(u, -coeff, basis_[static_cast<std::size_t>(m)]);
            }
        }
        return trace;
    }

    Scalar gns_trace() const
    {
        const std::size_t r = basis_.size();
        if (r == 0) return {};
        SparseAccumulator acc(rows_.size());
        std::vector<SparseVec> gw(r);
        for (std::size_t b = 0; b < r; ++b) gw[b] = gram_apply(basis_[b], acc);
        ScalarMatrix k(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a; b < r; ++b) {
                k(a, b) = conj_dot(basis_[a], gw[b]);
                if (a != b) k(b, a) = k(a, b).conj();
            }

        // Ĝ·(unit in slot j), restricted to this block, for every slot met.
        SparseVec gunit;
        {
            SparseAccumulator g(d_);
            for (const auto& [q, uv] : alg_.unit())
                for (const auto& [s, gv] : alg_.gram_rows()[q]) g.add(s, gv.conj() * uv);
            gunit = g.take();
        }
        std::vector<std::uint32_t> slots;
        for (std::uint32_t g : rows_) slots.push_back(g / static_cast<std::uint32_t>(d_));
        slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

        std::vector<SparseVec> z;
        for (std::uint32_t j : slots) {
            SparseVec v;
            for (const auto& [s, x] : gunit) {
                const std::size_t g = static_cast<std::size_t>(j) * d_ + s;
                if (part_.block_of_row[g] == block_) v.emplace_back(part_.local_of_row[g], x);
            }
            if (!v.empty()) z.push_back(std::move(v));
        }
        ScalarMatrix vm(r, z.size());
        for (std::size_t t = 0; t < z.size(); ++t)
            for (std::size_t a = 0; a < r; ++a) vm(a, t) = conj_dot(basis_[a], z[t]);
        const auto x = solve_linear(k, vm);
        if (!x) throw InvariantViolation("GNS Gram matrix of the image is singular");
        Scalar sum;
        for (std::size_t t = 0; t < z.size(); ++t)
            for (std::size_t a = 0; a < r; ++a)
                if (!vm(a, t).is_zero()) sum += vm(a, t).conj() * (*x)(a, t);
        return sum;
    }

    const ColumnSource& src_;
    const detail::RowPartition& part_;
    const TracialAlgebra& alg_;
    const std::size_t d_;
    const std::vector<std::uint32_t>& rows_;
    const std::size_t block_;
    std::vector<int> pivot_of_;
    std::vector<SparseVec> basis_;
};

}  // namespace

ImageDimension image_dimension(const ColumnSource& columns, Route route)
{
    const detail::RowPartition part = detail::partition_rows(columns);
    const std::size_t nb = part.rows.size();
    std::vector<BlockResult> results(nb);
    std::vector<std::exception_ptr> errors(nb);

    // Largest blocks first for load balance; summation order stays fixed.
    std::vector<std::size_t> order(nb);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return part.cols[a].size() > part.cols[b].size(); });

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(nb); ++n) {
        const std::size_t b = order[static_cast<std::size_t>(n)];
        try {
            results[b] = BlockSolver(columns, part, b).run(route);
        } catch (...) {
            errors[b] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Scalar alg, l2;
    ImageDimension out;
    out.blocks = nb;
    for (const auto& r : results) {
        alg += r.algebraic;
        l2 += r.l2;
        out.scalar_rank += r.rank;
    }
    out.algebraic = require_real(alg, "algebraic image dimension");
    out.l2 = require_real(l2, "L2 image dimension");
    return out;
}

Rational dim_image(const ModuleMap& t)
{
    return image_dimension(ModuleMapColumns(t), Route::Algebraic).algebraic;
}

Rational dim_image_l2(const ModuleMap& t)
{
    return image_dimension(ModuleMapColumns(t), Route::L2).l2;
}

}  // namespace l2k
