#include "clusterforge/reflections.hpp"

#include "clusterforge/cluster.hpp"

namespace clusterforge {

ReflectionContext make_reflection(const Quiver& q, size_t sink) {
    if (!q.is_sink(sink)) throw DomainError("make_reflection: vertex is not a sink");
    return {q, sink, reflect_quiver(q, sink)};
}

namespace {

// The summed incoming map g : (+)_{a: j->i} M(j) -> M(i), with bookkeeping
// of the column block belonging to each arrow.
struct IncomingMap {
    RationalMatrix g;
    std::vector<size_t> arrow_ids;
    std::vector<size_t> block_offset;
    size_t total_cols = 0;
};

IncomingMap incoming_map(const Representation& m, size_t i) {
    const Quiver& q = m.quiver();
    IncomingMap in;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        auto [s, t] = q.arrows()[a];
        (void)s;
        if ((size_t)t != i) continue;
        in.arrow_ids.push_back(a);
        in.block_offset.push_back(in.total_cols);
        in.total_cols += m.map(a).cols();
    }
    in.g = RationalMatrix((size_t)m.dims()[i], in.total_cols);
    for (size_t k = 0; k < in.arrow_ids.size(); ++k) {
        const RationalMatrix& ma = m.map(in.arrow_ids[k]);
        for (size_t r = 0; r < ma.rows(); ++r)
            for (size_t c = 0; c < ma.cols(); ++c) in.g.at(r, in.block_offset[k] + c) = ma.at(r, c);
    }
    return in;
}

} // namespace

long long simple_summand_multiplicity(const Representation& m, size_t i) {
    if (!m.quiver().is_sink(i)) throw DomainError("simple_summand_multiplicity: not a sink");
    IncomingMap in = incoming_map(m, i);
    return m.dims()[i] - (long long)in.g.rank();
}

Representation bgp_reflect(const ReflectionContext& ctx, const Representation& m) {
    if (!(m.quiver() == ctx.source)) throw DomainError("bgp_reflect: wrong quiver");
    size_t i = ctx.sink;
    IncomingMap in = incoming_map(m, i);
    std::vector<std::vector<Rat>> kernel = in.g.nullspace();
    size_t newdim = kernel.size();

    DimVec dims = m.dims();
    dims[i] = (long long)newdim;
    std::vector<RationalMatrix> maps;
    for (size_t a = 0; a < ctx.target.num_arrows(); ++a) {
        auto [s, t] = ctx.target.arrows()[a];
        if ((size_t)s == i) {
            // reversed arrow: project kernel vectors onto the block of a
            size_t block = 0;
            while (in.arrow_ids[block] != a) ++block;
            size_t off = in.block_offset[block];
            size_t bcols = m.map(a).cols();
            RationalMatrix mat(bcols, newdim);
            for (size_t col = 0; col < newdim; ++col)
                for (size_t r = 0; r < bcols; ++r) mat.at(r, col) = kernel[col][off + r];
            maps.push_back(std::move(mat));
        } else {
            (void)t;
            maps.push_back(m.map(a));
        }
    }
    return Representation(ctx.target, dims, std::move(maps), m.field());
}

DecoratedObject extended_reflect(const ReflectionContext& ctx, const DecoratedObject& obj) {
    if (!(obj.quiver() == ctx.source)) throw DomainError("extended_reflect: wrong quiver");
    size_t i = ctx.sink;
    long long simple_mult = simple_summand_multiplicity(obj.module, i);

    Representation reflected = bgp_reflect(ctx, obj.module); // kills the S_i part
    if (obj.shifts[i] > 0) {
        Representation extra = Representation::simple(ctx.target, i);
        for (long long k = 0; k < obj.shifts[i]; ++k) reflected = direct_sum(reflected, extra);
    }
    DimVec shifts = obj.shifts;
    shifts[i] = simple_mult; // S_i summands turn into P_i[1]
    return DecoratedObject(std::move(reflected), std::move(shifts));
}

bool verify_reflection_compatibility(const ReflectionContext& ctx, const DecoratedObject& obj) {
    LaurentPolynomial lhs = canonical_isomorphism(ctx.source, ctx.sink, cc_map(obj));
    LaurentPolynomial rhs = cc_map(extended_reflect(ctx, obj));
    return lhs == rhs;
}

} // namespace clusterforge
