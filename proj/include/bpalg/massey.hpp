#ifndef BPALG_MASSEY_HPP
#define BPALG_MASSEY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpalg/linalg.hpp"

namespace bpalg {

// Triple Massey product in a dga. With W~ = (-1)^{1+deg W} W, choose
// d(U) = X~ Y and d(V) = Y~ Z; then X~ V + U~ Z is a cocycle representing
// <[X],[Y],[Z]>, with indeterminacy [X] H + H [Z].
template <class Cx>
struct MasseyOutcome {
    bool defined = false;
    std::string reason;
    typename Cx::El representative;
    typename Cx::El u, v;
    std::string indeterminacy = "[X]*H + H*[Z]";
};

template <class Cx>
MasseyOutcome<Cx> massey_triple(Cx& cx, const typename Cx::El& x, const typename Cx::El& y,
                                const typename Cx::El& z)
{
    MasseyOutcome<Cx> out;
    if (!cx.is_cocycle(x) || !cx.is_cocycle(y) || !cx.is_cocycle(z)) {
        out.reason = "inputs must be cocycles";
        return out;
    }
    auto xy = cx.mul(cx.bar(x), y);
    auto u = cx.solve_boundary(xy);
    if (!u) {
        out.reason = "[X][Y] != 0";
        return out;
    }
    auto yz = cx.mul(cx.bar(y), z);
    auto v = cx.solve_boundary(yz);
    if (!v) {
        out.reason = "[Y][Z] != 0";
        return out;
    }
    out.representative = cx.add(cx.mul(cx.bar(x), *v), cx.mul(cx.bar(*u), z));
    if (!cx.is_cocycle(out.representative)) {
        out.reason = "representative failed the cocycle check";
        return out;
    }
    out.u = *u;
    out.v = *v;
    out.defined = true;
    return out;
}

// Membership of `target` in the span of `gens` (sparse elements keyed the
// same way), over F_p.
template <class El>
bool element_in_span(int p, const El& target, const std::vector<El>& gens)
{
    std::map<typename El::key_type, int> index;
    for (auto& g : gens)
        for (auto& [k, c] : g)
            index.emplace(k, 0);
    for (auto& [k, c] : target)
        index.emplace(k, 0);
    int n = 0;
    for (auto& [k, v] : index)
        v = n++;
    if (n == 0)
        return true;
    FpSpace span(p, n);
    for (auto& g : gens) {
        FpVec row(size_t(n), 0);
        for (auto& [k, c] : g)
            row[size_t(index[k])] = fp_norm(c, p);
        span.add(std::move(row));
    }
    FpVec t(size_t(n), 0);
    for (auto& [k, c] : target)
        t[size_t(index[k])] = fp_norm(c, p);
    return span.contains(t);
}

}  // namespace bpalg

#endif
