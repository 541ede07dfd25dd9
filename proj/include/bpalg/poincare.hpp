#ifndef BPALG_POINCARE_HPP
#define BPALG_POINCARE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bpalg {

// Degreewise dimension counts c[0..N]; truncation is exact below N.
struct PoincareSeries {
    std::vector<long long> c;

    PoincareSeries() = default;
    explicit PoincareSeries(int cutoff) : c(size_t(cutoff) + 1, 0) {}

    int cutoff() const { return int(c.size()) - 1; }
    long long at(int d) const { return (d >= 0 && d < int(c.size())) ? c[size_t(d)] : 0; }

    static PoincareSeries one(int cutoff)
    {
        PoincareSeries s(cutoff);
        s.c[0] = 1;
        return s;
    }

    // 1/(1-t^d) truncated: a polynomial generator of degree d.
    static PoincareSeries geometric(int d, int cutoff)
    {
        PoincareSeries s(cutoff);
        for (int k = 0; k * d <= cutoff; ++k)
            s.c[size_t(k * d)] = 1;
        if (d == 0)
            s.c[0] = 1;
        return s;
    }

    // 1+t^d: an exterior generator.
    static PoincareSeries exterior(int d, int cutoff)
    {
        PoincareSeries s(cutoff);
        s.c[0] = 1;
        if (d <= cutoff)
            s.c[size_t(d)] += (d == 0 ? 0 : 1);
        return s;
    }

    // 1+t^d+...+t^{(h-1)d}: a height-h truncated generator.
    static PoincareSeries truncated(int d, int h, int cutoff)
    {
        PoincareSeries s(cutoff);
        for (int k = 0; k < h && k * d <= cutoff; ++k)
            s.c[size_t(k * d)] += 1;
        return s;
    }

    PoincareSeries mul(const PoincareSeries& o) const
    {
        int n = std::min(cutoff(), o.cutoff());
        PoincareSeries r(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                r.c[size_t(i + j)] += at(i) * o.at(j);
        return r;
    }

    PoincareSeries truncate(int n) const
    {
        PoincareSeries r(n);
        for (int d = 0; d <= n; ++d)
            r.c[size_t(d)] = at(d);
        return r;
    }

    bool operator==(const PoincareSeries& o) const { return c == o.c; }

    // First degree <= min cutoff where the two disagree, or -1.
    int first_mismatch(const PoincareSeries& o) const
    {
        int n = std::min(cutoff(), o.cutoff());
        for (int d = 0; d <= n; ++d)
            if (at(d) != o.at(d))
                return d;
        return -1;
    }
};

}  // namespace bpalg

#endif
