#include "gpoly/substitutions.hpp"

#include "gpoly/errors.hpp"

#include <map>

namespace gpoly {

ZPoly d_bullet(int w, int d)
{
    if (!Mark{w, d}.valid())
        throw InvalidInput("d_bullet needs a mark, got " + to_string(Mark{w, d}));
    ZPoly out;
    for (int i = 0; i <= d; ++i) {
        BigInt c = binomial(d, i);
        out.add(ZMonomial::z(w - i, 0) * ZMonomial::z(1, 0, i), i % 2 ? BigInt(-c) : c);
    }
    return out;
}

namespace {

class Undotter {
public:
    const ZPoly& power(Mark m, int e)
    {
        auto key = std::make_tuple(m.w, m.d, e);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, d_bullet(m.w, m.d).pow(static_cast<unsigned>(e))).first;
        return it->second;
    }

    ZPoly term(const ZMonomial& m)
    {
        ZPoly prod = ZPoly::monomial(ZMonomial::y(m.y_exp()));
        for (const auto& f : m.factors()) {
            if (f.d == 0)
                prod = prod * ZPoly::monomial(ZMonomial::z(f.w, 0, f.e));
            else
                prod = prod * power({f.w, f.d}, f.e);
        }
        return prod;
    }

private:
    std::map<std::tuple<int, int, int>, ZPoly> cache_;
};

} // namespace

ZPoly undot(const ZPoly& f)
{
    Undotter u;
    ZPoly out;
    for (const auto& [m, c] : f.terms()) {
        ZPoly t = u.term(m);
        for (const auto& [mm, cc] : t.terms())
            out.add(mm, c * cc);
    }
    return out;
}

ZPoly forget_dots(const ZPoly& f)
{
    ZPoly out;
    for (const auto& [m, c] : f.terms()) {
        ZMonomial r = ZMonomial::y(m.y_exp());
        for (const auto& fac : m.factors())
            r = r * ZMonomial::z(fac.w, 0, fac.e);
        out.add(r, c);
    }
    return out;
}

ZPoly drop_z1(const ZPoly& f)
{
    ZPoly out;
    for (const auto& [m, c] : f.terms())
        if (m.exponent({1, 0}) == 0)
            out.add(m, c);
    return out;
}

SymFn subst_star(const ZPoly& f)
{
    SymFn out(Basis::st);
    for (const auto& [m, c] : f.terms()) {
        if (m.y_exp() > 0)
            continue;
        Partition lam;
        for (const auto& fac : m.factors()) {
            if (fac.d != 0)
                throw InvalidInput("subst_star: dotted variable z[" + std::to_string(fac.w) + "," +
                                   std::to_string(fac.d) + "]");
            lam.insert(lam.end(), static_cast<std::size_t>(fac.e), fac.w);
        }
        out.add(lam, c);
    }
    return out;
}

ZPoly star_to_zpoly(const SymFn& f)
{
    if (!f.is_zero() && f.basis() != Basis::st)
        throw InvalidInput("star_to_zpoly needs an st-expansion");
    ZPoly out;
    for (const auto& [lam, c] : f.terms()) {
        ZMonomial m;
        for (int part : lam)
            m = m * ZMonomial::z(part, 0);
        out.add(m, c);
    }
    return out;
}

bool undot_is_cancellation_free(const ZPoly& f)
{
    Undotter u;
    std::unordered_map<ZMonomial, int, ZMonomialHash> sign_seen;
    for (const auto& [m, c] : f.terms()) {
        ZPoly t = u.term(m);
        for (const auto& [mm, cc] : t.terms()) {
            int s = (cc * c) > 0 ? 1 : -1;
            auto [it, inserted] = sign_seen.try_emplace(mm, s);
            if (!inserted && it->second != s)
                return false;
        }
    }
    return true;
}

std::pair<ZPoly, ZPoly> undot_nonuniqueness_demo()
{
    ZPoly f = ZPoly::z(4, 1) * ZPoly::z(5, 2) + ZPoly::z(4, 2) * ZPoly::z(5, 2);
    ZPoly g = ZPoly::z(4, 1) * ZPoly::z(5, 3) + ZPoly::z(4, 2) * ZPoly::z(5, 1);
    return {f, g};
}

} // namespace gpoly
