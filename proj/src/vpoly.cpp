#include "gpoly/vpoly.hpp"

#include <sstream>

namespace gpoly {

SemigroupSpec<Mark> mark_semigroup()
{
    return {[](const Mark& a, const Mark& b) { return dot_sum(a, b); },
            [](const Mark& m) { return std::to_string(m.w) + "," + std::to_string(m.d); }};
}

SemigroupSpec<int> weight_semigroup()
{
    return {[](const int& a, const int& b) { return a + b; }, [](const int& w) { return std::to_string(w); }};
}

std::map<int, Mark> mark_labels(const MarkedGraph& g)
{
    std::map<int, Mark> out;
    for (const Vertex& v : g.vertices())
        out[v.id] = v.mark;
    return out;
}

std::map<int, int> weight_labels(const MarkedGraph& g)
{
    std::map<int, int> out;
    for (const Vertex& v : g.vertices())
        out[v.id] = v.mark.w;
    return out;
}

namespace {

std::string monomial_text(const std::vector<std::string>& z, const std::vector<int>& gamma)
{
    std::string s;
    for (int e : gamma)
        s += (s.empty() ? "" : "*") + std::string("g[") + std::to_string(e) + "]";
    std::size_t i = 0;
    while (i < z.size()) {
        std::size_t j = i;
        while (j < z.size() && z[j] == z[i])
            ++j;
        s += (s.empty() ? "" : "*") + std::string("z[") + z[i] + "]";
        if (j - i > 1)
            s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

template <class C>
void append_term(std::string& out, const C& c, const std::string& mono)
{
    bool neg = c < 0;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    C a = neg ? C(-c) : c;
    out += to_string(a);
    if (!mono.empty())
        out += "*" + mono;
}

} // namespace

std::string to_string(const VPoly& v)
{
    std::string out;
    for (const auto& [m, c] : v)
        append_term(out, c, monomial_text(m.z, m.gamma));
    return out.empty() ? "0" : out;
}

std::string to_string(const VValue& v)
{
    std::string out;
    for (const auto& [z, c] : v)
        append_term(out, c, monomial_text(z, {}));
    return out.empty() ? "0" : out;
}

VValue evaluate_gamma(const VPoly& v, const EdgeWeights& gamma)
{
    VValue out;
    for (const auto& [m, c] : v) {
        Rational r = c;
        for (int e : m.gamma)
            r *= gamma.at(e);
        out[m.z] += r;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

ZPoly mark_vpoly_at_y(const VPoly& v)
{
    ZPoly y1 = ZPoly::y() - ZPoly(1);
    ZPoly out;
    for (const auto& [m, c] : v) {
        ZMonomial zm;
        for (const auto& key : m.z) {
            int w = 0, d = 0;
            char comma = 0;
            std::istringstream is(key);
            is >> w >> comma >> d;
            zm = zm * ZMonomial::z(w, d);
        }
        out += ZPoly::monomial(zm, c) * y1.pow(static_cast<unsigned>(m.gamma.size() + m.z.size()));
    }
    return out;
}

} // namespace gpoly
