#include "gpoly/zpoly.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gpoly {

namespace {

bool factor_before(const ZFactor& a, const ZFactor& b)
{
    if (a.w != b.w)
        return a.w > b.w;
    return a.d > b.d;
}

} // namespace

ZMonomial ZMonomial::z(int w, int d, int e)
{
    if (!Mark{w, d}.valid())
        throw InvalidInput("z index is not a mark: " + to_string(Mark{w, d}));
    ZMonomial m;
    if (e < 0)
        throw InvalidInput("negative exponent");
    if (e > 0)
        m.factors_.push_back({w, d, e});
    return m;
}

ZMonomial ZMonomial::y(int k)
{
    if (k < 0)
        throw InvalidInput("negative exponent");
    ZMonomial m;
    m.y_ = k;
    return m;
}

ZMonomial ZMonomial::from_marks(const std::vector<Mark>& marks, int y_exp)
{
    ZMonomial m = y(y_exp);
    for (Mark mk : marks)
        m = m * z(mk.w, mk.d);
    return m;
}

int ZMonomial::z_degree() const
{
    int s = 0;
    for (const auto& f : factors_)
        s += f.e;
    return s;
}

int ZMonomial::exponent(Mark m) const
{
    for (const auto& f : factors_)
        if (f.w == m.w && f.d == m.d)
            return f.e;
    return 0;
}

std::vector<Mark> ZMonomial::marks() const
{
    std::vector<Mark> out;
    for (const auto& f : factors_)
        for (int i = 0; i < f.e; ++i)
            out.push_back({f.w, f.d});
    return out;
}

ZMonomial ZMonomial::operator*(const ZMonomial& o) const
{
    ZMonomial r;
    r.y_ = y_ + o.y_;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && factor_before(*a, *b))) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || factor_before(*b, *a)) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->w, a->d, a->e + b->e});
            ++a;
            ++b;
        }
    }
    return r;
}

std::size_t ZMonomial::hash() const
{
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(y_);
    for (const auto& f : factors_) {
        for (int x : {f.w, f.d, f.e}) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
    }
    return h;
}

bool canonical_before(const ZMonomial& a, const ZMonomial& b)
{
    int da = a.z_degree(), db = b.z_degree();
    if (da != db)
        return da > db;
    auto ma = a.marks(), mb = b.marks();
    if (ma != mb)
        return ma > mb;
    return a.y_exp() < b.y_exp();
}

ZPoly::ZPoly(long c) { add(ZMonomial{}, c); }
ZPoly::ZPoly(const BigInt& c) { add(ZMonomial{}, c); }

ZPoly ZPoly::z(int w, int d) { return monomial(ZMonomial::z(w, d)); }
ZPoly ZPoly::y() { return monomial(ZMonomial::y(1)); }

ZPoly ZPoly::monomial(const ZMonomial& m, const BigInt& c)
{
    ZPoly p;
    p.add(m, c);
    return p;
}

BigInt ZPoly::coeff(const ZMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void ZPoly::add(const ZMonomial& m, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ZPoly& ZPoly::operator+=(const ZPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

ZPoly& ZPoly::operator*=(const ZPoly& o)
{
    *this = *this * o;
    return *this;
}

ZPoly ZPoly::operator+(const ZPoly& o) const
{
    ZPoly r = *this;
    r += o;
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const
{
    ZPoly r = *this;
    r -= o;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const
{
    ZPoly r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add(a * b, ca * cb);
    return r;
}

ZPoly ZPoly::operator-() const
{
    ZPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

ZPoly ZPoly::pow(unsigned k) const
{
    ZPoly r(1), b = *this;
    while (k) {
        if (k & 1u)
            r *= b;
        k >>= 1;
        if (k)
            b *= b;
    }
    return r;
}

std::vector<std::pair<ZMonomial, BigInt>> ZPoly::sorted_terms() const
{
    std::vector<std::pair<ZMonomial, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
    return out;
}

int ZPoly::max_z_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.z_degree());
    return d;
}

ZPoly ZPoly::z_degree_part(int k) const
{
    ZPoly r;
    for (const auto& [m, c] : terms_)
        if (m.z_degree() == k)
            r.add(m, c);
    return r;
}

ZPoly ZPoly::at_y_zero() const
{
    ZPoly r;
    for (const auto& [m, c] : terms_)
        if (m.y_exp() == 0)
            r.add(m, c);
    return r;
}

BigInt ZPoly::abs_coeff_sum() const
{
    BigInt s = 0;
    for (const auto& [m, c] : terms_)
        s += c < 0 ? BigInt(-c) : c;
    return s;
}

std::string to_string(const ZMonomial& m)
{
    std::string s;
    auto star = [&] {
        if (!s.empty())
            s += '*';
    };
    if (m.y_exp() > 0) {
        s += "y";
        if (m.y_exp() > 1)
            s += "^" + std::to_string(m.y_exp());
    }
    for (const auto& f : m.factors()) {
        star();
        s += "z[" + std::to_string(f.w);
        if (f.d != 0)
            s += "," + std::to_string(f.d);
        s += "]";
        if (f.e > 1)
            s += "^" + std::to_string(f.e);
    }
    return s;
}

std::string to_string(const ZPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.sorted_terms()) {
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        BigInt a = c < 0 ? BigInt(-c) : c;
        out += a.str();
        if (!m.is_constant())
            out += "*" + to_string(m);
    }
    return out;
}

namespace {

struct Reader {
    std::string_view s;
    std::size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done()
    {
        skip();
        return i >= s.size();
    }
    bool peek(char c)
    {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c)
    {
        if (!peek(c))
            return false;
        ++i;
        return true;
    }
    bool at_digit()
    {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    std::string digits()
    {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i)
            fail("expected a number");
        return std::string(s.substr(start, i - start));
    }
    int small()
    {
        std::string d = digits();
        if (d.size() > 9)
            fail("number too large");
        return std::stoi(d);
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidInput("parse error at offset " + std::to_string(i) + ": " + what);
    }
};

ZMonomial read_factor(Reader& r)
{
    if (r.eat('y')) {
        int k = r.eat('^') ? r.small() : 1;
        return ZMonomial::y(k);
    }
    if (r.eat('z')) {
        if (!r.eat('['))
            r.fail("expected '['");
        int w = r.small();
        int d = r.eat(',') ? r.small() : 0;
        if (!r.eat(']'))
            r.fail("expected ']'");
        int e = r.eat('^') ? r.small() : 1;
        return ZMonomial::z(w, d, e);
    }
    r.fail("expected y or z[...]");
}

} // namespace

ZPoly parse_zpoly(std::string_view text)
{
    Reader r{text};
    if (r.done())
        r.fail("empty input");
    ZPoly out;
    bool first = true;
    while (!r.done()) {
        int sign = 1;
        if (r.eat('-'))
            sign = -1;
        else if (!r.eat('+') && !first)
            r.fail("expected + or -");
        first = false;
        BigInt c = 1;
        ZMonomial m;
        bool need_factor = true;
        if (r.at_digit()) {
            c = BigInt(r.digits());
            need_factor = r.eat('*');
        }
        if (need_factor) {
            m = read_factor(r);
            while (r.eat('*'))
                m = m * read_factor(r);
        }
        out.add(m, sign * c);
    }
    return out;
}

nlohmann::json zpoly_to_json(const ZPoly& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.sorted_terms()) {
        nlohmann::json z = nlohmann::json::array();
        for (const auto& fac : m.factors())
            z.push_back({fac.w, fac.d, fac.e});
        terms.push_back({{"c", c.str()}, {"y", m.y_exp()}, {"z", z}});
    }
    return {{"terms", terms}};
}

ZPoly zpoly_from_json(const nlohmann::json& j)
{
    ZPoly out;
    try {
        for (const auto& t : j.at("terms")) {
            ZMonomial m = ZMonomial::y(t.value("y", 0));
            for (const auto& fac : t.at("z"))
                m = m * ZMonomial::z(fac.at(0).get<int>(), fac.at(1).get<int>(), fac.size() > 2 ? fac.at(2).get<int>() : 1);
            const auto& c = t.at("c");
            out.add(m, c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>()));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("bad polynomial JSON: ") + ex.what());
    }
    return out;
}

} // namespace gpoly
