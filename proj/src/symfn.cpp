#include "gpoly/symfn.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gpoly {

std::string basis_name(Basis b) { return b == Basis::p ? "p" : "st"; }

SymFn SymFn::term(Basis b, const Partition& lambda, const BigInt& c)
{
    SymFn f(b);
    f.add(lambda, c);
    return f;
}

BigInt SymFn::coeff(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SymFn::add(const Partition& lambda, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void SymFn::require_same_basis(const SymFn& o) const
{
    if (basis_ != o.basis_ && !is_zero() && !o.is_zero())
        throw InvalidInput("mixing p and st expansions");
}

SymFn& SymFn::operator+=(const SymFn& o)
{
    require_same_basis(o);
    if (is_zero())
        basis_ = o.basis_;
    for (const auto& [lam, c] : o.terms_)
        add(lam, c);
    return *this;
}

SymFn& SymFn::operator-=(const SymFn& o)
{
    require_same_basis(o);
    if (is_zero())
        basis_ = o.basis_;
    for (const auto& [lam, c] : o.terms_)
        add(lam, -c);
    return *this;
}

SymFn& SymFn::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, v] : terms_)
        v *= c;
    return *this;
}

SymFn SymFn::operator+(const SymFn& o) const
{
    SymFn r = *this;
    r += o;
    return r;
}

SymFn SymFn::operator-(const SymFn& o) const
{
    SymFn r = *this;
    r -= o;
    return r;
}

SymFn SymFn::operator-() const
{
    SymFn r = *this;
    r *= BigInt(-1);
    return r;
}

SymFn SymFn::operator*(const SymFn& o) const
{
    require_same_basis(o);
    SymFn r(is_zero() ? o.basis_ : basis_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add(concat(a, b), ca * cb);
    return r;
}

bool SymFn::operator==(const SymFn& o) const
{
    if (is_zero() || o.is_zero())
        return is_zero() && o.is_zero();
    return basis_ == o.basis_ && terms_ == o.terms_;
}

std::vector<std::pair<Partition, BigInt>> SymFn::sorted_terms() const
{
    std::vector<std::pair<Partition, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int da = partition_size(a.first), db = partition_size(b.first);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    return out;
}

std::optional<int> SymFn::degree() const
{
    std::optional<int> d;
    for (const auto& [lam, c] : terms_) {
        int s = partition_size(lam);
        if (d && *d != s)
            return std::nullopt;
        d = s;
    }
    return d;
}

SymFn generator_in_other_basis(Basis from, int k)
{
    if (k <= 0)
        throw InvalidInput("generator index must be positive");
    Basis to = from == Basis::p ? Basis::st : Basis::p;
    int n = k - 1;
    SymFn out(to);
    for (int r = 0; r <= n; ++r) {
        Partition lam{r + 1};
        lam.insert(lam.end(), static_cast<std::size_t>(n - r), 1);
        BigInt c = binomial(n, r);
        out.add(lam, r % 2 ? BigInt(-c) : c);
    }
    return out;
}

namespace {

SymFn change_basis(const SymFn& f, Basis from)
{
    Basis to = from == Basis::p ? Basis::st : Basis::p;
    if (f.is_zero())
        return SymFn(to);
    if (f.basis() != from)
        throw InvalidInput("expected a " + basis_name(from) + "-expansion");
    std::map<int, SymFn> gens;
    auto gen = [&](int k) -> const SymFn& {
        auto it = gens.find(k);
        if (it == gens.end())
            it = gens.emplace(k, generator_in_other_basis(from, k)).first;
        return it->second;
    };
    SymFn out(to);
    for (const auto& [lam, c] : f.terms()) {
        SymFn prod = SymFn::term(to, {}, c);
        for (int part : lam)
            prod = prod * gen(part);
        out += prod;
    }
    return out;
}

} // namespace

SymFn st_to_p(const SymFn& f) { return change_basis(f, Basis::st); }
SymFn p_to_st(const SymFn& f) { return change_basis(f, Basis::p); }

std::string to_string(const SymFn& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : f.sorted_terms()) {
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        BigInt a = c < 0 ? BigInt(-c) : c;
        out += a.str() + "*" + basis_name(f.basis()) + "[" + to_string(lam) + "]";
    }
    return out;
}

namespace {

struct Cursor {
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
    bool eat(char c)
    {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(std::string_view word)
    {
        skip();
        if (s.substr(i, word.size()) == word) {
            i += word.size();
            return true;
        }
        return false;
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
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidInput("parse error at offset " + std::to_string(i) + ": " + what);
    }
};

} // namespace

SymFn parse_symfn(std::string_view text, Basis if_zero)
{
    Cursor cur{text};
    std::optional<Basis> basis;
    SymFn out(if_zero);
    if (cur.done())
        cur.fail("empty input");
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (!cur.eat('+') && !first)
            cur.fail("expected + or -");
        first = false;
        BigInt c = 1;
        bool have_coeff = false;
        if (cur.at_digit()) {
            c = BigInt(cur.digits());
            have_coeff = true;
        }
        if (have_coeff && !cur.eat('*')) {
            if (c == 0 && cur.done())
                break;
            cur.fail("expected '*'");
        }
        Basis b;
        if (cur.eat("st"))
            b = Basis::st;
        else if (cur.eat('p'))
            b = Basis::p;
        else
            cur.fail("expected st[...] or p[...]");
        if (basis && *basis != b)
            cur.fail("mixed bases");
        basis = b;
        if (!cur.eat('['))
            cur.fail("expected '['");
        std::vector<int> parts;
        if (!cur.eat(']')) {
            do
                parts.push_back(std::stoi(cur.digits()));
            while (cur.eat(','));
            if (!cur.eat(']'))
                cur.fail("expected ']'");
        }
        if (out.is_zero())
            out = SymFn(b);
        out.add(normalize_partition(parts), sign * c);
    }
    return out;
}

} // namespace gpoly
