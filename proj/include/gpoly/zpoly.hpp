#pragma once

#include "gpoly/bigint.hpp"
#include "gpoly/graph.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpoly {

// z_{w,d}^e
struct ZFactor {
    int w;
    int d;
    int e;

    bool operator==(const ZFactor&) const = default;
};

// y^k Π z_{w,d}^e.  Factors are kept sorted by w then d, both descending.
class ZMonomial {
public:
    ZMonomial() = default;
    static ZMonomial z(int w, int d = 0, int e = 1);
    static ZMonomial y(int k = 1);
    static ZMonomial from_marks(const std::vector<Mark>& marks, int y_exp = 0);

    const std::vector<ZFactor>& factors() const { return factors_; }
    int y_exp() const { return y_; }
    int z_degree() const;
    int exponent(Mark m) const;
    // Expanded multiset of indices, descending.
    std::vector<Mark> marks() const;
    bool is_constant() const { return factors_.empty() && y_ == 0; }

    ZMonomial operator*(const ZMonomial& o) const;
    bool operator==(const ZMonomial&) const = default;
    std::size_t hash() const;

private:
    std::vector<ZFactor> factors_;
    int y_ = 0;
};

struct ZMonomialHash {
    std::size_t operator()(const ZMonomial& m) const noexcept { return m.hash(); }
};

// Canonical term order: z-degree descending, then the index list in decreasing
// lexicographic order, then y-exponent ascending.
bool canonical_before(const ZMonomial& a, const ZMonomial& b);

// Sparse polynomial over the integers in the z_{w,d} and y.
class ZPoly {
public:
    using Terms = std::unordered_map<ZMonomial, BigInt, ZMonomialHash>;

    ZPoly() = default;
    ZPoly(long c);
    ZPoly(const BigInt& c);
    static ZPoly z(int w, int d = 0);
    static ZPoly y();
    static ZPoly monomial(const ZMonomial& m, const BigInt& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    BigInt coeff(const ZMonomial& m) const;
    void add(const ZMonomial& m, const BigInt& c);

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly pow(unsigned k) const;
    bool operator==(const ZPoly& o) const { return terms_ == o.terms_; }

    std::vector<std::pair<ZMonomial, BigInt>> sorted_terms() const;
    int max_z_degree() const; // -1 for zero
    ZPoly z_degree_part(int k) const;
    ZPoly at_y_zero() const;
    // Σ |c|
    BigInt abs_coeff_sum() const;

private:
    Terms terms_;
};

std::string to_string(const ZMonomial& m);
// "2*z[7,3] + 1*y*z[7,3]"; zero prints as "0".
std::string to_string(const ZPoly& f);
ZPoly parse_zpoly(std::string_view text);

// {"terms":[{"c":"2","y":0,"z":[[7,3,1]]},...]} in canonical order.
nlohmann::json zpoly_to_json(const ZPoly& f);
ZPoly zpoly_from_json(const nlohmann::json& j);

} // namespace gpoly
