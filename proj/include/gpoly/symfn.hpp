#pragma once

#include "gpoly/bigint.hpp"
#include "gpoly/partition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpoly {

enum class Basis { p, st };

std::string basis_name(Basis b);

// Finite integer combination of p_λ or st_λ.  Zero coefficients are never stored.
class SymFn {
public:
    using Terms = std::unordered_map<Partition, BigInt, PartitionHash>;

    explicit SymFn(Basis b = Basis::p) : basis_(b) {}
    static SymFn term(Basis b, const Partition& lambda, const BigInt& c = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    BigInt coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const BigInt& c);

    SymFn& operator+=(const SymFn& o);
    SymFn& operator-=(const SymFn& o);
    SymFn& operator*=(const BigInt& c);
    SymFn operator+(const SymFn& o) const;
    SymFn operator-(const SymFn& o) const;
    SymFn operator-() const;
    // Both bases are multiplicative: b_λ b_μ = b_{λ ∪ μ}.
    SymFn operator*(const SymFn& o) const;
    bool operator==(const SymFn& o) const;

    // Degree descending, then partitions in decreasing lexicographic order.
    std::vector<std::pair<Partition, BigInt>> sorted_terms() const;
    // Set when every term has the same degree.
    std::optional<int> degree() const;

private:
    void require_same_basis(const SymFn& o) const;

    Basis basis_;
    Terms terms_;
};

// st_{n+1} = Σ_r (-1)^r C(n,r) p_{(r+1,1^{n-r})}; the same formula with the
// roles swapped gives p in terms of st.
SymFn st_to_p(const SymFn& f);
SymFn p_to_st(const SymFn& f);
// Expansion of the single generator b_k in the other basis.
SymFn generator_in_other_basis(Basis from, int k);

// "2*st[4] - 2*st[3,1] + 1*st[2,2]"; the zero function prints as "0".
std::string to_string(const SymFn& f);
SymFn parse_symfn(std::string_view text, Basis if_zero = Basis::st);

} // namespace gpoly
