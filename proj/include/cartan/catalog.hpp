#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cartan {

enum class Family { I, II, III, IV, V, VI };

/// An irreducible bounded symmetric domain identified by its family and size
/// parameters, together with its numerical invariants.
///
/// Rank one domains are complex hyperbolic balls. Besides I(1,n) these are
/// the low-size coincidences II(1), III(2) and III(3); all of them carry
/// `is_ball`. The value of `a` is kept as tabulated even when r = 1, where
/// it never enters any formula.
struct CartanDomain {
    Family family;
    std::vector<int> sizes;  // (m, n) for I, (n) for II-IV, empty for V and VI
    int r;
    int a;
    int b;
    int genus;
    int dim;

    bool is_ball() const { return r == 1; }

    /// Round-trippable text form, e.g. "I:2,3", "IV:4", "VI".
    std::string label() const;

    friend bool operator==(const CartanDomain&, const CartanDomain&) = default;
};

/// Throws invalid_parameter naming the violated size constraint.
CartanDomain make_domain(Family family, const std::vector<int>& sizes);

/// The unit ball of C^d, as I(1,d).
CartanDomain ball(int d);

/// Parses "I:m,n", "II:n", "III:n", "IV:n", "V", "VI".
CartanDomain parse_domain(std::string_view text);

/// Every constructible domain of dimension <= dim_cap, ordered by family and
/// then by sizes. Biholomorphic duplicates are kept.
std::vector<CartanDomain> enumerate_catalog(int dim_cap);

std::string_view family_name(Family f);

/// Sum over j = 1..r of (b + 1 + a (r - j)): the number of linear factors a
/// Gamma ratio of this domain telescopes into. Equals dim for every entry.
int telescoped_factor_count(const CartanDomain& d);

/// FNV-1a over the labels and invariants of enumerate_catalog(dim_cap).
std::string catalog_hash(int dim_cap);

}  // namespace cartan
