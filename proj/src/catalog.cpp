#include "cartan/catalog.hpp"

#include "cartan/error.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>

namespace cartan {

namespace {

CartanDomain with_invariants(Family family, std::vector<int> sizes, int r, int a, int b) {
    CartanDomain d{family, std::move(sizes), r, a, b, 0, 0};
    d.genus = (r - 1) * a + b + 2;
    d.dim = r * (b + 1) + a * r * (r - 1) / 2;
    return d;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw invalid_parameter(what);
}

std::vector<int> parse_sizes(std::string_view s, std::string_view whole) {
    std::vector<int> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        std::string_view tok = s.substr(0, comma);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
            throw invalid_parameter("bad size '" + std::string(tok) + "' in domain '" +
                                    std::string(whole) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
        case Family::V: return "V";
        case Family::VI: return "VI";
    }
    return "?";
}

std::string CartanDomain::label() const {
    std::string s(family_name(family));
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i == 0 ? ":" : ",") + std::to_string(sizes[i]);
    return s;
}

CartanDomain make_domain(Family family, const std::vector<int>& sizes) {
    auto arity = [&](std::size_t k) {
        require(sizes.size() == k, "type " + std::string(family_name(family)) + " takes " +
                                       std::to_string(k) + " size parameter(s), got " +
                                       std::to_string(sizes.size()));
    };
    switch (family) {
        case Family::I: {
            arity(2);
            int m = sizes[0], n = sizes[1];
            require(m >= 1, "type I requires m >= 1");
            require(m <= n, "type I requires m <= n");
            return with_invariants(family, sizes, m, 2, n - m);
        }
        case Family::II: {
            arity(1);
            int n = sizes[0];
            require(n >= 1, "type II requires n >= 1");
            return with_invariants(family, sizes, n, 1, 0);
        }
        case Family::III: {
            arity(1);
            int n = sizes[0];
            require(n >= 2, "type III requires n >= 2");
            return with_invariants(family, sizes, n / 2, 4, n % 2 == 0 ? 0 : 2);
        }
        case Family::IV: {
            arity(1);
            int n = sizes[0];
            require(n >= 3, "type IV requires n >= 3");
            return with_invariants(family, sizes, 2, n - 2, 0);
        }
        case Family::V:
            arity(0);
            return with_invariants(family, {}, 2, 6, 4);
        case Family::VI:
            arity(0);
            return with_invariants(family, {}, 3, 8, 0);
    }
    throw invalid_parameter("unknown family");
}

CartanDomain ball(int d) {
    if (d < 1) throw invalid_parameter("ball dimension must be >= 1");
    return make_domain(Family::I, {1, d});
}

CartanDomain parse_domain(std::string_view text) {
    auto colon = text.find(':');
    std::string_view fam = text.substr(0, colon);
    Family f;
    if (fam == "I") f = Family::I;
    else if (fam == "II") f = Family::II;
    else if (fam == "III") f = Family::III;
    else if (fam == "IV") f = Family::IV;
    else if (fam == "V") f = Family::V;
    else if (fam == "VI") f = Family::VI;
    else throw invalid_parameter("unknown domain family in '" + std::string(text) +
                                 "' (expected I, II, III, IV, V or VI)");
    std::vector<int> sizes;
    if (colon != std::string_view::npos) sizes = parse_sizes(text.substr(colon + 1), text);
    return make_domain(f, sizes);
}

std::vector<CartanDomain> enumerate_catalog(int dim_cap) {
    if (dim_cap < 1) throw invalid_parameter("dim_cap must be >= 1");
    std::vector<CartanDomain> out;
    for (int m = 1; m * m <= dim_cap; ++m)
        for (int n = m; m * n <= dim_cap; ++n) out.push_back(make_domain(Family::I, {m, n}));
    for (int n = 1; n * (n + 1) / 2 <= dim_cap; ++n) out.push_back(make_domain(Family::II, {n}));
    for (int n = 2; n * (n - 1) / 2 <= dim_cap; ++n) out.push_back(make_domain(Family::III, {n}));
    for (int n = 3; n <= dim_cap; ++n) out.push_back(make_domain(Family::IV, {n}));
    if (dim_cap >= 16) out.push_back(make_domain(Family::V, {}));
    if (dim_cap >= 27) out.push_back(make_domain(Family::VI, {}));
    return out;
}

int telescoped_factor_count(const CartanDomain& d) {
    int n = 0;
    for (int j = 1; j <= d.r; ++j) n += d.b + 1 + d.a * (d.r - j);
    return n;
}

std::string catalog_hash(int dim_cap) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& d : enumerate_catalog(dim_cap)) {
        mix(d.label());
        for (int v : {d.r, d.a, d.b, d.genus, d.dim}) mix("|" + std::to_string(v));
        mix(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cartan
