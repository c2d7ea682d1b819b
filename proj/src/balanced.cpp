#include "cartan/balanced.hpp"

#include "cartan/error.hpp"
#include "cartan/moments.hpp"

#include <algorithm>

namespace cartan {

namespace {

void require_positive(const HartogsSpec& spec) {
    if (spec.mu.sign() <= 0) throw invalid_parameter("mu must be positive, got " + spec.mu.str());
    if (spec.alpha.sign() <= 0)
        throw invalid_parameter("alpha must be positive, got " + spec.alpha.str());
}

void require_necessary(const HartogsSpec& spec, const char* what) {
    auto nc = hartogs_necessary(spec);
    if (!nc.alpha_above_d_plus_1)
        throw precondition_error(std::string(what) + ": requires alpha > d + 1 (alpha = " +
                                 spec.alpha.str() + ", d = " + std::to_string(spec.base.dim) + ")");
    if (!nc.alpha_mu_above_genus_minus_1)
        throw precondition_error(std::string(what) + ": requires alpha * mu > genus - 1 (alpha * mu = " +
                                 (spec.alpha * spec.mu).str() + ", genus = " +
                                 std::to_string(spec.base.genus) + ")");
}

std::optional<Rational> try_eval(const FactoredRational& f, int m) {
    try {
        return f.eval_at(Rational(m));
    } catch (const pole_error&) {
        return std::nullopt;
    }
}

MDependence find_witness(const FactoredRational& q) {
    // q - q(ref) has at most deg roots and q at most deg poles, so the search
    // is bounded.
    int bound = 2 * (q.numer_degree() + q.denom_degree()) + 2;
    int ref = 0;
    std::optional<Rational> ref_value;
    for (; ref <= bound && !(ref_value = try_eval(q, ref)); ++ref) {}
    if (ref_value) {
        for (int m = ref + 1; m <= ref + bound; ++m) {
            auto v = try_eval(q, m);
            if (v && *v != *ref_value) return {ref, *ref_value, m, *v};
        }
    }
    throw consistency_error("non-constant final quantity " + q.pretty() + " has no witness");
}

}  // namespace

Rational cartan_balanced_threshold(const CartanDomain& domain) {
    return Rational(domain.genus - 1, domain.genus);
}

bool cartan_balanced(const CartanDomain& domain, const Rational& beta) {
    if (beta.sign() <= 0) throw invalid_parameter("beta must be positive, got " + beta.str());
    return beta > cartan_balanced_threshold(domain);
}

NecessaryConditions hartogs_necessary(const HartogsSpec& spec) {
    return {spec.alpha > Rational(spec.base.dim + 1),
            spec.alpha * spec.mu > Rational(spec.base.genus - 1)};
}

FinalQuantityFactors final_quantity_factors(const HartogsSpec& spec) {
    const auto& dom = spec.base;
    FinalQuantityFactors f;
    for (int i = 1; i <= dom.dim; ++i) f.numer.push_back({Rational(1), spec.alpha - Rational(i)});
    for (int j = 1; j <= dom.r; ++j) {
        // A = mu (alpha + m) - genus + 1 - a/2 + j a/2
        Rational a_const = spec.mu * spec.alpha - Rational(dom.genus) + Rational(1) +
                           Rational((j - 1) * dom.a, 2);
        int len = dom.b + 1 + dom.a * (dom.r - j);
        for (int t = 0; t < len; ++t) f.denom.push_back({spec.mu, a_const + Rational(t)});
    }
    return f;
}

FactoredRational final_quantity(const HartogsSpec& spec) {
    auto f = final_quantity_factors(spec);
    return FactoredRational::from_factors(Rational(1), f.numer, f.denom);
}

FactoredRational norm_chain_ratio(const HartogsSpec& spec) {
    require_positive(spec);
    require_necessary(spec, "norm_chain_ratio");
    const Rational& mu = spec.mu;
    const Rational& alpha = spec.alpha;
    const Rational d(spec.base.dim);
    const Rational genus(spec.base.genus);

    // (m + alpha - 1)! / ((alpha - 1)! m!)  ->  consecutive ratio (alpha + m) / (m + 1)
    FactoredRational weight = FactoredRational::linear(1, alpha) / FactoredRational::linear(1, 1);

    // int_0^N (N - rho)^(alpha-d-2) rho^m d rho
    //   = N^(...) m! / prod_{i=0..m} (alpha - d - 1 + i)
    FactoredRational fiber =
        FactoredRational::linear(1, 1) / FactoredRational::linear(1, alpha - d);

    // base moment at s = mu (alpha + m) - genus
    const FactoredRational& moment = moment_ratio(spec.base).as_rational;
    FactoredRational base = moment.compose_affine(mu, mu * (alpha + Rational(1)) - genus) /
                            moment.compose_affine(mu, mu * alpha - genus);

    return weight * fiber * base;
}

Rational norm_chain_value(const HartogsSpec& spec, int m) {
    require_positive(spec);
    require_necessary(spec, "norm_chain_value");
    const auto& dom = spec.base;
    Rational v(1);
    // binomial weight (alpha)_m / m!
    for (int i = 0; i < m; ++i) v *= (spec.alpha + Rational(i)) / Rational(i + 1);
    // fiber: m! / prod_{i=0..m} (alpha - d - 1 + i)
    for (int i = 1; i <= m; ++i) v *= Rational(i);
    for (int i = 0; i <= m; ++i) v /= spec.alpha - Rational(dom.dim + 1 - i);
    // base moment F(s)/F(0) at s = mu (alpha + m) - genus
    Rational s = spec.mu * (spec.alpha + Rational(m)) - Rational(dom.genus);
    for (int j = 1; j <= dom.r; ++j) {
        Rational shift = Rational(1) + Rational((j - 1) * dom.a, 2);
        for (int t = 0; t < dom.b + 1 + dom.a * (dom.r - j); ++t)
            v *= (shift + Rational(t)) / (s + shift + Rational(t));
    }
    return v;
}

std::string_view reason_name(BalancedReason r) {
    switch (r) {
        case BalancedReason::ok: return "ok";
        case BalancedReason::alpha_not_above_d_plus_1: return "alpha_not_above_d_plus_1";
        case BalancedReason::alpha_mu_not_above_gamma_minus_1: return "alpha_mu_not_above_gamma_minus_1";
        case BalancedReason::m_dependence: return "m_dependence";
    }
    return "?";
}

bool hartogs_balanced_closed_form(const HartogsSpec& spec) {
    require_positive(spec);
    return spec.base.is_ball() && spec.mu == Rational(1) && spec.alpha > Rational(spec.base.dim + 1);
}

BalancedVerdict hartogs_balanced(const HartogsSpec& spec) {
    bool closed = hartogs_balanced_closed_form(spec);

    NecessaryConditions nc = hartogs_necessary(spec);
    FactoredRational q = final_quantity(spec);
    bool chain = false;
    if (nc.both()) {
        FactoredRational ratio = norm_chain_ratio(spec);
        auto c = ratio.constant_value();
        chain = c && *c == Rational(1);
        if (ratio.is_constant() != q.is_constant())
            throw consistency_error("norm chain ratio " + ratio.pretty() + " and final quantity " +
                                    q.pretty() + " disagree on m-independence for " +
                                    spec.base.label());
    }
    if (closed != chain)
        throw consistency_error("closed form says " + std::string(closed ? "balanced" : "not balanced") +
                                " but the norm chain says otherwise for " + spec.base.label() +
                                " mu=" + spec.mu.str() + " alpha=" + spec.alpha.str());

    BalancedVerdict v{closed, BalancedReason::ok, std::nullopt};
    if (!q.is_constant()) {
        v.reason = BalancedReason::m_dependence;
        v.witness = find_witness(q);
    } else if (!nc.alpha_above_d_plus_1) {
        v.reason = BalancedReason::alpha_not_above_d_plus_1;
    } else if (!nc.alpha_mu_above_genus_minus_1) {
        v.reason = BalancedReason::alpha_mu_not_above_gamma_minus_1;
    }
    if (v.balanced != (v.reason == BalancedReason::ok))
        throw consistency_error("verdict and reason disagree for " + spec.base.label());
    return v;
}

std::vector<Rational> default_mu_grid(const CartanDomain& domain) {
    std::vector<Rational> g{Rational(1, 2), Rational(4, 5), Rational(1), Rational(3, 2), Rational(2),
                            Rational(domain.genus, domain.dim + 1)};
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<Rational> default_alpha_grid(const CartanDomain& domain) {
    Rational d(domain.dim);
    return {d + Rational(3, 2), d + Rational(2), d + Rational(17, 8), Rational(2) * d + Rational(3)};
}

std::vector<ScanRow> balanced_scan(int dim_cap) {
    std::vector<ScanRow> rows;
    for (const auto& dom : enumerate_catalog(dim_cap))
        for (const auto& mu : default_mu_grid(dom))
            for (const auto& alpha : default_alpha_grid(dom))
                rows.push_back({dom, mu, alpha, hartogs_balanced({dom, mu, alpha})});
    return rows;
}

std::vector<CorollaryRow> corollary_scan(int dim_cap, const std::vector<Rational>& alpha_offsets) {
    if (dim_cap < 2) throw invalid_parameter("corollary_scan requires dim_cap >= 2");
    std::vector<CorollaryRow> rows;
    for (const auto& dom : enumerate_catalog(dim_cap)) {
        if (dom.is_ball()) {
            rows.push_back({dom, true, Rational(0), Rational(0), false, false, std::nullopt});
            continue;
        }
        CorollaryWitness w = corollary_witness(dom);
        for (const auto& off : alpha_offsets) {
            CorollaryRow row{dom, false, w.mu0, w.alpha_min + off, false, false, std::nullopt};
            try {
                HartogsSpec spec{dom, w.mu0, row.alpha};
                row.projectively_induced = hartogs_projectively_induced(spec).induced;
                row.balanced = hartogs_balanced(spec).balanced;
                if (!row.projectively_induced) row.error = "not projectively induced";
                else if (row.balanced) row.error = "balanced";
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace cartan
