#pragma once

#include "cartan/catalog.hpp"
#include "cartan/factored.hpp"
#include "cartan/wallach.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

/// beta g_B on a Cartan domain is balanced iff beta > (genus - 1) / genus.
bool cartan_balanced(const CartanDomain& domain, const Rational& beta);

Rational cartan_balanced_threshold(const CartanDomain& domain);

/// Necessary conditions for alpha g(mu) to be balanced: the fiber integral
/// converges iff alpha > d + 1, the base integral iff alpha mu > genus - 1.
struct NecessaryConditions {
    bool alpha_above_d_plus_1;
    bool alpha_mu_above_genus_minus_1;

    bool both() const { return alpha_above_d_plus_1 && alpha_mu_above_genus_minus_1; }
};

NecessaryConditions hartogs_necessary(const HartogsSpec& spec);

/// Unnormalized linear factors (in m) of the m-dependent part of the squared
/// norm of the immersion components:
///
///     prod_{i=1..d} (alpha + m - i)
///     ---------------------------------------------------------------
///     prod_{j=1..r} prod_{t=0..b+a(r-j)} (mu (alpha + m) - genus + 1 + (j-1) a/2 + t)
struct FinalQuantityFactors {
    std::vector<LinearFactor> numer;
    std::vector<LinearFactor> denom;
};

FinalQuantityFactors final_quantity_factors(const HartogsSpec& spec);
FactoredRational final_quantity(const HartogsSpec& spec);

/// I(m+1)/I(m) for the squared norm I(m) of the immersion component carrying
/// w^m, assembled from its three ingredients: the binomial weight
/// (alpha+m)/(m+1), the fiber Beta integral (m+1)/(alpha-d+m), and the base
/// moment ratio at mu(alpha+m+1)-genus over mu(alpha+m)-genus. Throws
/// precondition_error unless both necessary conditions hold.
FactoredRational norm_chain_ratio(const HartogsSpec& spec);

/// I(m) itself, up to the m-independent constant, by direct exact products.
/// Requires the necessary conditions.
Rational norm_chain_value(const HartogsSpec& spec, int m);

enum class BalancedReason { ok, alpha_not_above_d_plus_1, alpha_mu_not_above_gamma_minus_1, m_dependence };

std::string_view reason_name(BalancedReason r);

struct MDependence {
    int reference_m;
    Rational reference_value;
    int witness_m;
    Rational witness_value;
};

struct BalancedVerdict {
    bool balanced;
    BalancedReason reason;
    std::optional<MDependence> witness;  // present iff reason == m_dependence
};

/// Balanced iff the base is a ball, mu = 1 and alpha > d + 1.
bool hartogs_balanced_closed_form(const HartogsSpec& spec);

/// Decides balancedness twice, by the closed-form rule and by the necessary
/// conditions plus the identity I(m+1)/I(m) == 1, and throws
/// consistency_error if they disagree.
///
/// The reason reports m-dependence of the final quantity first (it is
/// defined for every input), then the failed necessary condition.
BalancedVerdict hartogs_balanced(const HartogsSpec& spec);

struct ScanRow {
    CartanDomain domain;
    Rational mu;
    Rational alpha;
    BalancedVerdict verdict;
};

std::vector<Rational> default_mu_grid(const CartanDomain& domain);
std::vector<Rational> default_alpha_grid(const CartanDomain& domain);

/// hartogs_balanced over every catalog domain of dim <= dim_cap and the
/// default mu and alpha grids, ordered by domain, mu, alpha.
std::vector<ScanRow> balanced_scan(int dim_cap);

struct CorollaryRow {
    CartanDomain domain;
    bool excluded;  // balls are outside the statement
    Rational mu0;
    Rational alpha;
    bool projectively_induced = false;
    bool balanced = false;
    std::optional<std::string> error;

    bool holds() const { return excluded || (!error && projectively_induced && !balanced); }
};

/// For every non-ball domain of dim <= dim_cap, evaluates both predicates at
/// mu0 = genus/(d+1) and alpha = alpha_min + offset. Failures and exceptions
/// become rows; nothing is thrown past the argument check.
std::vector<CorollaryRow> corollary_scan(int dim_cap,
                                         const std::vector<Rational>& alpha_offsets = {0, 1, 10});

}  // namespace cartan
