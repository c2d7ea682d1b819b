#include "cartan/factored.hpp"

#include "cartan/error.hpp"

#include <sstream>

namespace cartan {

namespace {

using Poly = std::vector<Rational>;  // coefficients, lowest degree first

Poly poly_mul_linear(const Poly& p, const LinearFactor& f) {
    Poly out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i] * f.intercept;
        out[i + 1] += p[i] * f.slope;
    }
    return out;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string factor_text(const Rational& shift, std::string_view var) {
    // x + p/q rendered as (q x + p)
    std::string s = "(";
    if (shift.den() != 1) s += shift.den().str();
    s += var;
    if (shift.sign() > 0) s += "+" + shift.num().str();
    if (shift.sign() < 0) s += shift.num().str();
    return s + ")";
}

std::string product_text(const FactoredRational::ShiftMultiset& ms, std::string_view var) {
    std::string s;
    for (const auto& [c, k] : ms) {
        s += factor_text(c, var);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

std::vector<Rational> parse_list(std::string_view body) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in{std::string(body)};
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(Rational::parse(item));
    }
    return out;
}

std::string_view field(std::string_view text, std::string_view key) {
    auto pos = text.find(key);
    if (pos == std::string_view::npos)
        throw invalid_parameter("missing '" + std::string(key) + "' in factored rational text");
    text.remove_prefix(pos + key.size());
    auto end = text.find(';');
    return text.substr(0, end);
}

std::string_view bracket_body(std::string_view s) {
    auto open = s.find('[');
    auto close = s.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw invalid_parameter("malformed factor list: '" + std::string(s) + "'");
    return s.substr(open + 1, close - open - 1);
}

}  // namespace

FactoredRational::FactoredRational(Rational constant) : scale_(std::move(constant)) {}

FactoredRational FactoredRational::from_factors(Rational scale, std::span<const LinearFactor> numer,
                                                std::span<const LinearFactor> denom) {
    FactoredRational f(std::move(scale));
    for (const auto& lf : numer) {
        if (lf.slope.is_zero()) {
            f.scale_ *= lf.intercept;
        } else {
            f.scale_ *= lf.slope;
            ++f.numer_[lf.intercept / lf.slope];
        }
    }
    for (const auto& lf : denom) {
        if (lf.slope.is_zero()) {
            if (lf.intercept.is_zero()) throw pole_error("zero constant factor in denominator");
            f.scale_ /= lf.intercept;
        } else {
            f.scale_ /= lf.slope;
            ++f.denom_[lf.intercept / lf.slope];
        }
    }
    f.cancel();
    return f;
}

FactoredRational FactoredRational::linear(const Rational& slope, const Rational& intercept) {
    LinearFactor lf{slope, intercept};
    return from_factors(Rational(1), std::span(&lf, 1), {});
}

void FactoredRational::cancel() {
    if (scale_.is_zero()) {
        numer_.clear();
        denom_.clear();
        return;
    }
    for (auto it = numer_.begin(); it != numer_.end();) {
        auto d = denom_.find(it->first);
        if (d != denom_.end()) {
            int common = std::min(it->second, d->second);
            it->second -= common;
            d->second -= common;
            if (d->second == 0) denom_.erase(d);
        }
        it = it->second == 0 ? numer_.erase(it) : std::next(it);
    }
}

int FactoredRational::numer_degree() const {
    int n = 0;
    for (const auto& [c, k] : numer_) n += k;
    return n;
}

int FactoredRational::denom_degree() const {
    int n = 0;
    for (const auto& [c, k] : denom_) n += k;
    return n;
}

Rational FactoredRational::eval_at(const Rational& x0) const {
    Rational den(1);
    for (const auto& [c, k] : denom_) {
        Rational v = x0 + c;
        if (v.is_zero())
            throw pole_error("pole at x=" + x0.str() + ": denominator factor " +
                             factor_text(c, "x") + " vanishes");
        for (int i = 0; i < k; ++i) den *= v;
    }
    Rational num = scale_;
    for (const auto& [c, k] : numer_) {
        Rational v = x0 + c;
        for (int i = 0; i < k; ++i) num *= v;
    }
    return num / den;
}

std::optional<Rational> FactoredRational::constant_value() const {
    if (numer_.empty() && denom_.empty()) return scale_;
    return std::nullopt;
}

FactoredRational FactoredRational::inverse() const {
    if (scale_.is_zero()) throw pole_error("inverse of the zero function");
    FactoredRational r;
    r.scale_ = Rational(1) / scale_;
    r.numer_ = denom_;
    r.denom_ = numer_;
    return r;
}

FactoredRational FactoredRational::compose_affine(const Rational& slope,
                                                  const Rational& intercept) const {
    if (slope.is_zero()) throw invalid_parameter("compose_affine: slope must be nonzero");
    FactoredRational r(scale_);
    // x + c = slope * (y + (intercept + c) / slope)
    for (const auto& [c, k] : numer_) {
        r.numer_[(intercept + c) / slope] += k;
        for (int i = 0; i < k; ++i) r.scale_ *= slope;
    }
    for (const auto& [c, k] : denom_) {
        r.denom_[(intercept + c) / slope] += k;
        for (int i = 0; i < k; ++i) r.scale_ /= slope;
    }
    r.cancel();
    return r;
}

FactoredRational operator*(const FactoredRational& f, const FactoredRational& g) {
    FactoredRational r(f.scale_ * g.scale_);
    if (r.scale_.is_zero()) return r;
    r.numer_ = f.numer_;
    r.denom_ = f.denom_;
    for (const auto& [c, k] : g.numer_) r.numer_[c] += k;
    for (const auto& [c, k] : g.denom_) r.denom_[c] += k;
    r.cancel();
    return r;
}

FactoredRational operator/(const FactoredRational& f, const FactoredRational& g) {
    return f * g.inverse();
}

std::string FactoredRational::pretty(std::string_view var) const {
    if (scale_.is_zero()) return "0";
    Rational display = scale_;
    for (const auto& [c, k] : numer_)
        for (int i = 0; i < k; ++i) display /= Rational(c.den(), 1);
    for (const auto& [c, k] : denom_)
        for (int i = 0; i < k; ++i) display *= Rational(c.den(), 1);

    std::string num = product_text(numer_, var);
    std::string s;
    if (num.empty()) {
        s = display.str();
    } else if (display == Rational(1)) {
        s = num;
    } else if (display == Rational(-1)) {
        s = "-" + num;
    } else {
        s = display.str() + "*" + num;
    }
    if (!denom_.empty()) s += "/(" + product_text(denom_, var) + ")";
    return s;
}

std::string FactoredRational::serialize() const {
    auto list = [](const ShiftMultiset& ms) {
        std::string s = "[";
        bool first = true;
        for (const auto& [c, k] : ms)
            for (int i = 0; i < k; ++i) {
                if (!first) s += ", ";
                s += c.str();
                first = false;
            }
        return s + "]";
    };
    return "num: " + list(numer_) + "; den: " + list(denom_) + "; scale: " + scale_.str();
}

FactoredRational FactoredRational::deserialize(std::string_view text) {
    std::vector<LinearFactor> numer, denom;
    for (const auto& c : parse_list(bracket_body(field(text, "num:"))))
        numer.push_back({Rational(1), c});
    for (const auto& c : parse_list(bracket_body(field(text, "den:"))))
        denom.push_back({Rational(1), c});
    return from_factors(Rational::parse(field(text, "scale:")), numer, denom);
}

std::optional<Rational> constant_by_expansion(const Rational& scale,
                                              std::span<const LinearFactor> numer,
                                              std::span<const LinearFactor> denom) {
    Poly p{scale};
    for (const auto& f : numer) p = poly_mul_linear(p, f);
    Poly q{Rational(1)};
    for (const auto& f : denom) q = poly_mul_linear(q, f);

    // Q has at most deg Q roots, so one of the first deg Q + 1 integers works.
    Rational x1(0), qx1 = poly_eval(q, x1);
    for (std::int64_t k = 1; qx1.is_zero(); ++k) {
        x1 = Rational(k);
        qx1 = poly_eval(q, x1);
    }
    Rational px1 = poly_eval(p, x1);

    std::size_t n = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational pi = i < p.size() ? p[i] : Rational(0);
        Rational qi = i < q.size() ? q[i] : Rational(0);
        if (!(pi * qx1 - qi * px1).is_zero()) return std::nullopt;
    }
    return px1 / qx1;
}

}  // namespace cartan
