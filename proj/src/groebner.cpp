#include "mckay/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace mckay {

namespace {

bool divides(const Exp& a, const Exp& b)
{
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exp lcm(const Exp& a, const Exp& b)
{
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

Exp minus(const Exp& a, const Exp& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

bool coprime(const Exp& a, const Exp& b)
{
    for (int k = 0; k < 3; ++k)
        if (a[k] > 0 && b[k] > 0)
            return false;
    return true;
}

Poly spoly(const Poly& f, const Poly& g)
{
    const Exp l = lcm(f.lead_exp(), g.lead_exp());
    Poly a = f.shift(minus(l, f.lead_exp())) * (1 / f.lead_coeff());
    Poly b = g.shift(minus(l, g.lead_exp())) * (1 / g.lead_coeff());
    return a - b;
}

void require_polynomial(const Poly& p)
{
    if (!p.is_polynomial())
        throw std::invalid_argument("ideal generator has negative exponents: " + p.to_string());
}

} // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis)
{
    Poly rem;
    Poly p = f;
    while (!p.is_zero()) {
        const Exp e = p.lead_exp();
        const Rat c = p.lead_coeff();
        const Poly* hit = nullptr;
        for (const auto& g : basis)
            if (divides(g.lead_exp(), e)) {
                hit = &g;
                break;
            }
        if (hit) {
            p -= hit->shift(minus(e, hit->lead_exp())) * (c / hit->lead_coeff());
        } else {
            rem.add_term(e, c);
            p.add_term(e, -c);
        }
    }
    return rem;
}

std::vector<Poly> buchberger(const std::vector<Poly>& gens)
{
    std::vector<Poly> g;
    for (const auto& p : gens) {
        require_polynomial(p);
        if (!p.is_zero())
            g.push_back(p.monic());
    }
    if (g.empty())
        return {};

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        // Process the pair with the smallest lcm first (normal strategy).
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            return grlex_less(lcm(g[a.first].lead_exp(), g[a.second].lead_exp()),
                              lcm(g[b.first].lead_exp(), g[b.second].lead_exp()));
        });
        auto [i, j] = *best;
        pairs.erase(best);
        const Exp& li = g[i].lead_exp();
        const Exp& lj = g[j].lead_exp();
        if (coprime(li, lj))
            continue;
        const Exp l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j || !divides(g[k].lead_exp(), l))
                continue;
            auto pending = [&](std::size_t a, std::size_t b) {
                auto key = std::minmax(a, b);
                return std::find(pairs.begin(), pairs.end(), std::make_pair(key.first, key.second)) != pairs.end();
            };
            chain = !pending(i, k) && !pending(j, k);
        }
        if (chain)
            continue;
        Poly r = normal_form(spoly(g[i], g[j]), g);
        if (r.is_zero())
            continue;
        r = r.monic();
        if (r.is_constant())
            return {Poly(1)};
        const std::size_t idx = g.size();
        g.push_back(r);
        for (std::size_t k = 0; k < idx; ++k)
            pairs.emplace_back(k, idx);
    }

    // Minimalize, then interreduce.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i || !divides(g[k].lead_exp(), g[i].lead_exp()))
                continue;
            redundant = g[k].lead_exp() != g[i].lead_exp() || k < i;
        }
        if (!redundant)
            minimal.push_back(g[i]);
    }
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i)
                others.push_back(minimal[k]);
        const Poly& p = minimal[i];
        Poly tail = p - Poly::monomial(p.lead_exp(), p.lead_coeff());
        reduced.push_back((Poly::monomial(p.lead_exp(), p.lead_coeff()) + normal_form(tail, others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Poly& a, const Poly& b) { return grlex_less(a.lead_exp(), b.lead_exp()); });
    return reduced;
}

Ideal::Ideal(std::vector<Poly> generators) : gens_(std::move(generators)), nvars_(2)
{
    for (const auto& p : gens_) {
        require_polynomial(p);
        if (p.nvars() == 3)
            nvars_ = 3;
    }
    basis_ = buchberger(gens_);
}

Poly normal_form(const Poly& f, const Ideal& I)
{
    return normal_form(f, I.basis());
}

bool Ideal::contains(const Poly& f) const
{
    return normal_form(f, basis_).is_zero();
}

bool Ideal::is_unit() const
{
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

Staircase staircase(const Ideal& I)
{
    if (I.is_unit())
        return {};
    std::array<int, 3> bound{-1, -1, -1};
    if (I.nvars() == 2)
        bound[2] = 1;
    for (const auto& g : I.basis()) {
        const Exp& e = g.lead_exp();
        for (int k = 0; k < 3; ++k) {
            bool pure = e[k] > 0;
            for (int o = 0; o < 3 && pure; ++o)
                if (o != k && e[o] != 0)
                    pure = false;
            if (pure && (bound[k] < 0 || e[k] < bound[k]))
                bound[k] = e[k];
        }
    }
    for (int k = 0; k < 3; ++k)
        if (bound[k] < 0)
            throw InfiniteDimensional("quotient ring is not finite dimensional");
    Staircase s;
    for (int a = 0; a < bound[0]; ++a)
        for (int b = 0; b < bound[1]; ++b)
            for (int c = 0; c < bound[2]; ++c) {
                Exp e{a, b, c};
                bool standard = true;
                for (const auto& g : I.basis())
                    if (divides(g.lead_exp(), e)) {
                        standard = false;
                        break;
                    }
                if (standard)
                    s.basis.push_back(e);
            }
    std::sort(s.basis.begin(), s.basis.end(), grlex_less);
    s.dim = static_cast<int>(s.basis.size());
    return s;
}

} // namespace mckay
