#include "models.hpp"

#include "ainf/error.hpp"
#include "ainf/linalg.hpp"

namespace ainf::testing {

namespace {

std::vector<Generator> exterior_generators(int n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({"e" + std::to_string(i), 1});
    return gens;
}

}  // namespace

Dga torus(int n) { return make_free_graded_commutative_dga(exterior_generators(n), {}); }

Dga kodaira_thurston() {
    return make_free_graded_commutative_dga(exterior_generators(4), {{"e4", {{1, {"e1", "e2"}}}}});
}

Dga heisenberg() {
    return make_free_graded_commutative_dga(exterior_generators(3), {{"e3", {{1, {"e1", "e2"}}}}});
}

Scalar small_rational(std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> num(-range, range);
    return Scalar(num(rng));
}

namespace {

std::vector<Generator> random_generators(std::mt19937_64& rng, int& top) {
    std::uniform_int_distribution<int> odd(2, 4);
    std::uniform_int_distribution<int> even(0, 2);
    std::uniform_int_distribution<int> top_pick(2, 5);
    std::vector<Generator> gens;
    int n_odd = odd(rng);
    int n_even = even(rng);
    for (int i = 0; i < n_odd; ++i) gens.push_back({"x" + std::to_string(i + 1), 1});
    for (int i = 0; i < n_even; ++i) gens.push_back({"w" + std::to_string(i + 1), 2});
    std::shuffle(gens.begin(), gens.end(), rng);
    top = top_pick(rng);
    return gens;
}

}  // namespace

Dga random_dga(std::mt19937_64& rng, std::size_t max_dim) {
    while (true) {
        int top = 0;
        auto gens = random_generators(rng, top);
        FreeGradedAlgebra alg(gens, top);
        if (alg.space()->dim() > max_dim || alg.space()->dim() < 4) continue;
        const GradedSpace& space = *alg.space();

        std::vector<Vector> values(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            // Cocycles of degree |g_j| + 1 in the subalgebra on generators < j.
            GradedLinearMap d = alg.derivation(values);
            int deg = gens[j].degree + 1;
            std::vector<BasisIndex> sub;
            for (auto i : space.in_degree(deg)) {
                const auto& e = alg.exponents(i);
                bool inside = true;
                for (std::size_t g = j; g < gens.size(); ++g) inside = inside && e[g] == 0;
                if (inside) sub.push_back(i);
            }
            if (sub.empty()) continue;
            Matrix block(space.in_degree(deg + 1).size(), sub.size());
            const auto& rows = space.in_degree(deg + 1);
            for (std::size_t c = 0; c < sub.size(); ++c)
                for (const auto& [i, x] : d.column(sub[c]))
                    block(static_cast<std::size_t>(std::find(rows.begin(), rows.end(), i) - rows.begin()), c) = x;
            Vector v;
            for (const auto& z : block.nullspace()) {
                Scalar c = small_rational(rng);
                for (std::size_t k = 0; k < z.size(); ++k) v.add_term(sub[k], c * z[k]);
            }
            values[j] = v;
        }
        GradedLinearMap d = alg.derivation(values);
        return Dga::checked(alg.space(), d, alg.product_table(), alg.monomial(std::vector<int>(gens.size(), 0)));
    }
}

Dga random_formal(std::mt19937_64& rng, std::size_t max_dim) {
    while (true) {
        int top = 0;
        auto gens = random_generators(rng, top);
        FreeGradedAlgebra alg(gens, top);
        if (alg.space()->dim() > max_dim || alg.space()->dim() < 2) continue;
        return Dga(alg.space(), GradedLinearMap::zero(alg.space(), alg.space(), 1), alg.product_table(),
                   alg.monomial(std::vector<int>(gens.size(), 0)));
    }
}

Dga transport(const Dga& a, std::mt19937_64& rng) {
    const GradedSpace& old_space = *a.space();
    GradedSpace ns;
    for (std::size_t i = 0; i < old_space.dim(); ++i) {
        auto idx = static_cast<BasisIndex>(i);
        std::string label = a.unit() && *a.unit() == idx ? "1" : "u" + std::to_string(i);
        ns.add(label, old_space.degree(idx));
    }
    SpacePtr space = make_space(std::move(ns));

    // new basis vector i = Σ_j M_{ji} old_j within its degree; unit fixed.
    GradedLinearMap to_old(space, a.space(), 0);
    GradedLinearMap to_new(a.space(), space, 0);
    for (int deg : old_space.degrees()) {
        const auto& basis = old_space.in_degree(deg);
        std::size_t n = basis.size();
        Matrix m(n, n);
        while (true) {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(r, c) = small_rational(rng) + (r == c ? 1 : 0);
            for (std::size_t r = 0; r < n; ++r)
                if (a.unit() && basis[r] == *a.unit())
                    for (std::size_t c = 0; c < n; ++c) {
                        m(r, c) = r == c ? 1 : 0;
                        m(c, r) = r == c ? 1 : 0;
                    }
            try {
                Matrix inv = m.inverse();
                for (std::size_t c = 0; c < n; ++c) {
                    Vector col, icol;
                    for (std::size_t r = 0; r < n; ++r) {
                        col.add_term(basis[r], m(r, c));
                        icol.add_term(basis[r], inv(r, c));
                    }
                    to_old.set_column(basis[c], col);
                    to_new.set_column(basis[c], icol);
                }
                break;
            } catch (const InvalidInput&) {
            }
        }
    }
    GradedLinearMap d = to_new.after(a.d().after(to_old));
    GradedLinearMap d_new(space, space, 1);
    for (std::size_t i = 0; i < space->dim(); ++i) d_new.set_column(static_cast<BasisIndex>(i), d.column(static_cast<BasisIndex>(i)));
    MultiLinearMap prod(space, space, 2, 0);
    for (std::size_t i = 0; i < space->dim(); ++i)
        for (std::size_t j = 0; j < space->dim(); ++j) {
            auto bi = static_cast<BasisIndex>(i);
            auto bj = static_cast<BasisIndex>(j);
            prod.add({bi, bj}, to_new.apply(a.multiply(to_old.column(bi), to_old.column(bj))));
        }
    return Dga(space, std::move(d_new), std::move(prod), a.unit());
}

Vector random_closed(const Dga& a, int degree, std::mt19937_64& rng) {
    Matrix block = degree_block(a.d(), degree);
    const auto& basis = a.space()->in_degree(degree);
    Vector v;
    for (const auto& z : block.nullspace()) {
        Scalar c = small_rational(rng);
        for (std::size_t k = 0; k < z.size(); ++k) v.add_term(basis[k], c * z[k]);
    }
    return v;
}

}  // namespace ainf::testing
