#include "ainf/dga.hpp"

#include "ainf/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ainf {

Dga::Dga(SpacePtr space, GradedLinearMap d, MultiLinearMap product, std::optional<BasisIndex> unit)
    : space_(std::move(space)), d_(std::move(d)), product_(std::move(product)), unit_(unit) {
    if (product_.arity() != 2) throw MalformedInput("dga product must have arity 2");
    if (unit_ && (*unit_ < 0 || static_cast<std::size_t>(*unit_) >= space_->dim()))
        throw MalformedInput("unit index out of range");
}

Dga Dga::checked(SpacePtr space, GradedLinearMap d, MultiLinearMap product, std::optional<BasisIndex> unit) {
    Dga a(std::move(space), std::move(d), std::move(product), unit);
    auto report = check_dga_axioms(a);
    if (auto* f = report.first_failure()) throw AxiomViolation(f->name + " fails at " + f->witness);
    return a;
}

Vector Dga::multiply(const Vector& a, const Vector& b) const {
    std::array<Vector, 2> args{a, b};
    return product_.evaluate(args);
}

Vector Dga::element(std::string_view label, const Scalar& c) const { return Vector::basis(space_->index_of(label), c); }

namespace {

std::string monomial_label(const std::vector<Generator>& gens, const std::vector<int>& exps) {
    std::string out;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (exps[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += gens[g].label;
        if (exps[g] > 1) out += "^" + std::to_string(exps[g]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

FreeGradedAlgebra::FreeGradedAlgebra(std::vector<Generator> generators, std::optional<int> top_degree)
    : generators_(std::move(generators)) {
    int odd_total = 0;
    bool has_even = false;
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.degree < 1) throw InvalidInput("generator '" + g.label + "' must have degree >= 1");
        if (g.label.empty() || g.label.find_first_of("*^ ") != std::string::npos || g.label == "1")
            throw MalformedInput("invalid generator label '" + g.label + "'");
        if (!seen.insert(g.label).second) throw MalformedInput("duplicate generator '" + g.label + "'");
        if (g.degree % 2 == 0) has_even = true;
        else odd_total += g.degree;
    }
    if (has_even && !top_degree)
        throw InvalidInput("even-degree generators require an explicit truncation degree");
    top_degree_ = top_degree ? *top_degree : odd_total;

    // Enumerate exponent vectors of degree <= top.
    std::vector<std::pair<int, std::vector<int>>> monomials;
    std::vector<int> exps(generators_.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int deg) {
        if (g == generators_.size()) {
            monomials.emplace_back(deg, exps);
            return;
        }
        int max_power = generators_[g].degree % 2 ? 1 : (top_degree_ - deg) / generators_[g].degree;
        for (int e = 0; e <= max_power; ++e) {
            if (deg + e * generators_[g].degree > top_degree_) break;
            exps[g] = e;
            rec(g + 1, deg + e * generators_[g].degree);
        }
        exps[g] = 0;
    };
    rec(0, 0);
    std::sort(monomials.begin(), monomials.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    GradedSpace space;
    for (auto& [deg, e] : monomials) {
        auto idx = space.add(monomial_label(generators_, e), deg);
        index_.emplace(e, idx);
        exponents_.push_back(std::move(e));
    }
    space_ = make_space(std::move(space));
}

std::optional<BasisIndex> FreeGradedAlgebra::monomial(const std::vector<int>& exps) const {
    auto it = index_.find(exps);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vector FreeGradedAlgebra::generator(std::size_t g) const {
    std::vector<int> e(generators_.size(), 0);
    e[g] = 1;
    auto idx = monomial(e);
    return idx ? Vector::basis(*idx) : Vector{};
}

Vector FreeGradedAlgebra::multiply_basis(BasisIndex a, BasisIndex b) const {
    const auto& ea = exponents(a);
    const auto& eb = exponents(b);
    std::vector<int> sum(ea.size());
    long long sign_exp = 0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        sum[i] = ea[i] + eb[i];
        if (generators_[i].degree % 2 && sum[i] > 1) return {};
        // Moving the factors of b with index j < i past x_i^{a_i}.
        if (ea[i] && generators_[i].degree % 2)
            for (std::size_t j = 0; j < i; ++j)
                if (eb[j] && generators_[j].degree % 2) sign_exp += static_cast<long long>(ea[i]) * eb[j];
    }
    auto idx = monomial(sum);
    if (!idx) return {};
    return Vector::basis(*idx, sign_of_parity(sign_exp));
}

Vector FreeGradedAlgebra::multiply(const Vector& a, const Vector& b) const {
    Vector out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) out.axpy(x * y, multiply_basis(i, j));
    return out;
}

Vector FreeGradedAlgebra::evaluate(const Polynomial& p) const {
    Vector out;
    for (const auto& [coeff, factors] : p) {
        Vector term = Vector::basis(*monomial(std::vector<int>(generators_.size(), 0)));
        for (const auto& f : factors) {
            auto it = std::find_if(generators_.begin(), generators_.end(),
                                   [&](const Generator& g) { return g.label == f; });
            if (it == generators_.end()) throw MalformedInput("unknown generator '" + f + "' in polynomial");
            term = multiply(term, generator(static_cast<std::size_t>(it - generators_.begin())));
        }
        out.axpy(coeff, term);
    }
    return out;
}

MultiLinearMap FreeGradedAlgebra::product_table() const {
    MultiLinearMap m(space_, space_, 2, 0);
    for (std::size_t a = 0; a < space_->dim(); ++a)
        for (std::size_t b = 0; b < space_->dim(); ++b) {
            auto ia = static_cast<BasisIndex>(a);
            auto ib = static_cast<BasisIndex>(b);
            m.add({ia, ib}, multiply_basis(ia, ib));
        }
    return m;
}

GradedLinearMap FreeGradedAlgebra::derivation(const std::vector<Vector>& on_generators) const {
    if (on_generators.size() != generators_.size()) throw MalformedInput("derivation: one value per generator");
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const auto& v = on_generators[g];
        for (const auto& [i, c] : v)
            if (space_->degree(i) != generators_[g].degree + 1)
                throw InvalidInput("d(" + generators_[g].label + ") is not homogeneous of degree " +
                                   std::to_string(generators_[g].degree + 1));
    }
    GradedLinearMap d(space_, space_, 1);
    for (std::size_t i = 0; i < space_->dim(); ++i) {
        // Expand the monomial into an ordered word of generators and apply Leibniz.
        std::vector<std::size_t> word;
        const auto& e = exponents_[i];
        for (std::size_t g = 0; g < e.size(); ++g)
            for (int k = 0; k < e[g]; ++k) word.push_back(g);
        Vector total;
        int prefix_degree = 0;
        for (std::size_t pos = 0; pos < word.size(); ++pos) {
            Vector left = Vector::basis(*monomial(std::vector<int>(generators_.size(), 0)));
            for (std::size_t q = 0; q < pos; ++q) left = multiply(left, generator(word[q]));
            Vector term = multiply(left, on_generators[word[pos]]);
            for (std::size_t q = pos + 1; q < word.size(); ++q) term = multiply(term, generator(word[q]));
            total.axpy(sign_of_parity(prefix_degree), term);
            prefix_degree += generators_[word[pos]].degree;
        }
        d.set_column(static_cast<BasisIndex>(i), std::move(total));
    }
    return d;
}

Dga make_free_graded_commutative_dga(const std::vector<Generator>& generators,
                                     const std::vector<std::pair<std::string, Polynomial>>& d_on_generators,
                                     std::optional<int> top_degree) {
    FreeGradedAlgebra alg(generators, top_degree);
    std::vector<Vector> values(generators.size());
    for (const auto& [label, poly] : d_on_generators) {
        auto it = std::find_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.label == label; });
        if (it == generators.end()) throw MalformedInput("differential given for unknown generator '" + label + "'");
        values[static_cast<std::size_t>(it - generators.begin())] = alg.evaluate(poly);
    }
    GradedLinearMap d = alg.derivation(values);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        Vector gen = alg.generator(g);
        if (gen.is_zero()) continue;
        Vector dd = d.apply(d.apply(gen));
        if (!dd.is_zero())
            throw AxiomViolation("d∘d != 0 on generator '" + generators[g].label + "': " + format_vector(*alg.space(), dd));
    }
    auto unit = alg.monomial(std::vector<int>(generators.size(), 0));
    return Dga(alg.space(), std::move(d), alg.product_table(), unit);
}

Dga make_cpn_cohomology(int n) {
    if (n < 1) throw MalformedInput("CP^n needs n >= 1");
    return make_free_graded_commutative_dga({{"w", 2}}, {}, 2 * n);
}

namespace {

Vector product_of(const MultiLinearMap& m, BasisIndex a, BasisIndex b) { return m.at({a, b}); }

}  // namespace

Report check_dga_axioms(const Dga& a) {
    Report report;
    const GradedSpace& space = *a.space();
    const auto& m = a.product();
    const auto& d = a.d();
    const auto n = static_cast<BasisIndex>(space.dim());
    auto lbl = [&](BasisIndex i) { return space.label(i); };

    if (d.shift() != 1) report.fail("d-degree", "shift " + std::to_string(d.shift()));
    else report.pass("d-degree");

    {
        std::string witness;
        for (BasisIndex i = 0; i < n && witness.empty(); ++i)
            if (!d.apply(d.column(i)).is_zero()) witness = "(" + lbl(i) + ")";
        if (witness.empty()) report.pass("d-squared");
        else report.fail("d-squared", witness);
    }

    {
        std::string witness;
        for (BasisIndex i = 0; i < n && witness.empty(); ++i)
            for (BasisIndex j = 0; j < n && witness.empty(); ++j) {
                Vector xy = product_of(m, i, j);
                Vector yx = product_of(m, j, i);
                int s = sign_of_parity(static_cast<long long>(space.degree(i)) * space.degree(j));
                if (!(xy == s * yx)) witness = "(" + lbl(i) + ", " + lbl(j) + ")";
            }
        if (witness.empty()) report.pass("graded-commutativity");
        else report.fail("graded-commutativity", witness);
    }

    {
        std::string witness;
        for (BasisIndex i = 0; i < n && witness.empty(); ++i)
            for (BasisIndex j = 0; j < n && witness.empty(); ++j) {
                Vector lhs = d.apply(product_of(m, i, j));
                Vector rhs = a.multiply(d.column(i), Vector::basis(j));
                rhs.axpy(sign_of_parity(space.degree(i)), a.multiply(Vector::basis(i), d.column(j)));
                if (!(lhs == rhs)) witness = "(" + lbl(i) + ", " + lbl(j) + ")";
            }
        if (witness.empty()) report.pass("leibniz");
        else report.fail("leibniz", witness);
    }

    {
        // Only triples where one of the two partial products is nonzero can fail.
        std::set<Tuple> candidates;
        for (const auto& [key, v] : m.table())
            for (BasisIndex c = 0; c < n; ++c) {
                candidates.insert({key[0], key[1], c});
                candidates.insert({c, key[0], key[1]});
            }
        std::string witness;
        for (const auto& t : candidates) {
            Vector left = a.multiply(product_of(m, t[0], t[1]), Vector::basis(t[2]));
            Vector right = a.multiply(Vector::basis(t[0]), product_of(m, t[1], t[2]));
            if (!(left == right)) {
                witness = format_tuple(space, t);
                break;
            }
        }
        if (witness.empty()) report.pass("associativity");
        else report.fail("associativity", witness);
    }

    if (a.unit()) {
        std::string witness;
        BasisIndex u = *a.unit();
        if (space.degree(u) != 0) witness = "unit not in degree 0";
        if (witness.empty() && !d.column(u).is_zero()) witness = "d(1) != 0";
        for (BasisIndex i = 0; i < n && witness.empty(); ++i) {
            Vector x = Vector::basis(i);
            if (!(product_of(m, u, i) == x) || !(product_of(m, i, u) == x)) witness = "(" + lbl(i) + ")";
        }
        if (witness.empty()) report.pass("unit");
        else report.fail("unit", witness);
    }
    return report;
}

SpacePtr cohomology_space(const SplittingData& s) {
    const GradedSpace& amb = *s.space();
    GradedSpace h;
    std::map<int, int> count;
    for (std::size_t j = 0; j < s.harmonic().size(); ++j) {
        const Vector& c = s.harmonic()[j];
        int deg = s.harmonic_degree(j);
        int k = count[deg]++;
        std::string label;
        if (c.size() == 1 && c.begin()->second == 1) label = "[" + amb.label(c.begin()->first) + "]";
        if (label.empty() || h.find(label)) label = "[h" + std::to_string(deg) + "_" + std::to_string(k) + "]";
        h.add(std::move(label), deg);
    }
    return make_space(std::move(h));
}

CohomologyRing cohomology_ring(const Dga& a) {
    std::vector<Vector> preferred;
    if (a.unit()) preferred.push_back(Vector::basis(*a.unit()));
    SplittingData s = compute_splitting(a.d(), preferred);
    SpacePtr h = cohomology_space(s);
    const auto nh = static_cast<BasisIndex>(h->dim());

    GradedLinearMap projection(a.space(), h, 0);
    for (std::size_t i = 0; i < a.space()->dim(); ++i) {
        auto idx = static_cast<BasisIndex>(i);
        projection.set_column(idx, s.coordinates(Vector::basis(idx)).harmonic);
    }

    MultiLinearMap product(h, h, 2, 0);
    for (BasisIndex i = 0; i < nh; ++i)
        for (BasisIndex j = 0; j < nh; ++j) {
            Vector prod = a.multiply(s.harmonic()[static_cast<std::size_t>(i)], s.harmonic()[static_cast<std::size_t>(j)]);
            product.add({i, j}, s.class_coordinates(prod));
        }

    Report independence;
    {
        std::string witness;
        for (BasisIndex i = 0; i < nh && witness.empty(); ++i)
            for (std::size_t e = 0; e < s.exact().size() && witness.empty(); ++e) {
                const Vector& c = s.harmonic()[static_cast<std::size_t>(i)];
                const Vector& x = s.exact()[e];
                if (!s.class_coordinates(a.multiply(c, x)).is_zero() || !s.class_coordinates(a.multiply(x, c)).is_zero())
                    witness = h->label(i) + " · " + format_vector(*a.space(), x);
            }
        if (witness.empty()) independence.pass("representative-independence");
        else independence.fail("representative-independence", witness);
    }

    std::optional<BasisIndex> unit;
    if (a.unit()) {
        Vector cls = s.class_coordinates(Vector::basis(*a.unit()));
        if (cls.size() == 1 && cls.begin()->second == 1) unit = cls.begin()->first;
    }
    Dga ring(h, GradedLinearMap::zero(h, h, 1), std::move(product), unit);
    return CohomologyRing{std::move(ring), std::move(projection), std::move(s), std::move(independence)};
}

}  // namespace ainf
