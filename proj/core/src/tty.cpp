#include "ainf/tty.hpp"

#include "ainf/checks.hpp"
#include "ainf/error.hpp"
#include "ainf/extension.hpp"
#include "ainf/transfer.hpp"

#include <set>

namespace ainf {

namespace {

std::vector<Scalar> dense(const GradedSpace& s, int degree, const Vector& v) {
    const auto& basis = s.in_degree(degree);
    std::vector<Scalar> out(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) out[r] = v.coeff(basis[r]);
    return out;
}

Vector sparse(const GradedSpace& s, int degree, const std::vector<Scalar>& x) {
    const auto& basis = s.in_degree(degree);
    Vector out;
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (sgn(x[r]) != 0) out.add_term(basis[r], x[r]);
    return out;
}

Scalar unit_coefficient(const Dga& a, const Vector& v) { return a.unit() ? v.coeff(*a.unit()) : Scalar(0); }

}  // namespace

SymplecticModel::SymplecticModel(Dga dga, Vector omega) : dga_(std::move(dga)), omega_(std::move(omega)) {
    const GradedSpace& s = *dga_.space();
    generators_ = s.in_degree(1);
    const std::size_t m = generators_.size();
    if (m == 0 || m % 2 != 0) throw InvalidInput("symplectic model needs an even, positive number of degree-1 elements");
    n_ = static_cast<int>(m / 2);
    if (m >= 20 || s.dim() != (std::size_t{1} << m))
        throw InvalidInput("not an exterior algebra on its degree-1 part (no finite invariant-form model)");
    if (!dga_.unit() || s.in_degree(0).size() != 1) throw InvalidInput("symplectic model needs a unit in degree 0");
    for (int d : s.degrees())
        if (d < 0 || d > 2 * n_) throw InvalidInput("symplectic model has a basis element outside degrees 0..2n");

    // ι_i degree by degree: write a form as Σ_g g ∧ x_g, then
    // ι_i(g ∧ x) = δ(i, g) x − g ∧ ι_i(x).
    for (std::size_t i = 0; i < m; ++i) interior_.emplace_back(dga_.space(), dga_.space(), -1);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < m; ++i)
            if (i == g) interior_[i].set_column(generators_[g], Vector::basis(*dga_.unit()));
    for (int k = 2; k <= 2 * n_; ++k) {
        const auto& lower = s.in_degree(k - 1);
        const auto& upper = s.in_degree(k);
        Matrix M(upper.size(), m * lower.size());
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t c = 0; c < lower.size(); ++c) {
                Vector prod = dga_.multiply(Vector::basis(generators_[g]), Vector::basis(lower[c]));
                auto col = dense(s, k, prod);
                for (std::size_t r = 0; r < upper.size(); ++r) M(r, g * lower.size() + c) = col[r];
            }
        for (std::size_t r = 0; r < upper.size(); ++r) {
            std::vector<Scalar> target(upper.size());
            target[r] = 1;
            auto x = M.solve(target);
            if (!x) throw InvalidInput("algebra is not generated in degree 1");
            for (std::size_t i = 0; i < m; ++i) {
                Vector out;
                for (std::size_t g = 0; g < m; ++g) {
                    std::vector<Scalar> part(x->begin() + static_cast<std::ptrdiff_t>(g * lower.size()),
                                             x->begin() + static_cast<std::ptrdiff_t>((g + 1) * lower.size()));
                    Vector xg = sparse(s, k - 1, part);
                    if (xg.is_zero()) continue;
                    if (g == i) out += xg;
                    out -= dga_.multiply(Vector::basis(generators_[g]), interior_[i].apply(xg));
                }
                interior_[i].set_column(upper[r], std::move(out));
            }
        }
    }

    if (omega_.degree_in(s) != 2) throw InvalidInput("omega must be a nonzero element of degree 2");
    if (!dga_.differential(omega_).is_zero()) throw InvalidInput("omega is not closed");
    pairing_ = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            pairing_(i, j) = unit_coefficient(dga_, interior_[j].apply(interior_[i].apply(omega_)));
    try {
        inverse_ = pairing_.inverse();
    } catch (const InvalidInput&) {
        throw InvalidInput("omega is degenerate");
    }
}

LefschetzContext::LefschetzContext(SymplecticModel model)
    : model_(std::move(model)),
      L_(space(), space(), 2),
      Lambda_(space(), space(), -2),
      H_(space(), space(), 0) {
    const GradedSpace& s = *space();
    const Dga& a = model_.dga();
    const int n = model_.n();
    const std::size_t m = model_.generators().size();
    for (std::size_t b = 0; b < s.dim(); ++b) {
        auto idx = static_cast<BasisIndex>(b);
        Vector e = Vector::basis(idx);
        L_.set_column(idx, a.multiply(model_.omega(), e));
        Vector lam;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const Scalar& w = model_.inverse_pairing()(i, j);
                if (sgn(w) != 0) lam.axpy(w / 2, model_.interior(i).apply(model_.interior(j).apply(e)));
            }
        Lambda_.set_column(idx, std::move(lam));
        H_.set_column(idx, Vector::basis(idx, n - s.degree(idx)));
    }

    for (int k = 0; k <= 2 * n; ++k) {
        auto& prim = primitive_[k];
        if (k < 2) {
            for (auto i : s.in_degree(k)) prim.push_back(Vector::basis(i));
        } else {
            for (const auto& x : degree_block(Lambda_, k).nullspace()) prim.push_back(sparse(s, k, x));
        }
    }
    for (int k = 0; k <= 2 * n; ++k) {
        DegreeData data;
        for (int j = 0; 2 * j <= k; ++j) {
            int sdeg = k - 2 * j;
            if (j + sdeg > n) continue;
            for (const auto& p : primitive_.at(sdeg)) data.columns.emplace_back(j, p);
        }
        const auto& basis = s.in_degree(k);
        if (data.columns.size() != basis.size())
            throw AxiomViolation("Lefschetz decomposition has the wrong size in degree " + std::to_string(k));
        Matrix M(basis.size(), basis.size());
        for (std::size_t c = 0; c < data.columns.size(); ++c) {
            auto col = dense(s, k, L_power(data.columns[c].first, data.columns[c].second));
            for (std::size_t r = 0; r < basis.size(); ++r) M(r, c) = col[r];
        }
        try {
            data.inverse = M.inverse();
        } catch (const InvalidInput&) {
            throw AxiomViolation("Lefschetz decomposition is not unique in degree " + std::to_string(k));
        }
        degree_.emplace(k, std::move(data));
    }

    auto deg = [&](const Vector& v) { return *v.degree_in(s); };
    star_ = build([&](const auto& parts) {
        Vector out;
        for (const auto& [j, beta] : parts) out += L_power(n - j - deg(beta), beta);
        return out;
    });
    for (int l = 0; l <= n + 1; ++l) {
        linv_.push_back(build([&](const auto& parts) {
            Vector out;
            for (const auto& [j, beta] : parts)
                if (j >= l) out += L_power(j - l, beta);
            return out;
        }));
        pi_.push_back(build([&](const auto& parts) {
            Vector out;
            for (const auto& [j, beta] : parts)
                if (j <= l) out += L_power(j, beta);
            return out;
        }));
    }
    // d β = β' + L β'' for primitive β, so ∂₊(L^jβ) = L^jβ', ∂₋(L^jβ) = L^jβ''.
    dplus_.resize(s.dim());
    dminus_.resize(s.dim());
    for (std::size_t b = 0; b < s.dim(); ++b) {
        for (const auto& [j, beta] : decompose(Vector::basis(static_cast<BasisIndex>(b)))) {
            for (const auto& [jj, piece] : decompose(a.differential(beta))) {
                if (jj == 0)
                    dplus_[b] += L_power(j, piece);
                else if (jj == 1)
                    dminus_[b] += L_power(j, piece);
                else
                    throw AxiomViolation("d of a primitive form has an L^" + std::to_string(jj) + " component");
            }
        }
    }
}

const std::vector<Vector>& LefschetzContext::primitive_basis(int s) const {
    static const std::vector<Vector> empty;
    auto it = primitive_.find(s);
    return it == primitive_.end() ? empty : it->second;
}

Vector LefschetzContext::L_power(int j, const Vector& alpha) const {
    Vector v = alpha;
    for (int i = 0; i < j && !v.is_zero(); ++i) v = L_.apply(v);
    return v;
}

std::vector<std::pair<int, Vector>> LefschetzContext::decompose(const Vector& alpha) const {
    if (alpha.is_zero()) return {};
    auto k = alpha.degree_in(*space());
    if (!k) throw MalformedInput("Lefschetz decomposition needs a homogeneous form");
    const DegreeData& data = degree_.at(*k);
    auto coords = data.inverse.multiply(dense(*space(), *k, alpha));
    std::map<int, Vector> parts;
    for (std::size_t c = 0; c < coords.size(); ++c)
        if (sgn(coords[c]) != 0) parts[data.columns[c].first].axpy(coords[c], data.columns[c].second);
    std::vector<std::pair<int, Vector>> out;
    for (auto& [j, beta] : parts)
        if (!beta.is_zero()) out.emplace_back(j, std::move(beta));
    return out;
}

Vector LefschetzContext::assemble(const std::vector<std::pair<int, Vector>>& parts) const {
    Vector out;
    for (const auto& [j, beta] : parts) out += L_power(j, beta);
    return out;
}

LefschetzContext::Columns LefschetzContext::build(
    const std::function<Vector(const std::vector<std::pair<int, Vector>>&)>& on_parts) const {
    Columns cols(space()->dim());
    for (std::size_t b = 0; b < cols.size(); ++b) cols[b] = on_parts(decompose(Vector::basis(static_cast<BasisIndex>(b))));
    return cols;
}

Vector LefschetzContext::apply_columns(const Columns& c, const Vector& v) const {
    Vector out;
    for (const auto& [i, x] : v) out.axpy(x, c[static_cast<std::size_t>(i)]);
    return out;
}

Vector LefschetzContext::apply(LefschetzOp op, const Vector& alpha, int l) const {
    if (l < 0) throw OutOfRange("operator level must be >= 0");
    switch (op) {
        case LefschetzOp::L: return L_.apply(alpha);
        case LefschetzOp::Lambda: return Lambda_.apply(alpha);
        case LefschetzOp::H: return H_.apply(alpha);
        case LefschetzOp::StarR: return apply_columns(star_, alpha);
        case LefschetzOp::LInverse:
            if (l >= static_cast<int>(linv_.size())) return {};
            return apply_columns(linv_[static_cast<std::size_t>(l)], alpha);
        case LefschetzOp::Pi:
            return apply_columns(pi_[static_cast<std::size_t>(std::min(l, n()))], alpha);
    }
    return {};
}

Vector LefschetzContext::partial_plus(const Vector& alpha) const { return apply_columns(dplus_, alpha); }
Vector LefschetzContext::partial_minus(const Vector& alpha) const { return apply_columns(dminus_, alpha); }

Report LefschetzContext::check_identities() const {
    const GradedSpace& s = *space();
    Report r;
    auto run = [&](const std::string& name, const std::function<bool(const Vector&)>& ok) {
        for (std::size_t b = 0; b < s.dim(); ++b) {
            auto idx = static_cast<BasisIndex>(b);
            if (!ok(Vector::basis(idx))) {
                r.fail(name, "(" + s.label(idx) + ")");
                return;
            }
        }
        r.pass(name);
    };
    const auto& Lm = L_;
    const auto& Lam = Lambda_;
    const auto& Hm = H_;
    run("sl2-H-Lambda", [&](const Vector& e) { return Hm.apply(Lam.apply(e)) - Lam.apply(Hm.apply(e)) == 2 * Lam.apply(e); });
    run("sl2-H-L", [&](const Vector& e) { return Hm.apply(Lm.apply(e)) - Lm.apply(Hm.apply(e)) == -2 * Lm.apply(e); });
    run("sl2-Lambda-L", [&](const Vector& e) { return Lam.apply(Lm.apply(e)) - Lm.apply(Lam.apply(e)) == Hm.apply(e); });
    run("decomposition", [&](const Vector& e) {
        auto parts = decompose(e);
        for (const auto& [j, beta] : parts)
            if (!Lam.apply(beta).is_zero()) return false;
        return assemble(parts) == e;
    });
    run("star-involution", [&](const Vector& e) { return apply(LefschetzOp::StarR, apply(LefschetzOp::StarR, e)) == e; });
    run("pi-idempotent", [&](const Vector& e) {
        for (int l = 0; l <= n(); ++l) {
            Vector p = apply(LefschetzOp::Pi, e, l);
            if (!(apply(LefschetzOp::Pi, p, l) == p)) return false;
        }
        return true;
    });
    run("d-split", [&](const Vector& e) {
        return model_.dga().differential(e) == partial_plus(e) + Lm.apply(partial_minus(e));
    });
    run("partial-squares", [&](const Vector& e) {
        return partial_plus(partial_plus(e)).is_zero() && partial_minus(partial_minus(e)).is_zero();
    });
    run("partial-anticommute", [&](const Vector& e) {
        return Lm.apply(partial_plus(partial_minus(e))) == -Lm.apply(partial_minus(partial_plus(e)));
    });
    return r;
}

Vector FilteredComplex::from_form(bool plus, int k, const Vector& form) const {
    if (form.is_zero()) return {};
    auto it = row_basis.find(k);
    if (it == row_basis.end() || !it->second.reduce(form).is_zero())
        throw InvalidInput("form is not in F^" + std::to_string(level) + " in degree " + std::to_string(k));
    const auto& slots_k = slot_of_pivot.at({plus, k});
    Vector out;
    for (const auto& [pivot, row] : it->second.rows()) {
        Scalar c = form.coeff(pivot);
        if (sgn(c) != 0) out.add_term(slots_k.at(pivot), c);
    }
    return out;
}

namespace {

std::string row_label(const GradedSpace& s, const Vector& row, int k, std::size_t i) {
    if (row.size() == 1 && row.begin()->second == 1) return s.label(row.begin()->first);
    return "f" + std::to_string(k) + "_" + std::to_string(i);
}

}  // namespace

FilteredComplex build_filtered_complex(LefschetzPtr context, int level) {
    const int n = context->n();
    if (level < 0 || level > n) throw OutOfRange("filtration level must lie in 0..n");
    const int N = n + level;
    const GradedSpace& omega = *context->space();
    FilteredComplex c{context, level, nullptr, {}, GradedLinearMap(context->space(), context->space(), 1), {}, {}, {}};

    for (int k = 0; k <= N; ++k) {
        EchelonBasis& rb = c.row_basis[k];
        for (auto i : omega.in_degree(k)) rb.insert(context->apply(LefschetzOp::Pi, Vector::basis(i), level));
    }
    GradedSpace x;
    auto add_row = [&](bool plus, int k) {
        std::size_t i = 0;
        for (const auto& [pivot, row] : c.row_basis.at(k).rows()) {
            std::string label = (plus ? "+" : "-") + row_label(omega, row, k, i++);
            BasisIndex idx = x.add(label, plus ? k : 2 * N + 1 - k);
            c.slot_of_pivot[{plus, k}][pivot] = idx;
            c.slots.push_back({plus, k, row});
        }
    };
    for (int k = 0; k <= N; ++k) add_row(true, k);
    for (int k = N; k >= 0; --k) add_row(false, k);
    c.space = make_space(std::move(x));

    const Dga& a = context->model().dga();
    auto star = [&](const Vector& v) { return context->apply(LefschetzOp::StarR, v); };
    auto pi = [&](const Vector& v) { return context->apply(LefschetzOp::Pi, v, level); };
    auto d_minus = [&](const Vector& v) { return star(a.differential(star(v))); };
    auto turn = [&](const Vector& v) { return context->partial_plus(context->partial_minus(v)); };

    GradedLinearMap m1(c.space, c.space, 1);
    for (std::size_t i = 0; i < c.slots.size(); ++i) {
        const auto& slot = c.slots[i];
        Vector image;
        if (slot.plus && slot.form_degree < N)
            image = c.from_form(true, slot.form_degree + 1, pi(a.differential(slot.form)));
        else if (slot.plus)
            image = c.from_form(false, N, -turn(slot.form));
        else if (slot.form_degree > 0)
            image = c.from_form(false, slot.form_degree - 1, -d_minus(slot.form));
        m1.set_column(static_cast<BasisIndex>(i), std::move(image));
    }
    c.m1 = std::move(m1);

    auto check = [&](const std::string& name, bool plus_row, const std::function<bool(const Vector&, int)>& ok) {
        for (const auto& slot : c.slots)
            if (slot.plus == plus_row && !ok(slot.form, slot.form_degree)) {
                c.report.fail(name, format_vector(omega, slot.form));
                return;
            }
        c.report.pass(name);
    };
    check("d-plus-squared", true, [&](const Vector& f, int) { return pi(a.differential(pi(a.differential(f)))).is_zero(); });
    check("d-minus-squared", false, [&](const Vector& f, int) { return d_minus(d_minus(f)).is_zero(); });
    check("turn-after-d-plus", true,
          [&](const Vector& f, int k) { return k != N - 1 || turn(pi(a.differential(f))).is_zero(); });
    check("d-minus-after-turn", true, [&](const Vector& f, int k) { return k != N || d_minus(turn(f)).is_zero(); });
    bool squared_zero = c.m1.after(c.m1).is_zero();
    if (squared_zero)
        c.report.pass("m1-squared");
    else
        c.report.fail("m1-squared", "m1 o m1 != 0");
    return c;
}

TTYStructure build_tty_structure(const FilteredComplex& complex, int pmax) {
    if (pmax < 3) throw OutOfRange("TTY structure needs pmax >= 3");
    const LefschetzContext& ctx = *complex.context;
    const Dga& a = ctx.model().dga();
    const int l = complex.level;
    const int N = complex.top_form_degree();
    const GradedSpace& x = *complex.space;
    const auto dim = static_cast<BasisIndex>(x.dim());

    auto star = [&](const Vector& v) { return ctx.apply(LefschetzOp::StarR, v); };
    auto pi = [&](const Vector& v) { return ctx.apply(LefschetzOp::Pi, v, l); };
    auto linv = [&](const Vector& v) { return ctx.apply(LefschetzOp::LInverse, v, l + 1); };
    auto wedge = [&](const Vector& u, const Vector& v) { return a.multiply(u, v); };

    Report report;
    std::string outside;
    // A form of degree k in the given row; degrees outside 0..N must vanish.
    auto place = [&](bool plus, int k, const Vector& form, const Tuple& key) -> Vector {
        if (form.is_zero()) return {};
        try {
            if (k < 0 || k > N) throw InvalidInput("degree outside the complex");
            return complex.from_form(plus, k, form);
        } catch (const InvalidInput&) {
            if (outside.empty()) outside = format_tuple(x, key);
            return {};
        }
    };

    std::optional<BasisIndex> unit;
    for (BasisIndex i = 0; i < dim; ++i)
        if (complex.slots[static_cast<std::size_t>(i)].plus && complex.form(i) == Vector::basis(*a.unit()))
            unit = i;
    auto s = std::make_shared<AInfStructure>(complex.space, pmax, unit);
    s->set(1, as_multilinear(complex.m1));

    MultiLinearMap m2(complex.space, complex.space, 2, 0);
    for (BasisIndex i = 0; i < dim; ++i)
        for (BasisIndex j = 0; j < dim; ++j) {
            const auto& si = complex.slots[static_cast<std::size_t>(i)];
            const auto& sj = complex.slots[static_cast<std::size_t>(j)];
            const int k1 = si.form_degree, k2 = sj.form_degree;
            Vector value;
            if (si.plus && sj.plus) {
                Vector prod = wedge(si.form, sj.form);
                value += place(true, k1 + k2, pi(prod), {i, j});
                Vector inner = -a.differential(linv(prod)) + wedge(linv(si.form), sj.form) +
                               sign_of_parity(k1) * wedge(si.form, linv(sj.form));
                value += place(false, 2 * N + 1 - k1 - k2, pi(star(inner)), {i, j});
            } else if (si.plus) {
                value = place(false, k2 - k1, sign_of_parity(k1) * star(wedge(si.form, star(sj.form))), {i, j});
            } else if (sj.plus) {
                value = place(false, k1 - k2, star(wedge(star(si.form), sj.form)), {i, j});
            }
            if (!value.is_zero()) m2.set({i, j}, std::move(value));
        }
    s->set(2, m2);

    MultiLinearMap m3(complex.space, complex.space, 3, -1);
    std::vector<BasisIndex> plus;
    for (BasisIndex i = 0; i < dim; ++i)
        if (complex.slots[static_cast<std::size_t>(i)].plus) plus.push_back(i);
    for (BasisIndex i : plus)
        for (BasisIndex j : plus)
            for (BasisIndex k : plus) {
                const auto& f1 = complex.form(i);
                const auto& f2 = complex.form(j);
                const auto& f3 = complex.form(k);
                int total = x.degree(i) + x.degree(j) + x.degree(k);
                if (total < N + 2) continue;
                Vector inner = wedge(f1, linv(wedge(f2, f3))) - wedge(linv(wedge(f1, f2)), f3);
                Vector value = place(false, 2 * N + 2 - total, pi(star(inner)), {i, j, k});
                if (!value.is_zero()) m3.set({i, j, k}, std::move(value));
            }
    s->set(3, m3);

    if (outside.empty())
        report.pass("products-in-filtration");
    else
        report.fail("products-in-filtration", outside);

    std::string witness;
    for (BasisIndex i = 0; i < dim && witness.empty(); ++i)
        for (BasisIndex j = 0; j < dim && witness.empty(); ++j)
            if (!(m2.at({i, j}) == sign_of_parity(static_cast<long long>(x.degree(i)) * x.degree(j)) * m2.at({j, i})))
                witness = format_tuple(x, {i, j});
    if (witness.empty())
        report.pass("m2-graded-commutative");
    else
        report.fail("m2-graded-commutative", witness);

    witness.clear();
    if (!unit) {
        report.fail("m2-unit", "no unit");
    } else {
        for (BasisIndex i = 0; i < dim && witness.empty(); ++i)
            if (!(m2.at({*unit, i}) == Vector::basis(i)) || !(m2.at({i, *unit}) == Vector::basis(i)))
                witness = format_tuple(x, {*unit, i});
        if (witness.empty())
            report.pass("m2-unit");
        else
            report.fail("m2-unit", witness);
    }
    report.merge(check_stasheff(*s, pmax));
    return {complex, std::move(s), std::move(report)};
}

namespace {

std::map<int, std::size_t> nonzero_betti(const SplittingData& s) {
    auto b = s.betti();
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
    return b;
}

// Rank of m_2 restricted to H^a ⊗ H^b, for every pair of degrees.
std::map<std::pair<int, int>, std::size_t> rank_profile(const MultiLinearMap& m2) {
    const GradedSpace& h = *m2.source();
    std::map<std::pair<int, int>, EchelonBasis> spans;
    for (int a : h.degrees())
        for (int b : h.degrees()) spans[{a, b}];
    for (const auto& [key, value] : m2.table()) spans[{h.degree(key[0]), h.degree(key[1])}].insert(value);
    std::map<std::pair<int, int>, std::size_t> out;
    for (const auto& [k, e] : spans)
        if (e.rank() > 0) out[k] = e.rank();
    return out;
}

std::string format_dims(const std::map<int, std::size_t>& dims) {
    std::string out;
    for (const auto& [d, n] : dims) out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(n);
    return out;
}

}  // namespace

Report compare_with_extension(LefschetzPtr context, int level) {
    FilteredComplex complex = build_filtered_complex(context, level);
    const SymplecticModel& model = context->model();
    Vector power = model.omega();
    for (int i = 0; i < level; ++i) power = model.dga().multiply(power, model.omega());
    ExtensionDga ext = extend_dga(model.dga(), power, 2 * level + 1);

    Report r;
    SplittingData st = compute_splitting(complex.m1);
    auto ring = cohomology_ring(ext.dga);
    auto tty_dims = nonzero_betti(st);
    auto ext_dims = nonzero_betti(ring.splitting);
    if (tty_dims == ext_dims)
        r.pass("cohomology-dims");
    else
        r.fail("cohomology-dims", "tty {" + format_dims(tty_dims) + "} vs extension {" + format_dims(ext_dims) + "}");

    TTYStructure tty = build_tty_structure(complex, 3);
    auto t = kadeishvili_transfer(*tty.structure, st, 2);
    if (rank_profile(t.minimal->m(2)) == rank_profile(ring.ring.product()))
        r.pass("m2-rank-profile");
    else
        r.fail("m2-rank-profile", "ranks of m2 by degree pair differ");
    return r;
}

}  // namespace ainf
