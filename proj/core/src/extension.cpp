#include "ainf/extension.hpp"

#include "ainf/error.hpp"
#include "ainf/linalg.hpp"

#include <set>
#include <sstream>

namespace ainf {

Vector ExtensionDga::embed(const Vector& xi) const { return xi; }

Vector ExtensionDga::theta_times(const Vector& eta) const {
    Vector out;
    for (const auto& [i, c] : eta) out.add_term(theta(i), c);
    return out;
}

std::pair<Vector, Vector> ExtensionDga::split(const Vector& v) const {
    Vector xi, eta;
    auto n = static_cast<BasisIndex>(base_dim());
    for (const auto& [i, c] : v) {
        if (i < n)
            xi.add_term(i, c);
        else
            eta.add_term(i - n, c);
    }
    return {std::move(xi), std::move(eta)};
}

namespace {

int homogeneous_degree(const GradedSpace& s, const Vector& v, const char* what) {
    auto d = v.degree_in(s);
    if (!d) throw InvalidInput(std::string(what) + " is not homogeneous");
    return *d;
}

std::string label_theta(const Dga& a, BasisIndex i) {
    if (a.unit() && *a.unit() == i) return "th";
    return "th*" + a.space()->label(i);
}

}  // namespace

ExtensionDga extend_dga(const Dga& a, const Vector& omega, int theta_degree) {
    const GradedSpace& base = *a.space();
    if (theta_degree % 2 == 0) throw InvalidInput("theta degree must be odd");
    if (!omega.is_zero()) {
        int deg = homogeneous_degree(base, omega, "omega");
        if (deg % 2 != 0) throw InvalidInput("omega must have even degree");
        if (theta_degree != deg - 1)
            throw InvalidInput("theta degree " + std::to_string(theta_degree) + " != |omega| - 1 = " +
                               std::to_string(deg - 1));
        if (!a.differential(omega).is_zero()) throw InvalidInput("omega is not closed");
    }

    GradedSpace g;
    const auto n = static_cast<BasisIndex>(base.dim());
    for (BasisIndex i = 0; i < n; ++i) g.add(base.label(i), base.degree(i));
    for (BasisIndex i = 0; i < n; ++i) g.add(label_theta(a, i), theta_degree + base.degree(i));
    auto space = make_space(std::move(g));

    ExtensionDga out{a, omega, theta_degree, Dga(space, GradedLinearMap(space, space, 1),
                                                 MultiLinearMap(space, space, 2, 0), a.unit())};
    GradedLinearMap d(space, space, 1);
    for (BasisIndex i = 0; i < n; ++i) {
        Vector di = a.d().column(i);
        d.set_column(out.plain(i), out.embed(di));
        // d(θη) = ωη − θ dη
        Vector v = out.embed(a.multiply(omega, Vector::basis(i)));
        v -= out.theta_times(di);
        d.set_column(out.theta(i), std::move(v));
    }
    MultiLinearMap m(space, space, 2, 0);
    for (const auto& [key, value] : a.product().table()) {
        BasisIndex i = key[0], j = key[1];
        m.set({out.plain(i), out.plain(j)}, out.embed(value));
        m.set({out.plain(i), out.theta(j)}, sign_of_parity(base.degree(i)) * out.theta_times(value));
        m.set({out.theta(i), out.plain(j)}, out.theta_times(value));
    }
    out.dga = Dga::checked(space, std::move(d), std::move(m), a.unit());
    return out;
}

namespace {

Report check_dga_morphism(const GradedLinearMap& f, const Dga& a, const Dga& b, const std::string& name) {
    Report r;
    const auto n = static_cast<BasisIndex>(a.space()->dim());
    std::string witness;
    for (BasisIndex i = 0; i < n && witness.empty(); ++i)
        if (!(f.apply(a.d().column(i)) == b.differential(f.column(i)))) witness = "(" + a.space()->label(i) + ")";
    if (witness.empty())
        r.pass(name + "-d");
    else
        r.fail(name + "-d", witness);

    witness.clear();
    for (BasisIndex i = 0; i < n && witness.empty(); ++i)
        for (BasisIndex j = 0; j < n && witness.empty(); ++j) {
            Vector lhs = f.apply(a.product().at({i, j}));
            if (!(lhs == b.multiply(f.column(i), f.column(j)))) witness = format_tuple(*a.space(), {i, j});
        }
    if (witness.empty())
        r.pass(name + "-product");
    else
        r.fail(name + "-product", witness);

    if (a.unit() && b.unit() && !(f.column(*a.unit()) == Vector::basis(*b.unit())))
        r.fail(name + "-unit", "(" + a.space()->label(*a.unit()) + ")");
    else
        r.pass(name + "-unit");
    return r;
}

}  // namespace

Report check_quasi_isomorphism(const GradedLinearMap& f, const Dga& a, const Dga& b, const std::string& name) {
    SplittingData sa = compute_splitting(a.d());
    SplittingData sb = compute_splitting(b.d());
    auto ba = sa.betti();
    auto bb = sb.betti();
    std::set<int> degrees;
    for (auto [d, k] : ba) degrees.insert(d);
    for (auto [d, k] : bb) degrees.insert(d);
    Report r;
    std::string witness;
    for (int d : degrees) {
        std::size_t na = ba.count(d) ? ba.at(d) : 0;
        std::size_t nb = bb.count(d) ? bb.at(d) : 0;
        EchelonBasis image;
        for (std::size_t j = 0; j < sa.harmonic().size(); ++j)
            if (sa.harmonic_degree(j) == d) image.insert(sb.class_coordinates(f.apply(sa.harmonic()[j])));
        if (na != nb || image.rank() != na) {
            witness = "degree " + std::to_string(d) + ": dim " + std::to_string(na) + " -> " + std::to_string(nb) +
                      ", rank " + std::to_string(image.rank());
            break;
        }
    }
    if (witness.empty())
        r.pass(name + "-quasi-isomorphism");
    else
        r.fail(name + "-quasi-isomorphism", witness);
    return r;
}

ExtensionMorphism extension_morphism(const GradedLinearMap& f, const ExtensionDga& a, const ExtensionDga& b,
                                     const Vector& r) {
    if (!(*f.source() == *a.base.space()) || !(*f.target() == *b.base.space()) || f.shift() != 0)
        throw MalformedInput("f must be a degree-0 map between the base algebras");
    Report report = check_dga_morphism(f, a.base, b.base, "f");
    if (!report.passed())
        throw InvalidInput("f is not a dga morphism: " + report.first_failure()->name + " at " +
                           report.first_failure()->witness);
    if (!(f.apply(a.omega) + b.base.differential(r) == b.omega))
        throw InvalidWitness("f(omega_A) + dr != omega_B");
    if (a.theta_degree != b.theta_degree) throw InvalidInput("theta degrees differ");
    report.merge(check_quasi_isomorphism(f, a.base, b.base, "f"));

    GradedLinearMap g(a.dga.space(), b.dga.space(), 0);
    const auto n = static_cast<BasisIndex>(a.base_dim());
    for (BasisIndex i = 0; i < n; ++i) {
        g.set_column(a.plain(i), b.embed(f.column(i)));
        // θ'_B = θ_B − r
        Vector v = b.theta_times(f.column(i));
        v -= b.embed(b.base.multiply(r, f.column(i)));
        g.set_column(a.theta(i), std::move(v));
    }
    report.merge(check_dga_morphism(g, a.dga, b.dga, "g"));
    report.merge(check_quasi_isomorphism(g, a.dga, b.dga, "g"));
    return {std::move(g), std::move(report)};
}

namespace {

// Echelon basis of the span plus unit vectors at the non-pivot positions
// of each degree.
std::vector<Vector> complement_units(const GradedSpace& s, const std::vector<Vector>& span) {
    EchelonBasis e;
    for (const auto& v : span) e.insert(v);
    auto pivots = e.pivots();
    std::set<BasisIndex> taken(pivots.begin(), pivots.end());
    std::vector<Vector> out;
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!taken.count(static_cast<BasisIndex>(i))) out.push_back(Vector::basis(static_cast<BasisIndex>(i)));
    return out;
}

}  // namespace

FormalExtensionModel formal_extension_minimal_model(const Dga& a, const Vector& omega, int pmax) {
    if (!a.d().is_zero()) throw InvalidInput("formal extension model needs d = 0");
    if (pmax < 2) throw OutOfRange("pmax must be >= 2");
    const GradedSpace& base = *a.space();
    int theta_degree = 1;
    if (!omega.is_zero()) {
        int deg = homogeneous_degree(base, omega, "omega");
        if (deg % 2 != 0) throw InvalidInput("omega must have even degree");
        theta_degree = deg - 1;
    }
    ExtensionDga ext = extend_dga(a, omega, theta_degree);
    std::vector<Vector> ideal_basis, complement_of_ideal, kernel_of_L, complement_of_kernel;

    GradedLinearMap L(a.space(), a.space(), omega.is_zero() ? 0 : *omega.degree_in(base));
    for (std::size_t i = 0; i < base.dim(); ++i) {
        auto idx = static_cast<BasisIndex>(i);
        L.set_column(idx, a.multiply(omega, Vector::basis(idx)));
    }
    EchelonBasis ideal;
    for (std::size_t i = 0; i < base.dim(); ++i)
        if (ideal.insert(L.column(static_cast<BasisIndex>(i)))) ideal_basis.push_back(L.column(static_cast<BasisIndex>(i)));
    complement_of_ideal = complement_units(base, ideal_basis);

    for (int d : base.degrees()) {
        const auto& cols = base.in_degree(d);
        for (const auto& k : degree_block(L, d).nullspace()) {
            Vector v;
            for (std::size_t c = 0; c < k.size(); ++c)
                if (sgn(k[c]) != 0) v.add_term(cols[c], k[c]);
            kernel_of_L.push_back(std::move(v));
        }
    }
    complement_of_kernel = complement_units(base, kernel_of_L);

    std::vector<Vector> harmonic, complement;
    for (const auto& c : complement_of_ideal) harmonic.push_back(ext.embed(c));
    for (const auto& k : kernel_of_L) harmonic.push_back(ext.theta_times(k));
    for (const auto& p : complement_of_kernel) complement.push_back(ext.theta_times(p));
    SplittingData s = SplittingData::from_bases(ext.dga.d(), harmonic, complement);

    auto source = std::make_shared<const AInfStructure>(AInfStructure::from_dga(ext.dga, pmax));
    TransferResult transfer = begin_transfer(source, std::move(s), pmax);
    for (int p = 2; p <= pmax; ++p) transfer_step(transfer, p);
    if (a.unit()) {
        Vector u = Vector::basis(*a.unit());
        for (std::size_t j = 0; j < harmonic.size(); ++j)
            if (harmonic[j] == u) transfer.minimal->set_unit(static_cast<BasisIndex>(j));
    }
    FormalExtensionModel model{std::move(ext),         std::move(ideal_basis),          std::move(complement_of_ideal),
                               std::move(kernel_of_L), std::move(complement_of_kernel), std::move(transfer),
                               {}};
    const ExtensionDga& ext_ = model.extension;

    const auto& t = model.transfer;
    for (int p = 4; p <= pmax; ++p) {
        const auto& m = t.minimal->m(p);
        if (m.is_zero())
            model.report.pass("m-vanishing-" + std::to_string(p));
        else
            model.report.fail("m-vanishing-" + std::to_string(p), format_tuple(*m.source(), m.table().begin()->first));
    }
    for (int p = 3; p <= pmax; ++p) {
        const auto& f = t.morphism->f(p);
        if (f.is_zero())
            model.report.pass("f-vanishing-" + std::to_string(p));
        else
            model.report.fail("f-vanishing-" + std::to_string(p), format_tuple(*f.source(), f.table().begin()->first));
    }
    std::string witness;
    for (const auto& [key, value] : t.morphism->f(2).table())
        if (!ext_.split(value).first.is_zero()) {
            witness = format_tuple(*t.minimal->space(), key);
            break;
        }
    if (witness.empty())
        model.report.pass("f2-image-theta");
    else
        model.report.fail("f2-image-theta", witness);
    return model;
}

namespace {

std::vector<Generator> torus_generators(int count) {
    std::vector<Generator> gens;
    for (int i = 1; i <= count; ++i) gens.push_back({"e" + std::to_string(i), 1});
    return gens;
}

std::string class_text(const GradedSpace& h, const Vector& v) { return format_vector(h, v); }

}  // namespace

TorusWitness torus_nonformality_witness(int n, int pmax) {
    if (n < 2) throw OutOfRange("torus witness needs n >= 2");
    if (pmax < 3) throw OutOfRange("torus witness needs pmax >= 3");
    Dga a = make_free_graded_commutative_dga(torus_generators(2 * n), {});
    auto e = [&](int i) { return a.element("e" + std::to_string(i)); };
    Vector omega;
    for (int j = 1; j <= n; ++j) omega += a.multiply(e(2 * j - 1), e(2 * j));
    Vector y = e(3);
    for (int j = 3; j <= n; ++j) y = a.multiply(y, e(2 * j - 1));

    TorusWitness w{n, formal_extension_minimal_model(a, omega, pmax), {}, {}, {}, {}, std::nullopt, false, false, {}};
    const auto& t = w.model.transfer;
    const auto& ext = w.model.extension;
    const GradedSpace& h = *t.minimal->space();
    w.x = t.splitting.class_coordinates(ext.embed(a.multiply(y, e(1))));
    w.e2 = t.splitting.class_coordinates(ext.embed(e(2)));
    std::array<Vector, 2> pair{w.x, w.e2};
    w.m2_vanishes = t.minimal->m(2).evaluate(pair).is_zero();
    std::array<Vector, 3> triple{w.x, w.e2, w.e2};
    w.value = t.minimal->m(3).evaluate(triple);
    w.expected = t.splitting.class_coordinates(ext.theta_times(a.multiply(y, e(2))));
    w.nonzero = !w.value.is_zero();
    if (!w.expected.is_zero()) {
        const auto& [i0, c0] = *w.expected.begin();
        Scalar ratio = w.value.coeff(i0) / c0;
        if (w.value == ratio * w.expected) w.ratio = ratio;
    }

    std::string ylabel = ext.dga.space()->label(y.begin()->first);
    w.lines.push_back("torus T^" + std::to_string(2 * n) + ", omega = " + format_vector(*a.space(), omega));
    w.lines.push_back("y = " + ylabel);
    w.lines.push_back("x = [y e1] = " + class_text(h, w.x));
    w.lines.push_back("[e2] = " + class_text(h, w.e2));
    w.lines.push_back("m2(x, [e2]) = " + std::string(w.m2_vanishes ? "0" : "nonzero"));
    w.lines.push_back("m3(x, [e2], [e2]) = " + class_text(h, w.value));
    w.lines.push_back("[th y e2] = " + class_text(h, w.expected));
    w.lines.push_back(w.ratio ? "ratio = " + format_scalar(*w.ratio) : std::string("ratio = none"));
    w.lines.push_back(std::string("verdict: ") + (w.nonzero && w.ratio ? "not formal" : "inconclusive"));
    return w;
}

CpnCertificate cpn_formality_certificate(int n, int pmax) {
    Dga a = make_cpn_cohomology(n);
    CpnCertificate c{n, formal_extension_minimal_model(a, a.element("w"), pmax), {}, {}, false, {}};
    const auto& minimal = *c.model.transfer.minimal;
    c.cohomology_degrees = minimal.space()->degrees();
    c.m3_zero = minimal.m(3).is_zero();
    c.vanishing = vanishing_profile(minimal);
    std::ostringstream degs;
    for (std::size_t i = 0; i < c.cohomology_degrees.size(); ++i) degs << (i ? " " : "") << c.cohomology_degrees[i];
    c.lines.push_back("CP^" + std::to_string(n) + " extended by th, d th = w");
    c.lines.push_back("cohomology degrees: " + degs.str());
    for (int p = 3; p <= pmax; ++p)
        c.lines.push_back("m" + std::to_string(p) + (minimal.m(p).is_zero() ? " = 0" : " != 0"));
    if (c.vanishing.degree_bound)
        c.lines.push_back("degree bound: m_p = 0 for p >= " + std::to_string(*c.vanishing.degree_bound));
    return c;
}

}  // namespace ainf
