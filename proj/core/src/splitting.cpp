#include "ainf/splitting.hpp"

#include "ainf/error.hpp"

namespace ainf {

namespace {

void require_differential(const GradedLinearMap& d) {
    if (d.shift() != 1) throw MalformedInput("differential must have degree +1");
    if (!(*d.source() == *d.target())) throw MalformedInput("differential must be an endomorphism");
}

}  // namespace

SplittingData SplittingData::from_bases(GradedLinearMap d, std::vector<Vector> harmonic, std::vector<Vector> complement) {
    require_differential(d);
    SplittingData s(std::move(d));
    const GradedSpace& space = *s.space();

    for (const auto& c : harmonic) {
        if (c.is_zero() || !c.degree_in(space)) throw InvalidInput("harmonic vectors must be nonzero and homogeneous");
        if (!s.d_.apply(c).is_zero())
            throw InvalidInput("harmonic vector " + format_vector(space, c) + " is not closed");
    }
    for (const auto& p : complement)
        if (p.is_zero() || !p.degree_in(space)) throw InvalidInput("complement vectors must be nonzero and homogeneous");

    s.harmonic_ = std::move(harmonic);
    s.complement_ = std::move(complement);
    for (const auto& p : s.complement_) s.exact_.push_back(s.d_.apply(p));
    for (const auto& c : s.harmonic_) s.harmonic_degree_.push_back(*c.degree_in(space));

    for (int deg : space.degrees()) {
        Block block;
        block.basis = space.in_degree(deg);
        std::map<BasisIndex, std::size_t> row_of;
        for (std::size_t r = 0; r < block.basis.size(); ++r) row_of[block.basis[r]] = r;
        std::vector<const Vector*> columns;
        auto collect = [&](const std::vector<Vector>& list, int kind) {
            for (std::size_t j = 0; j < list.size(); ++j) {
                if (list[j].is_zero() || *list[j].degree_in(space) != deg) continue;
                block.slots.emplace_back(kind, j);
                columns.push_back(&list[j]);
            }
        };
        collect(s.exact_, 0);
        collect(s.harmonic_, 1);
        collect(s.complement_, 2);
        if (columns.size() != block.basis.size())
            throw InvalidInput("E ⊕ C ⊕ P has dimension " + std::to_string(columns.size()) + " in degree " +
                               std::to_string(deg) + ", expected " + std::to_string(block.basis.size()));
        Matrix m(block.basis.size(), block.basis.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& [i, x] : *columns[c]) m(row_of.at(i), c) = x;
        try {
            block.inverse = m.inverse();
        } catch (const InvalidInput&) {
            throw InvalidInput("E, C, P are not independent in degree " + std::to_string(deg));
        }
        s.blocks_.emplace(deg, std::move(block));
    }
    return s;
}

SplittingData::Parts SplittingData::coordinates(const Vector& v) const {
    Parts out;
    const GradedSpace& space = *this->space();
    std::map<int, std::vector<std::pair<BasisIndex, Scalar>>> by_degree;
    for (const auto& [i, c] : v) by_degree[space.degree(i)].emplace_back(i, c);
    for (const auto& [deg, terms] : by_degree) {
        const Block& block = blocks_.at(deg);
        std::vector<Scalar> dense(block.basis.size());
        std::size_t r = 0;
        for (const auto& [i, c] : terms) {
            while (block.basis[r] != i) ++r;
            dense[r] = c;
        }
        auto coords = block.inverse.multiply(dense);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (sgn(coords[k]) == 0) continue;
            auto [kind, j] = block.slots[k];
            Vector& target = kind == 0 ? out.exact : (kind == 1 ? out.harmonic : out.complement);
            target.add_term(static_cast<BasisIndex>(j), coords[k]);
        }
    }
    return out;
}

Vector SplittingData::homotopy_of_exact_part(const Vector& v) const {
    Vector out;
    for (const auto& [j, c] : coordinates(v).exact) out.axpy(c, complement_[static_cast<std::size_t>(j)]);
    return out;
}

Vector SplittingData::homotopy(const Vector& v) const {
    auto parts = coordinates(v);
    if (!parts.harmonic.is_zero() || !parts.complement.is_zero())
        throw NotExact("vector " + format_vector(*space(), v) + " is not exact");
    Vector out;
    for (const auto& [j, c] : parts.exact) out.axpy(c, complement_[static_cast<std::size_t>(j)]);
    return out;
}

Vector SplittingData::class_coordinates(const Vector& closed) const {
    auto parts = coordinates(closed);
    if (!parts.complement.is_zero())
        throw InvalidInput("vector " + format_vector(*space(), closed) + " is not closed");
    return parts.harmonic;
}

Vector SplittingData::representative(const Vector& class_coords) const {
    Vector out;
    for (const auto& [j, c] : class_coords) out.axpy(c, harmonic_[static_cast<std::size_t>(j)]);
    return out;
}

std::map<int, std::size_t> SplittingData::betti() const {
    std::map<int, std::size_t> out;
    for (int d : space()->degrees()) out[d] = 0;
    for (int d : harmonic_degree_) ++out[d];
    return out;
}

SplittingData compute_splitting(const GradedLinearMap& d, std::span<const Vector> preferred) {
    require_differential(d);
    const GradedSpace& space = *d.source();

    // d∘d = 0, checked column by column.
    for (std::size_t i = 0; i < space.dim(); ++i) {
        auto idx = static_cast<BasisIndex>(i);
        Vector dd = d.apply(d.column(idx));
        if (!dd.is_zero())
            throw AxiomViolation("d∘d != 0 on '" + space.label(idx) + "': " + format_vector(space, dd));
    }

    std::vector<Vector> harmonic;
    std::vector<Vector> complement;
    std::map<int, std::vector<Vector>> exact_by_degree;

    for (int deg : space.degrees()) {
        const auto& basis = space.in_degree(deg);
        Matrix block = degree_block(d, deg);
        Matrix reduced = block;
        auto pivots = reduced.rref();
        for (auto p : pivots) {
            Vector unit = Vector::basis(basis[p]);
            exact_by_degree[deg + 1].push_back(d.apply(unit));
            complement.push_back(std::move(unit));
        }
    }

    for (int deg : space.degrees()) {
        const auto& basis = space.in_degree(deg);
        EchelonBasis span;
        for (const auto& e : exact_by_degree[deg]) span.insert(e);
        auto consider = [&](const Vector& z) {
            if (span.insert(z)) harmonic.push_back(z);
        };
        for (const auto& z : preferred) {
            if (z.is_zero() || z.degree_in(space) != deg) continue;
            if (!d.apply(z).is_zero()) throw InvalidInput("preferred representative is not closed");
            consider(z);
        }
        for (const auto& x : degree_block(d, deg).nullspace()) {
            Vector z;
            for (std::size_t c = 0; c < x.size(); ++c) z.add_term(basis[c], x[c]);
            consider(z);
        }
    }
    return SplittingData::from_bases(d, std::move(harmonic), std::move(complement));
}

Vector apply_homotopy_Q(const SplittingData& s, const Vector& v) { return s.homotopy(v); }

}  // namespace ainf
