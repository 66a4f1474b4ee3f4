#include "ainf/graded.hpp"

#include "ainf/error.hpp"

namespace ainf {

BasisIndex GradedSpace::add(std::string label, int degree) {
    if (label.empty()) throw MalformedInput("empty basis label");
    if (index_.count(label)) throw MalformedInput("duplicate basis label '" + label + "'");
    auto idx = static_cast<BasisIndex>(labels_.size());
    index_.emplace(label, idx);
    labels_.push_back(std::move(label));
    degrees_.push_back(degree);
    by_degree_[degree].push_back(idx);
    return idx;
}

std::optional<BasisIndex> GradedSpace::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

BasisIndex GradedSpace::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw MalformedInput("unknown basis label '" + std::string(label) + "'");
    return *i;
}

const std::vector<BasisIndex>& GradedSpace::in_degree(int d) const {
    static const std::vector<BasisIndex> empty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? empty : it->second;
}

std::vector<int> GradedSpace::degrees() const {
    std::vector<int> out;
    for (const auto& [d, basis] : by_degree_) out.push_back(d);
    return out;
}

std::map<int, std::size_t> GradedSpace::dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [d, basis] : by_degree_) out[d] = basis.size();
    return out;
}

GradedSpace GradedSpace::shifted(int by) const {
    GradedSpace out;
    for (std::size_t i = 0; i < labels_.size(); ++i) out.add(labels_[i], degrees_[i] + by);
    return out;
}

Vector Vector::basis(BasisIndex i, const Scalar& c) {
    Vector v;
    v.add_term(i, c);
    return v;
}

Scalar Vector::coeff(BasisIndex i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Vector::add_term(BasisIndex i, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

void Vector::axpy(const Scalar& c, const Vector& v) {
    if (sgn(c) == 0) return;
    for (const auto& [i, x] : v.terms_) add_term(i, c * x);
}

Vector& Vector::operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, x] : terms_) x *= c;
    return *this;
}

std::optional<int> Vector::degree_in(const GradedSpace& space) const {
    std::optional<int> d;
    for (const auto& [i, x] : terms_) {
        int di = space.degree(i);
        if (d && *d != di) return std::nullopt;
        d = di;
    }
    return d;
}

Vector Vector::component(const GradedSpace& space, int d) const {
    Vector out;
    for (const auto& [i, x] : terms_)
        if (space.degree(i) == d) out.terms_.emplace(i, x);
    return out;
}

std::string format_vector(const GradedSpace& space, const Vector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) out += (sgn(c) < 0) ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        first = false;
        Scalar a = abs(c);
        out += format_scalar(a) + "*" + space.label(i);
    }
    return out;
}

std::string format_tuple(const GradedSpace& space, const Tuple& t) {
    std::string out = "(";
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j) out += ", ";
        out += space.label(t[j]);
    }
    return out + ")";
}

GradedLinearMap::GradedLinearMap(SpacePtr source, SpacePtr target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift), columns_(source_->dim()) {}

void GradedLinearMap::set_column(BasisIndex i, Vector image) {
    if (i < 0 || static_cast<std::size_t>(i) >= columns_.size()) throw MalformedInput("column index out of range");
    int want = source_->degree(i) + shift_;
    for (const auto& [j, c] : image) {
        if (j < 0 || static_cast<std::size_t>(j) >= target_->dim())
            throw MalformedInput("image index out of range");
        if (target_->degree(j) != want)
            throw MalformedInput("image of '" + source_->label(i) + "' has a term '" + target_->label(j) +
                                 "' outside degree " + std::to_string(want));
    }
    columns_[static_cast<std::size_t>(i)] = std::move(image);
}

Vector GradedLinearMap::apply(const Vector& v) const {
    Vector out;
    for (const auto& [i, c] : v) out.axpy(c, columns_[static_cast<std::size_t>(i)]);
    return out;
}

GradedLinearMap GradedLinearMap::after(const GradedLinearMap& inner) const {
    if (!(*inner.target_ == *source_)) throw MalformedInput("composition of maps with mismatched spaces");
    GradedLinearMap out(inner.source_, target_, inner.shift_ + shift_);
    for (std::size_t i = 0; i < inner.columns_.size(); ++i)
        out.columns_[i] = apply(inner.columns_[i]);
    return out;
}

bool GradedLinearMap::is_zero() const {
    for (const auto& c : columns_)
        if (!c.is_zero()) return false;
    return true;
}

GradedLinearMap GradedLinearMap::identity(const SpacePtr& space) {
    GradedLinearMap out(space, space, 0);
    for (std::size_t i = 0; i < space->dim(); ++i) out.columns_[i] = Vector::basis(static_cast<BasisIndex>(i));
    return out;
}

GradedLinearMap GradedLinearMap::zero(SpacePtr source, SpacePtr target, int shift) {
    return GradedLinearMap(std::move(source), std::move(target), shift);
}

MultiLinearMap::MultiLinearMap(SpacePtr source, SpacePtr target, int arity, int shift)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), shift_(shift) {
    if (arity_ < 1) throw MalformedInput("multilinear map arity must be >= 1");
}

void MultiLinearMap::add(const Tuple& key, const Vector& value, const Scalar& c) {
    if (value.is_zero() || sgn(c) == 0) return;
    auto [it, inserted] = table_.try_emplace(key);
    it->second.axpy(c, value);
    if (it->second.is_zero()) table_.erase(it);
}

int MultiLinearMap::output_degree(const Tuple& key) const {
    int d = shift_;
    for (auto i : key) d += source_->degree(i);
    return d;
}

void MultiLinearMap::set(const Tuple& key, Vector value) {
    if (static_cast<int>(key.size()) != arity_) throw MalformedInput("tuple arity mismatch");
    for (auto i : key)
        if (i < 0 || static_cast<std::size_t>(i) >= source_->dim()) throw MalformedInput("tuple index out of range");
    int want = output_degree(key);
    for (const auto& [j, c] : value)
        if (target_->degree(j) != want)
            throw MalformedInput("value at " + format_tuple(*source_, key) + " leaves degree " + std::to_string(want));
    if (value.is_zero()) table_.erase(key);
    else table_[key] = std::move(value);
}

Vector MultiLinearMap::at(const Tuple& key) const {
    auto it = table_.find(key);
    return it == table_.end() ? Vector{} : it->second;
}

Vector MultiLinearMap::evaluate(std::span<const Vector> args) const {
    if (static_cast<int>(args.size()) != arity_) throw MalformedInput("evaluate: wrong number of arguments");
    Vector out;
    for (const auto& arg : args)
        if (arg.is_zero()) return out;
    // Iterate over the support of the arguments (odometer over term lists).
    std::vector<std::vector<std::pair<BasisIndex, Scalar>>> terms(args.size());
    for (std::size_t j = 0; j < args.size(); ++j)
        for (const auto& [i, c] : args[j]) terms[j].emplace_back(i, c);
    std::vector<std::size_t> pos(args.size(), 0);
    Tuple key(args.size());
    while (true) {
        Scalar coeff = 1;
        for (std::size_t j = 0; j < args.size(); ++j) {
            key[j] = terms[j][pos[j]].first;
            coeff *= terms[j][pos[j]].second;
        }
        auto it = table_.find(key);
        if (it != table_.end()) out.axpy(coeff, it->second);
        std::size_t j = args.size();
        while (j > 0) {
            --j;
            if (++pos[j] < terms[j].size()) break;
            pos[j] = 0;
            if (j == 0) return out;
        }
    }
}

void MultiLinearMap::add_map(const MultiLinearMap& other, const Scalar& c) {
    if (other.arity_ != arity_) throw MalformedInput("add_map: arity mismatch");
    for (const auto& [k, v] : other.table_) add(k, v, c);
}

MultiLinearMap MultiLinearMap::scaled(const Scalar& c) const {
    MultiLinearMap out(source_, target_, arity_, shift_);
    out.add_map(*this, c);
    return out;
}

MultiLinearMap as_multilinear(const GradedLinearMap& f) {
    MultiLinearMap out(f.source(), f.target(), 1, f.shift());
    for (std::size_t i = 0; i < f.source()->dim(); ++i) {
        auto idx = static_cast<BasisIndex>(i);
        out.add({idx}, f.column(idx));
    }
    return out;
}

GradedLinearMap as_linear(const MultiLinearMap& f) {
    if (f.arity() != 1) throw MalformedInput("as_linear: arity must be 1");
    GradedLinearMap out(f.source(), f.target(), f.shift());
    for (const auto& [k, v] : f.table()) out.set_column(k[0], v);
    return out;
}

}  // namespace ainf
