#pragma once

#include "ainf/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ainf {

/// Index of a basis element inside its GradedSpace (insertion order).
using BasisIndex = int;
/// Ordered tuple of basis indices; std::map ordering is the lexicographic
/// witness order used by every checker.
using Tuple = std::vector<BasisIndex>;

/// Finite graded vector space with a named basis. Basis order is insertion
/// order; labels are unique across all degrees.
class GradedSpace {
public:
    GradedSpace() = default;

    BasisIndex add(std::string label, int degree);

    std::size_t dim() const { return labels_.size(); }
    int degree(BasisIndex i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::string& label(BasisIndex i) const { return labels_[static_cast<std::size_t>(i)]; }

    std::optional<BasisIndex> find(std::string_view label) const;
    /// Throws MalformedInput for unknown labels.
    BasisIndex index_of(std::string_view label) const;

    /// Basis indices of one degree, in insertion order.
    const std::vector<BasisIndex>& in_degree(int d) const;
    /// Sorted distinct degrees carrying at least one basis element.
    std::vector<int> degrees() const;
    std::map<int, std::size_t> dims() const;

    /// Same labels with every degree moved by `by`; (SA)^i = A^{i+1} is shifted(-1).
    GradedSpace shifted(int by) const;

    bool operator==(const GradedSpace& other) const {
        return labels_ == other.labels_ && degrees_ == other.degrees_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::unordered_map<std::string, BasisIndex> index_;
    std::map<int, std::vector<BasisIndex>> by_degree_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

inline SpacePtr make_space(GradedSpace s) { return std::make_shared<const GradedSpace>(std::move(s)); }

/// Sparse vector over a GradedSpace: basis index -> nonzero coefficient.
class Vector {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    Vector() = default;
    static Vector basis(BasisIndex i, const Scalar& c = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(BasisIndex i) const;
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    void add_term(BasisIndex i, const Scalar& c);
    /// this += c * v
    void axpy(const Scalar& c, const Vector& v);

    Vector& operator+=(const Vector& v) { axpy(1, v); return *this; }
    Vector& operator-=(const Vector& v) { axpy(-1, v); return *this; }
    Vector& operator*=(const Scalar& c);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
    friend Vector operator-(Vector v) { return v *= -1; }
    friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

    /// Degree of a homogeneous vector; nullopt for zero or mixed vectors.
    std::optional<int> degree_in(const GradedSpace& space) const;
    /// Drops every term whose basis element is not in degree `d`.
    Vector component(const GradedSpace& space, int d) const;

private:
    Terms terms_;
};

/// Human-readable "3/2*e1 - 1/1*e2" rendering; "0" for the zero vector.
std::string format_vector(const GradedSpace& space, const Vector& v);

/// Linear map of fixed degree shift, stored column by column.
class GradedLinearMap {
public:
    GradedLinearMap(SpacePtr source, SpacePtr target, int shift);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int shift() const { return shift_; }

    /// Throws MalformedInput if the image is not in degree |i| + shift.
    void set_column(BasisIndex i, Vector image);
    const Vector& column(BasisIndex i) const { return columns_[static_cast<std::size_t>(i)]; }

    Vector apply(const Vector& v) const;
    /// (this ∘ inner)
    GradedLinearMap after(const GradedLinearMap& inner) const;
    bool is_zero() const;

    static GradedLinearMap identity(const SpacePtr& space);
    static GradedLinearMap zero(SpacePtr source, SpacePtr target, int shift);

    friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
        return a.shift_ == b.shift_ && a.columns_ == b.columns_;
    }

private:
    SpacePtr source_;
    SpacePtr target_;
    int shift_;
    std::vector<Vector> columns_;
};

/// Multilinear map A^{⊗p} -> B of fixed degree shift, stored sparsely over
/// basis tuples. Missing tuples evaluate to zero.
class MultiLinearMap {
public:
    using Table = std::map<Tuple, Vector>;

    MultiLinearMap() = default;
    MultiLinearMap(SpacePtr source, SpacePtr target, int arity, int shift);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int arity() const { return arity_; }
    int shift() const { return shift_; }
    const Table& table() const { return table_; }
    bool is_zero() const { return table_.empty(); }
    std::size_t size() const { return table_.size(); }

    /// Adds c * value at `key`, pruning entries that cancel to zero.
    void add(const Tuple& key, const Vector& value, const Scalar& c = 1);
    /// Replaces the entry; checks arity and degree bookkeeping.
    void set(const Tuple& key, Vector value);
    Vector at(const Tuple& key) const;

    /// Multilinear evaluation on arbitrary (not necessarily basis) arguments.
    Vector evaluate(std::span<const Vector> args) const;

    void add_map(const MultiLinearMap& other, const Scalar& c = 1);
    MultiLinearMap scaled(const Scalar& c) const;

    /// Output degree for a key: sum of input degrees + shift.
    int output_degree(const Tuple& key) const;

    friend bool operator==(const MultiLinearMap& a, const MultiLinearMap& b) {
        return a.arity_ == b.arity_ && a.shift_ == b.shift_ && a.table_ == b.table_;
    }

private:
    SpacePtr source_;
    SpacePtr target_;
    int arity_ = 0;
    int shift_ = 0;
    Table table_;
};

MultiLinearMap as_multilinear(const GradedLinearMap& f);
GradedLinearMap as_linear(const MultiLinearMap& f);

std::string format_tuple(const GradedSpace& space, const Tuple& t);

}  // namespace ainf
