#include "ainf/structure.hpp"

#include "ainf/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

namespace ainf {

namespace {

std::atomic<std::size_t> g_budget{20'000'000};
std::atomic<int> g_jobs{1};

using InverseIndex = std::unordered_map<BasisIndex, std::vector<std::pair<const Tuple*, Scalar>>>;

InverseIndex inverse_index(const MultiLinearMap& h) {
    InverseIndex idx;
    for (const auto& [key, value] : h.table())
        for (const auto& [label, c] : value) idx[label].emplace_back(&key, c);
    return idx;
}

void check_budget(const MultiLinearMap& out) {
    if (out.size() > g_budget.load())
        throw ResourceLimit("intermediate table exceeds the tuple budget of " + std::to_string(g_budget.load()));
}

// Runs body(key, value, out) over the entries of `table`, split across worker
// threads; partial results are summed, which is order-independent over ℚ.
template <class Body>
MultiLinearMap for_entries(const MultiLinearMap::Table& table, const MultiLinearMap& proto, Body body) {
    std::vector<const MultiLinearMap::Table::value_type*> entries;
    entries.reserve(table.size());
    for (const auto& e : table) entries.push_back(&e);
    int jobs = std::max(1, std::min<int>(g_jobs.load(), static_cast<int>(entries.size() / 8)));
    if (jobs <= 1) {
        MultiLinearMap out = proto;
        for (const auto* e : entries) {
            body(e->first, e->second, out);
            check_budget(out);
        }
        return out;
    }
    std::vector<MultiLinearMap> partial(static_cast<std::size_t>(jobs), proto);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < entries.size(); i += static_cast<std::size_t>(jobs)) {
                    body(entries[i]->first, entries[i]->second, partial[static_cast<std::size_t>(w)]);
                    check_budget(partial[static_cast<std::size_t>(w)]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    MultiLinearMap out = proto;
    for (const auto& p : partial) out.add_map(p);
    check_budget(out);
    return out;
}

void require_endomorphic(const MultiLinearMap& h, const MultiLinearMap& g) {
    if (!(*h.source() == *g.source()) || !(*h.target() == *g.source()))
        throw MalformedInput("insert_at: inner map must act on the source space of the outer map");
}

}  // namespace

void set_tuple_budget(std::size_t budget) { g_budget = budget; }
std::size_t tuple_budget() { return g_budget.load(); }
void set_parallelism(int jobs) { g_jobs = std::max(1, jobs); }
int parallelism() { return g_jobs.load(); }

MultiLinearMap insert_at(const MultiLinearMap& g, int r, const MultiLinearMap& h) {
    const int n = g.arity();
    if (r < 0 || r >= n) throw MalformedInput("insert_at: position out of range");
    require_endomorphic(h, g);
    MultiLinearMap proto(g.source(), g.target(), n - 1 + h.arity(), g.shift() + h.shift());
    if (g.is_zero() || h.is_zero()) return proto;
    const GradedSpace& space = *g.source();
    const InverseIndex idx = inverse_index(h);
    const bool odd = h.shift() % 2 != 0;
    return for_entries(g.table(), proto, [&](const Tuple& key, const Vector& value, MultiLinearMap& out) {
        auto it = idx.find(key[static_cast<std::size_t>(r)]);
        if (it == idx.end()) return;
        long long prefix = 0;
        if (odd)
            for (int i = 0; i < r; ++i) prefix += space.degree(key[static_cast<std::size_t>(i)]);
        int sign = sign_of_parity(prefix);
        Tuple out_key;
        for (const auto& [inner, c] : it->second) {
            out_key.assign(key.begin(), key.begin() + r);
            out_key.insert(out_key.end(), inner->begin(), inner->end());
            out_key.insert(out_key.end(), key.begin() + r + 1, key.end());
            out.add(out_key, value, sign * c);
        }
    });
}

MultiLinearMap tensor_compose(const MultiLinearMap& g, const std::vector<const MultiLinearMap*>& fs) {
    if (static_cast<int>(fs.size()) != g.arity()) throw MalformedInput("tensor_compose: arity mismatch");
    int arity = 0;
    int shift = g.shift();
    for (const auto* f : fs) {
        if (!(*f->target() == *g.source()) || !(*f->source() == *fs.front()->source()))
            throw MalformedInput("tensor_compose: incompatible spaces");
        arity += f->arity();
        shift += f->shift();
    }
    MultiLinearMap proto(fs.front()->source(), g.target(), arity, shift);
    if (g.is_zero()) return proto;
    for (const auto* f : fs)
        if (f->is_zero()) return proto;

    const GradedSpace& inner_space = *fs.front()->source();
    std::unordered_map<const MultiLinearMap*, InverseIndex> indices;
    for (const auto* f : fs)
        if (!indices.count(f)) indices.emplace(f, inverse_index(*f));
    std::vector<const InverseIndex*> idx;
    for (const auto* f : fs) idx.push_back(&indices.at(f));

    const std::size_t r = fs.size();
    return for_entries(g.table(), proto, [&](const Tuple& key, const Vector& value, MultiLinearMap& out) {
        std::vector<const std::vector<std::pair<const Tuple*, Scalar>>*> lists(r);
        for (std::size_t j = 0; j < r; ++j) {
            auto it = idx[j]->find(key[j]);
            if (it == idx[j]->end()) return;
            lists[j] = &it->second;
        }
        std::vector<std::size_t> pos(r, 0);
        Tuple out_key;
        while (true) {
            Scalar coeff = 1;
            long long sign_exp = 0;
            long long consumed = 0;
            out_key.clear();
            for (std::size_t j = 0; j < r; ++j) {
                const auto& [inner, c] = (*lists[j])[pos[j]];
                coeff *= c;
                if (fs[j]->shift() % 2 != 0) sign_exp += consumed;
                for (auto i : *inner) consumed += inner_space.degree(i);
                out_key.insert(out_key.end(), inner->begin(), inner->end());
            }
            out.add(out_key, value, sign_of_parity(sign_exp) * coeff);
            std::size_t j = r;
            bool done = true;
            while (j > 0) {
                --j;
                if (++pos[j] < lists[j]->size()) {
                    done = false;
                    break;
                }
                pos[j] = 0;
            }
            if (done) return;
        }
    });
}

std::vector<std::vector<int>> compositions(int p, int r) {
    std::vector<std::vector<int>> out;
    if (r < 1 || p < r) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 1) {
            cur.push_back(remaining);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int first = 1; first <= remaining - (slots - 1); ++first) {
            cur.push_back(first);
            self(self, remaining - first, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, p, r);
    return out;
}

AInfStructure::AInfStructure(SpacePtr space, int pmax, std::optional<BasisIndex> unit)
    : space_(std::move(space)), pmax_(pmax), unit_(unit), cache_(std::make_shared<Cache>()) {
    if (pmax_ < 1) throw OutOfRange("pmax must be >= 1");
    sspace_ = make_space(space_->shifted(-1));
    for (int p = 1; p <= pmax_; ++p) ops_.emplace_back(space_, space_, p, 2 - p);
    cache_->b.resize(static_cast<std::size_t>(pmax_));
}

AInfStructure AInfStructure::from_dga(const Dga& a, int pmax) {
    AInfStructure s(a.space(), pmax, a.unit());
    s.set(1, as_multilinear(a.d()));
    if (pmax >= 2) s.set(2, a.product());
    return s;
}

const MultiLinearMap& AInfStructure::m(int p) const {
    if (p < 1 || p > pmax_) throw OutOfRange("m_" + std::to_string(p) + " is outside 1.." + std::to_string(pmax_));
    return ops_[static_cast<std::size_t>(p - 1)];
}

void AInfStructure::set(int p, MultiLinearMap op) {
    if (p < 1 || p > pmax_) throw OutOfRange("m_" + std::to_string(p) + " is outside 1.." + std::to_string(pmax_));
    if (op.arity() != p || op.shift() != 2 - p) throw MalformedInput("m_" + std::to_string(p) + " has wrong arity or degree");
    if (!(*op.source() == *space_) || !(*op.target() == *space_))
        throw MalformedInput("m_" + std::to_string(p) + " acts on a different space");
    ops_[static_cast<std::size_t>(p - 1)] = std::move(op);
    cache_ = std::make_shared<Cache>();
    cache_->b.resize(static_cast<std::size_t>(pmax_));
}

const MultiLinearMap& AInfStructure::b(int p) const {
    const MultiLinearMap& mp = m(p);
    std::lock_guard lock(cache_->mu);
    auto& slot = cache_->b[static_cast<std::size_t>(p - 1)];
    if (!slot) slot = std::make_unique<MultiLinearMap>(suspend_map(mp, sspace_, sspace_));
    return *slot;
}

AInfMorphism::AInfMorphism(StructurePtr source, StructurePtr target, int pmax)
    : source_(std::move(source)), target_(std::move(target)), pmax_(pmax) {
    if (pmax_ < 1) throw OutOfRange("pmax must be >= 1");
    for (int p = 1; p <= pmax_; ++p) ops_.emplace_back(source_->space(), target_->space(), p, 1 - p);
}

const MultiLinearMap& AInfMorphism::f(int p) const {
    if (p < 1 || p > pmax_) throw OutOfRange("f_" + std::to_string(p) + " is outside 1.." + std::to_string(pmax_));
    return ops_[static_cast<std::size_t>(p - 1)];
}

void AInfMorphism::set(int p, MultiLinearMap op) {
    if (p < 1 || p > pmax_) throw OutOfRange("f_" + std::to_string(p) + " is outside 1.." + std::to_string(pmax_));
    if (op.arity() != p || op.shift() != 1 - p) throw MalformedInput("f_" + std::to_string(p) + " has wrong arity or degree");
    if (!(*op.source() == *source_->space()) || !(*op.target() == *target_->space()))
        throw MalformedInput("f_" + std::to_string(p) + " has wrong spaces");
    ops_[static_cast<std::size_t>(p - 1)] = std::move(op);
}

MultiLinearMap AInfMorphism::sf(int p) const {
    return suspend_map(f(p), source_->suspended_space(), target_->suspended_space());
}

namespace {

long long suspension_exponent(const GradedSpace& unsuspended_degrees, const Tuple& key, int offset) {
    const long long n = static_cast<long long>(key.size());
    long long e = 0;
    for (long long i = 0; i < n; ++i) e += (n - 1 - i) * (unsuspended_degrees.degree(key[static_cast<std::size_t>(i)]) + offset);
    return e;
}

}  // namespace

MultiLinearMap suspend_map(const MultiLinearMap& m, const SpacePtr& ssource, const SpacePtr& starget) {
    if (ssource->dim() != m.source()->dim() || starget->dim() != m.target()->dim())
        throw MalformedInput("suspend: space dimension mismatch");
    MultiLinearMap out(ssource, starget, m.arity(), m.shift() + m.arity() - 1);
    for (const auto& [key, value] : m.table())
        out.add(key, value, sign_of_parity(suspension_exponent(*m.source(), key, 0)));
    return out;
}

MultiLinearMap desuspend_map(const MultiLinearMap& b, const SpacePtr& source, const SpacePtr& target) {
    if (source->dim() != b.source()->dim() || target->dim() != b.target()->dim())
        throw MalformedInput("desuspend: space dimension mismatch");
    MultiLinearMap out(source, target, b.arity(), b.shift() - b.arity() + 1);
    // |a| = |sa| + 1 on the suspended source.
    for (const auto& [key, value] : b.table())
        out.add(key, value, sign_of_parity(suspension_exponent(*b.source(), key, 1)));
    return out;
}

SuspendedStructure suspend(const AInfStructure& a) {
    SuspendedStructure s{a.suspended_space(), {}};
    for (int p = 1; p <= a.pmax(); ++p) s.b.push_back(a.b(p));
    return s;
}

AInfStructure desuspend(const SuspendedStructure& s, const SpacePtr& space, std::optional<BasisIndex> unit) {
    AInfStructure out(space, static_cast<int>(s.b.size()), unit);
    for (std::size_t i = 0; i < s.b.size(); ++i) {
        if (s.b[i].arity() != static_cast<int>(i + 1) || s.b[i].shift() != 1)
            throw MalformedInput("desuspend: b_" + std::to_string(i + 1) + " must have degree +1");
        out.set(static_cast<int>(i + 1), desuspend_map(s.b[i], space, space));
    }
    return out;
}

MultiLinearMap stasheff_residual(const AInfStructure& a, int p) {
    MultiLinearMap out(a.space(), a.space(), p, 3 - p);
    for (int s = 1; s <= p; ++s)
        for (int r = 0; r + s <= p; ++r) {
            int t = p - r - s;
            out.add_map(insert_at(a.m(r + t + 1), r, a.m(s)), sign_of_parity(r + static_cast<long long>(s) * t));
        }
    return out;
}

MultiLinearMap stasheff_residual_suspended(const AInfStructure& a, int p) {
    MultiLinearMap out(a.suspended_space(), a.suspended_space(), p, 2);
    for (int s = 1; s <= p; ++s)
        for (int r = 0; r + s <= p; ++r) out.add_map(insert_at(a.b(p - s + 1), r, a.b(s)));
    return out;
}

MultiLinearMap morphism_residual(const AInfMorphism& f, int p) {
    const AInfStructure& A = *f.source();
    const AInfStructure& B = *f.target();
    MultiLinearMap out(A.space(), B.space(), p, 2 - p);
    for (int s = 1; s <= p; ++s)
        for (int r = 0; r + s <= p; ++r) {
            int t = p - r - s;
            out.add_map(insert_at(f.f(r + t + 1), r, A.m(s)), sign_of_parity(r + static_cast<long long>(s) * t));
        }
    for (int r = 1; r <= p; ++r)
        for (const auto& parts : compositions(p, r)) {
            long long e = 0;
            std::vector<const MultiLinearMap*> fs;
            for (int j = 1; j <= r; ++j) {
                e += static_cast<long long>(r - j) * (parts[static_cast<std::size_t>(j - 1)] - 1);
                fs.push_back(&f.f(parts[static_cast<std::size_t>(j - 1)]));
            }
            out.add_map(tensor_compose(B.m(r), fs), -sign_of_parity(e));
        }
    return out;
}

MultiLinearMap morphism_residual_suspended(const AInfMorphism& f, int p) {
    const AInfStructure& A = *f.source();
    const AInfStructure& B = *f.target();
    std::vector<MultiLinearMap> sf;
    for (int i = 1; i <= p; ++i) sf.push_back(f.sf(i));
    MultiLinearMap out(A.suspended_space(), B.suspended_space(), p, 1);
    for (int s = 1; s <= p; ++s)
        for (int r = 0; r + s <= p; ++r) out.add_map(insert_at(sf[static_cast<std::size_t>(p - s)], r, A.b(s)));
    for (int r = 1; r <= p; ++r)
        for (const auto& parts : compositions(p, r)) {
            std::vector<const MultiLinearMap*> fs;
            for (int i : parts) fs.push_back(&sf[static_cast<std::size_t>(i - 1)]);
            out.add_map(tensor_compose(B.b(r), fs), -1);
        }
    return out;
}

}  // namespace ainf
