#include "ainf_cli/io.hpp"

#include "ainf/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ainf::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw MalformedInput(what); }

const json& field(const json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

Scalar scalar_of(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    bad("scalars must be strings \"p/q\" or integers");
}

Vector vector_of(const GradedSpace& s, const json& j) {
    if (!j.is_object()) bad("vectors must be objects label -> scalar");
    Vector v;
    for (const auto& [label, c] : j.items()) v.add_term(s.index_of(label), scalar_of(c));
    return v;
}

Tuple tuple_of(const GradedSpace& s, const json& j) {
    if (!j.is_array()) bad("args must be an array of labels");
    Tuple t;
    for (const auto& l : j) t.push_back(s.index_of(l.get<std::string>()));
    return t;
}

SpacePtr space_of(const json& basis) {
    if (!basis.is_array()) bad("'basis' must be an array");
    GradedSpace s;
    for (const auto& e : basis) {
        auto label = field(e, "label").get<std::string>();
        if (s.find(label)) bad("duplicate label '" + label + "'");
        s.add(label, field(e, "degree").get<int>());
    }
    return make_space(std::move(s));
}

std::optional<BasisIndex> unit_of(const GradedSpace& s, const json& j) {
    if (!j.contains("unit")) return std::nullopt;
    return s.index_of(j.at("unit").get<std::string>());
}

// Table entries {"args": [...], "value": {...}}.
void fill(MultiLinearMap& m, const json& entries) {
    if (!entries.is_array()) bad("operation tables must be arrays");
    for (const auto& e : entries) {
        Tuple t = tuple_of(*m.source(), field(e, "args"));
        if (static_cast<int>(t.size()) != m.arity()) bad("entry of wrong arity");
        Vector v = vector_of(*m.target(), field(e, "value"));
        for (const auto& [i, c] : v)
            if (m.target()->degree(i) != m.output_degree(t)) bad("entry " + format_tuple(*m.source(), t) + " has the wrong degree");
        m.set(t, std::move(v));
    }
}

void unit_products(MultiLinearMap& m2, std::optional<BasisIndex> unit) {
    if (!unit) return;
    for (std::size_t i = 0; i < m2.source()->dim(); ++i) {
        auto x = static_cast<BasisIndex>(i);
        if (!m2.table().count({*unit, x})) m2.set({*unit, x}, Vector::basis(x));
        if (!m2.table().count({x, *unit})) m2.set({x, *unit}, Vector::basis(x));
    }
}

Dga free_dga_of(const json& j) {
    std::vector<Generator> gens;
    for (const auto& g : field(j, "generators"))
        gens.push_back({field(g, "label").get<std::string>(), field(g, "degree").get<int>()});
    std::vector<std::pair<std::string, Polynomial>> d;
    if (j.contains("differential"))
        for (const auto& [label, terms] : j.at("differential").items()) {
            Polynomial p;
            for (const auto& t : terms)
                p.emplace_back(scalar_of(field(t, "coeff")), field(t, "factors").get<std::vector<std::string>>());
            d.emplace_back(label, std::move(p));
        }
    std::optional<int> top;
    if (j.contains("top_degree")) top = j.at("top_degree").get<int>();
    return make_free_graded_commutative_dga(gens, d, top);
}

Dga explicit_dga_of(const json& j) {
    SpacePtr s = space_of(field(j, "basis"));
    auto unit = unit_of(*s, j);
    GradedLinearMap d(s, s, 1);
    if (j.contains("d"))
        for (const auto& [label, value] : j.at("d").items()) d.set_column(s->index_of(label), vector_of(*s, value));
    MultiLinearMap product(s, s, 2, 0);
    if (j.contains("product")) fill(product, j.at("product"));
    unit_products(product, unit);
    return Dga(s, std::move(d), std::move(product), unit);
}

Dga dga_of(const json& j) { return j.contains("generators") ? free_dga_of(j) : explicit_dga_of(j); }

}  // namespace

AlgebraFile parse_algebra(const json& j, int pmax) {
    if (!j.is_object()) bad("algebra file must be a JSON object");
    if (field(j, "schema") != kAlgebraSchema) bad("unsupported schema " + j.at("schema").dump());
    if (j.contains("field") && j.at("field") != "rational") bad("only the rational field is supported");

    AlgebraFile out;
    out.kind = field(j, "kind").get<std::string>();
    if (out.kind == "dga" || out.kind == "symplectic") {
        out.dga = dga_of(j);
    } else if (out.kind == "ainf") {
        SpacePtr s = space_of(field(j, "basis"));
        const json& ops = field(j, "operations");
        int top = pmax;
        for (const auto& [p, entries] : ops.items()) top = std::max(top, std::stoi(p));
        auto a = std::make_shared<AInfStructure>(s, top, unit_of(*s, j));
        for (const auto& [p, entries] : ops.items()) {
            int arity = std::stoi(p);
            if (arity < 1) bad("operation arity must be positive");
            MultiLinearMap m(s, s, arity, 2 - arity);
            fill(m, entries);
            if (arity == 2) unit_products(m, a->unit());
            a->set(arity, std::move(m));
        }
        if (!ops.contains("2")) {
            MultiLinearMap m(s, s, 2, 0);
            unit_products(m, a->unit());
            a->set(2, std::move(m));
        }
        out.structure = std::move(a);
    } else {
        bad("unknown kind '" + out.kind + "'");
    }

    if (j.contains("omega")) {
        if (!out.dga) bad("omega needs a dga");
        const json& w = j.at("omega");
        out.omega = w.is_string() ? parse_element(*out.dga, w.get<std::string>()) : vector_of(*out.dga->space(), w);
    }
    if (out.kind == "symplectic" && !out.omega) bad("symplectic file without omega");
    if (j.contains("level")) out.level = j.at("level").get<int>();
    if (j.contains("pd")) {
        PdBlock pd;
        const json& b = j.at("pd");
        if (b.contains("connectivity")) pd.connectivity = b.at("connectivity").get<int>();
        if (b.contains("top_degree")) pd.top_degree = b.at("top_degree").get<int>();
        out.pd = pd;
    }
    return out;
}

AlgebraFile load_algebra(const std::string& path, int pmax, std::string* bytes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("JSON syntax error: ") + e.what());
    }
    if (bytes) *bytes = text;
    try {
        return parse_algebra(j, pmax);
    } catch (const json::exception& e) {
        bad(std::string("bad field: ") + e.what());
    }
}

Vector parse_element(const Dga& a, const std::string& text) {
    const GradedSpace& s = *a.space();
    Vector out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    while (true) {
        skip();
        std::size_t end = text.find_first_of("+-", i);
        // A '-' right after '/' or at the start of a coefficient is part of it.
        std::string term = text.substr(i, end == std::string::npos ? std::string::npos : end - i);
        while (!term.empty() && term.back() == ' ') term.pop_back();
        if (term.empty()) bad("empty term in '" + text + "'");

        std::vector<std::string> factors;
        std::stringstream fs(term);
        for (std::string f; std::getline(fs, f, '*');) factors.push_back(f);
        Scalar c = sign;
        std::size_t first = 0;
        if (!factors.empty() && !factors[0].empty() && (std::isdigit(static_cast<unsigned char>(factors[0][0])))) {
            c *= parse_scalar(factors[0]);
            first = 1;
        }
        std::string label;
        for (std::size_t k = first; k < factors.size(); ++k) label += (k > first ? "*" : "") + factors[k];
        Vector v;
        if (label.empty()) {
            if (!a.unit()) bad("constant term without a unit");
            v = Vector::basis(*a.unit());
        } else if (auto idx = s.find(label)) {
            v = Vector::basis(*idx);
        } else {
            if (factors.size() - first < 2) bad("unknown label '" + label + "'");
            v = a.element(factors[first]);
            for (std::size_t k = first + 1; k < factors.size(); ++k) v = a.multiply(v, a.element(factors[k]));
        }
        out.axpy(c, v);
        if (end == std::string::npos) break;
        sign = text[end] == '-' ? -1 : 1;
        i = end + 1;
    }
    return out;
}

json space_json(const GradedSpace& s) {
    json out = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
        out.push_back({{"label", s.label(static_cast<BasisIndex>(i))}, {"degree", s.degree(static_cast<BasisIndex>(i))}});
    return out;
}

json vector_json(const GradedSpace& s, const Vector& v) {
    json out = json::object();
    for (const auto& [i, c] : v) out[s.label(i)] = format_scalar(c);
    return out;
}

json map_json(const MultiLinearMap& m) {
    json out = json::array();
    for (const auto& [key, value] : m.table()) {
        json args = json::array();
        for (auto i : key) args.push_back(m.source()->label(i));
        out.push_back({{"args", args}, {"value", vector_json(*m.target(), value)}});
    }
    return out;
}

json linear_json(const GradedLinearMap& m) {
    json out = json::object();
    for (std::size_t i = 0; i < m.source()->dim(); ++i) {
        Vector v = m.apply(Vector::basis(static_cast<BasisIndex>(i)));
        if (!v.is_zero()) out[m.source()->label(static_cast<BasisIndex>(i))] = vector_json(*m.target(), v);
    }
    return out;
}

json structure_json(const AInfStructure& a) {
    json ops = json::object();
    for (int p = 1; p <= a.pmax(); ++p)
        if (!a.m(p).is_zero()) ops[std::to_string(p)] = map_json(a.m(p));
    json out = {{"schema", kAlgebraSchema}, {"field", "rational"}, {"kind", "ainf"},
                {"basis", space_json(*a.space())}, {"operations", ops}};
    if (a.unit()) out["unit"] = a.space()->label(*a.unit());
    return out;
}

json dga_json(const Dga& a) {
    json out = {{"schema", kAlgebraSchema}, {"field", "rational"}, {"kind", "dga"}, {"basis", space_json(*a.space())},
                {"d", linear_json(a.d())}, {"product", map_json(a.product())}};
    if (a.unit()) out["unit"] = a.space()->label(*a.unit());
    return out;
}

json morphism_json(const AInfMorphism& f) {
    json ops = json::object();
    for (int p = 1; p <= f.pmax(); ++p)
        if (!f.f(p).is_zero()) ops[std::to_string(p)] = map_json(f.f(p));
    return {{"source_basis", space_json(*f.source()->space())}, {"target_basis", space_json(*f.target()->space())},
            {"components", ops}};
}

json report_json(const Report& r) {
    json items = json::array();
    for (const auto& i : r.items) {
        json e = {{"name", i.name}, {"passed", i.passed}};
        if (!i.passed) e["witness"] = i.witness;
        items.push_back(e);
    }
    return {{"passed", r.passed()}, {"items", items}};
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace ainf::cli
