#include "kf/surgery.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kf {

namespace {

Int json_int(const nlohmann::json& j, const char* key, const char* where) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw Error::bad_input(std::string(where) + ": missing or non-integer \"" + key + "\"");
    }
    return Int(j.at(key).get<long long>());
}

// Solve M x = v for the framed matrix, mapping singularity to the
// standard error for these operations.
std::vector<Rat> solve_framed(const RatMatrix& m, const std::vector<Rat>& v) {
    try {
        return solve(m, v);
    } catch (const Error&) {
        throw Error::computation("singular framed linking matrix: surgered manifold is not a rational homology sphere");
    }
}

std::vector<Rat> rot_vector(const SurgeryPresentation& p) {
    std::vector<Rat> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p.components[i].rot0);
    return r;
}

std::vector<Rat> linking_vector(const SurgeryPresentation& p) {
    if (!p.knot) {
        throw Error::bad_input("presentation has no distinguished knot");
    }
    std::vector<Rat> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rat(p.knot->linkings[i]);
    return v;
}

// M^-1 Lambda, with the null-homology integrality check.
std::vector<Rat> solve_knot_class(const SurgeryPresentation& p) {
    const RatMatrix m = framed_linking_matrix(p);
    const std::vector<Rat> x = solve_framed(m, linking_vector(p));
    for (const Rat& c : x) {
        if (!is_integer(c)) {
            throw Error::computation("distinguished knot is not null-homologous in the surgered manifold");
        }
    }
    return x;
}

Rat inner(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

void SurgeryPresentation::validate() const {
    const std::size_t n = components.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (components[i].sign != 1 && components[i].sign != -1) {
            throw Error::bad_input("component " + std::to_string(i) + ": sign must be +1 or -1");
        }
    }
    if (linking.size() != n) {
        throw Error::bad_input("linking matrix has " + std::to_string(linking.size()) +
                               " rows, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (linking[i].size() != n) {
            throw Error::bad_input("linking matrix row " + std::to_string(i) + " has wrong length");
        }
        if (linking[i][i] != 0) {
            throw Error::bad_input("linking matrix diagonal entry " + std::to_string(i) +
                                   " must be zero (framings supply the diagonal)");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (linking[i][j] != linking[j][i]) {
                throw Error::bad_input("linking matrix is not symmetric at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    if (knot && knot->linkings.size() != n) {
        throw Error::bad_input("distinguished knot linking vector has wrong length");
    }
}

SurgeryPresentation SurgeryPresentation::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error::bad_input("surgery presentation: expected a JSON object");
    SurgeryPresentation p;
    if (!j.contains("components") || !j.at("components").is_array()) {
        throw Error::bad_input("surgery presentation: missing \"components\" array");
    }
    for (const auto& c : j.at("components")) {
        SurgeryComponent comp;
        comp.tb0 = json_int(c, "tb0", "component");
        comp.rot0 = json_int(c, "rot0", "component");
        const Int sign = json_int(c, "sign", "component");
        comp.sign = static_cast<int>(sign);
        p.components.push_back(comp);
    }
    if (!j.contains("linking") || !j.at("linking").is_array()) {
        throw Error::bad_input("surgery presentation: missing \"linking\" matrix");
    }
    for (const auto& row : j.at("linking")) {
        if (!row.is_array()) throw Error::bad_input("linking matrix row is not an array");
        std::vector<Int> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw Error::bad_input("linking matrix entry is not an integer");
            r.emplace_back(e.get<long long>());
        }
        p.linking.push_back(std::move(r));
    }
    if (j.contains("knot")) {
        const auto& k = j.at("knot");
        DistinguishedKnot knot;
        knot.tb0 = json_int(k, "tb0", "knot");
        knot.rot0 = json_int(k, "rot0", "knot");
        if (!k.contains("linkings") || !k.at("linkings").is_array()) {
            throw Error::bad_input("knot: missing \"linkings\" vector");
        }
        for (const auto& e : k.at("linkings")) {
            if (!e.is_number_integer()) throw Error::bad_input("knot linking entry is not an integer");
            knot.linkings.emplace_back(e.get<long long>());
        }
        p.knot = std::move(knot);
    }
    p.validate();
    return p;
}

nlohmann::json SurgeryPresentation::to_json() const {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& c : components) {
        j["components"].push_back({{"tb0", static_cast<long long>(c.tb0)},
                                   {"rot0", static_cast<long long>(c.rot0)},
                                   {"sign", c.sign}});
    }
    j["linking"] = nlohmann::json::array();
    for (const auto& row : linking) {
        nlohmann::json r = nlohmann::json::array();
        for (const Int& e : row) r.push_back(static_cast<long long>(e));
        j["linking"].push_back(std::move(r));
    }
    if (knot) {
        nlohmann::json k;
        k["tb0"] = static_cast<long long>(knot->tb0);
        k["rot0"] = static_cast<long long>(knot->rot0);
        k["linkings"] = nlohmann::json::array();
        for (const Int& e : knot->linkings) k["linkings"].push_back(static_cast<long long>(e));
        j["knot"] = std::move(k);
    }
    return j;
}

RatMatrix framed_linking_matrix(const SurgeryPresentation& p,
                                bool include_distinguished,
                                const std::optional<Rat>& a0) {
    p.validate();
    const std::size_t n = p.size();
    const std::size_t off = include_distinguished ? 1 : 0;
    if (include_distinguished && !p.knot) {
        throw Error::bad_input("presentation has no distinguished knot");
    }
    RatMatrix m(n + off, n + off);
    if (include_distinguished) {
        m.at(0, 0) = a0.value_or(Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            m.at(0, i + 1) = Rat(p.knot->linkings[i]);
            m.at(i + 1, 0) = Rat(p.knot->linkings[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i + off, j + off) =
                i == j ? Rat(p.components[i].framing()) : Rat(p.linking[i][j]);
        }
    }
    return m;
}

Rat tb_after_surgery(const SurgeryPresentation& p) {
    if (!p.knot) throw Error::bad_input("presentation has no distinguished knot");
    if (p.size() == 0) return Rat(p.knot->tb0);
    const std::vector<Rat> x = solve_knot_class(p);
    // tb0 + det M(0,a)/det M(a) == tb0 - <Lambda, M^-1 Lambda>
    return Rat(p.knot->tb0) - inner(linking_vector(p), x);
}

Rat rot_after_surgery(const SurgeryPresentation& p) {
    if (!p.knot) throw Error::bad_input("presentation has no distinguished knot");
    if (p.size() == 0) return Rat(p.knot->rot0);
    const std::vector<Rat> x = solve_knot_class(p);
    return Rat(p.knot->rot0) - inner(rot_vector(p), x);
}

Rat d3_invariant(const SurgeryPresentation& p) {
    p.validate();
    const std::size_t n = p.size();
    int q = 0;
    for (const auto& c : p.components) q += c.sign == 1 ? 1 : 0;
    if (n == 0) return Rat(q);
    const RatMatrix m = framed_linking_matrix(p);
    const std::vector<Rat> r = rot_vector(p);
    const Rat c2 = inner(r, solve_framed(m, r));
    const int sigma = signature(m);
    return (c2 - Rat(3 * sigma) - Rat(2) * Rat(static_cast<long long>(n))) / Rat(4) + Rat(q);
}

ClassicalInvariants classical_invariants(const SurgeryPresentation& p) {
    ClassicalInvariants inv;
    inv.tb = tb_after_surgery(p);
    inv.rot = rot_after_surgery(p);
    inv.sl = self_linking(inv.tb, inv.rot);
    inv.d3 = d3_invariant(p);
    return inv;
}

ClassicalInvariants connected_sum(const ClassicalInvariants& a,
                                  const ClassicalInvariants& b) {
    ClassicalInvariants s;
    s.tb = a.tb + b.tb + 1;
    s.rot = a.rot + b.rot;
    s.sl = self_linking(s.tb, s.rot);
    if (a.d3 && b.d3) s.d3 = *a.d3 + *b.d3;
    return s;
}

Rat self_linking(const Rat& tb, const Rat& rot) { return tb - rot; }

}  // namespace kf
