#include "kf/ucomplex.hpp"

#include <algorithm>
#include <utility>

namespace kf {

namespace {

Int json_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw Error::bad_input(where + ": expected an integer");
    return Int(j.get<long long>());
}

AGrading grading_from_json(const nlohmann::json& j, const std::string& where) {
    if (j.is_array()) {
        if (j.size() != 2)
            throw Error::bad_input(where + ": grading pair must have two entries");
        return AGrading(json_int(j[0], where), json_int(j[1], where));
    }
    return AGrading(json_int(j, where));
}

nlohmann::json grading_to_json(const AGrading& g) {
    if (g.bigraded())
        return nlohmann::json::array(
            {static_cast<long long>(g.s1), static_cast<long long>(*g.s2)});
    return static_cast<long long>(g.s1);
}

// Grading of a homogeneous vector in complex coordinates: every nonzero
// component U^a·e_i contributes total A(e_i) - a and Maslov M(e_i) - 2a,
// and these must agree across the support.  The componentwise Alexander
// pair is reported only when it is unambiguous (all coefficients of
// valuation zero with one common pair); otherwise the total survives as a
// single grading.
struct VectorGrading {
    AGrading alexander;
    std::optional<Int> maslov;
};

VectorGrading vector_grading(const UComplex& c, const std::vector<UPoly>& v) {
    VectorGrading out;
    bool first = true;
    bool pair_ok = true;
    std::optional<AGrading> pair;
    Int total = 0;
    std::optional<Int> maslov;
    bool maslov_ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_monomial())
            throw Error::computation(
                "internal: homology basis coordinate is not a monomial");
        const Int a = v[i].valuation();
        const UGenerator& g = c.generators[i];
        const Int t = g.alexander.total() - a;
        if (first) {
            total = t;
        } else if (total != t) {
            throw Error::computation(
                "internal: inhomogeneous homology basis vector");
        }
        if (g.alexander.bigraded() && a == 0) {
            if (!pair) {
                pair = g.alexander;
            } else if (!(*pair == g.alexander)) {
                pair_ok = false;
            }
        } else if (g.alexander.bigraded()) {
            pair_ok = false;
        }
        if (g.maslov && maslov_ok) {
            const Int m = *g.maslov - 2 * a;
            if (first || !maslov) {
                maslov = m;
            } else if (*maslov != m) {
                throw Error::computation(
                    "internal: Maslov-inhomogeneous homology basis vector");
            }
        } else {
            maslov_ok = false;
        }
        first = false;
    }
    out.alexander = (pair_ok && pair) ? *pair : AGrading(total);
    out.maslov = maslov_ok ? maslov : std::nullopt;
    return out;
}

// Shared machinery behind homology() and class_of(): the two-step
// diagonalization of the boundary matrix, with the homology basis
// classified into unit (dead), torsion, and free summands.
struct HomologyEngine {
    const UComplex& c;
    std::size_t n;
    UPolyMatrix d;
    SmithResult sm1;
    std::size_t r;  // rank of the differential
    std::size_t m;  // dimension of the cycle space
    SmithResult sm2;

    struct Entry {
        std::size_t t;  // index into the second-step basis
        unsigned order; // 0 marks a free tower
        VectorGrading grading;
    };
    std::vector<Entry> towers;
    std::vector<Entry> torsion;

    explicit HomologyEngine(const UComplex& complex) : c(complex) {
        c.validate();
        n = c.size();
        d = c.boundary_matrix();
        sm1 = u_smith_reduce(d);
        r = sm1.rank;
        m = n - r;

        // Coordinates of the image generators diag_i·(p column i) in the
        // cycle basis q_inv columns r..n-1: the rows below r of q·p, scaled
        // by the diagonal.  Rows above r must vanish because the image lies
        // in the kernel.
        const UPolyMatrix qp = sm1.q * sm1.p;
        UPolyMatrix w(m, r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < r; ++k)
                if (!(qp.at(k, i) * sm1.diagonal[i]).is_zero())
                    throw Error::computation(
                        "internal: boundary image escapes the cycle space");
            for (std::size_t j = 0; j < m; ++j)
                w.at(j, i) = qp.at(r + j, i) * sm1.diagonal[i];
        }
        sm2 = u_smith_reduce(w);
        if (sm2.rank != r)
            throw Error::computation(
                "internal: boundary image lost rank in the cycle basis");

        for (std::size_t t = 0; t < m; ++t) {
            unsigned order = 0;
            if (t < sm2.rank) {
                const UPoly& lambda = sm2.diagonal[t];
                if (!lambda.is_monomial())
                    throw Error::computation(
                        "internal: non-monomial invariant factor");
                const int deg = lambda.degree();
                if (deg == 0) continue; // unit: trivial summand
                order = static_cast<unsigned>(deg);
            }
            // Basis vector in complex coordinates.
            std::vector<UPoly> vec(n);
            for (std::size_t j = 0; j < m; ++j) {
                const UPoly& coeff = sm2.p.at(j, t);
                if (coeff.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i)
                    vec[i] += coeff * sm1.q_inv.at(i, r + j);
            }
            Entry e{t, order, vector_grading(c, vec)};
            if (order == 0 && c.mode == CoeffMode::F2U)
                towers.push_back(std::move(e));
            else if (order == 0)
                torsion.push_back(std::move(e)); // F2: U acts as zero
            else if (c.mode == CoeffMode::F2U)
                torsion.push_back(std::move(e));
            else
                throw Error::computation(
                    "internal: positive-order torsion in an F2 complex");
        }
        if (c.mode == CoeffMode::F2)
            for (Entry& e : torsion) e.order = 1;

        const auto later = [](const Entry& a, const Entry& b) {
            const Int ta = a.grading.alexander.total();
            const Int tb = b.grading.alexander.total();
            if (ta != tb) return ta > tb;
            const bool am = a.grading.maslov.has_value();
            const bool bm = b.grading.maslov.has_value();
            if (am != bm) return am;
            if (am && *a.grading.maslov != *b.grading.maslov)
                return *a.grading.maslov > *b.grading.maslov;
            return false;
        };
        std::stable_sort(towers.begin(), towers.end(), later);
        std::stable_sort(torsion.begin(), torsion.end(), later);
    }

    HClass reduce(const std::vector<std::size_t>& cycle,
                  const std::string& what) const {
        std::vector<UPoly> z(n);
        for (std::size_t idx : cycle) z[idx] += UPoly::one();
        for (std::size_t i = 0; i < n; ++i) {
            UPoly bd;
            for (std::size_t j = 0; j < n; ++j) bd += d.at(i, j) * z[j];
            if (!bd.is_zero())
                throw Error::computation(what + " is not a cycle");
        }
        // Cycle coordinates: (q·z) below row r.
        std::vector<UPoly> y(m);
        for (std::size_t i = 0; i < n; ++i) {
            UPoly acc;
            for (std::size_t j = 0; j < n; ++j) acc += sm1.q.at(i, j) * z[j];
            if (i < r) {
                if (!acc.is_zero())
                    throw Error::computation(
                        "internal: cycle has a nonzero transverse coordinate");
            } else {
                y[i - r] = acc;
            }
        }
        // Homology coordinates: p2_inv applied to the cycle coordinates.
        std::vector<UPoly> yhat(m);
        for (std::size_t t = 0; t < m; ++t) {
            UPoly acc;
            for (std::size_t j = 0; j < m; ++j)
                acc += sm2.p_inv.at(t, j) * y[j];
            yhat[t] = acc;
        }
        HClass out;
        out.tower.reserve(towers.size());
        for (const Entry& e : towers) out.tower.push_back(yhat[e.t]);
        out.torsion.reserve(torsion.size());
        for (const Entry& e : torsion) {
            const UPoly modulus = UPoly::monomial(e.order);
            out.torsion.push_back(yhat[e.t].divmod(modulus).second);
        }
        return out;
    }
};

} // namespace

std::size_t UComplex::index_of(const std::string& name) const {
    std::size_t found = size();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].name != name) continue;
        if (found != size())
            throw Error::bad_input("ambiguous generator name '" + name + "'");
        found = i;
    }
    if (found == size())
        throw Error::bad_input("unknown generator name '" + name + "'");
    return found;
}

void UComplex::validate() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (generators[i].name == generators[j].name)
                throw Error::bad_input("duplicate generator name '" +
                                       generators[i].name + "'");
        if (generators[i].alexander.bigraded() !=
            generators[0].alexander.bigraded())
            throw Error::bad_input(
                "generators mix single and paired Alexander gradings");
    }
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const UArrow& a = arrows[k];
        const std::string where = "arrows[" + std::to_string(k) + "]";
        if (a.from >= n || a.to >= n)
            throw Error::bad_input(where + ": generator index out of range");
        if (a.from == a.to)
            throw Error::bad_input(where + ": arrow from a generator to itself");
        for (std::size_t k2 = k + 1; k2 < arrows.size(); ++k2)
            if (arrows[k2].from == a.from && arrows[k2].to == a.to)
                throw Error::bad_input(where + ": duplicate arrow " +
                                       generators[a.from].name + " -> " +
                                       generators[a.to].name);
        if (mode == CoeffMode::F2 && a.u_power != 0)
            throw Error::bad_input(where + ": U-power in an F2 complex");
        const AGrading& gf = generators[a.from].alexander;
        const AGrading& gt = generators[a.to].alexander;
        const Int u(a.u_power);
        if (gf.total() != gt.total() - u)
            throw Error::bad_input(where +
                                   ": Alexander gradings incompatible with " +
                                   "the U-power");
        if (gf.bigraded()) {
            if (gt.s1 - gf.s1 < 0 || *gt.s2 - *gf.s2 < 0)
                throw Error::bad_input(
                    where + ": componentwise Alexander grading increases");
        }
        const auto& mf = generators[a.from].maslov;
        const auto& mt = generators[a.to].maslov;
        if (mf && mt && *mf != *mt + 1 - 2 * u)
            throw Error::bad_input(where +
                                   ": Maslov gradings incompatible with the " +
                                   "U-power");
    }
    for (std::size_t k = 0; k < marked.size(); ++k) {
        const std::string where = "marked[" + std::to_string(k) + "]";
        for (std::size_t a = 0; a < marked[k].size(); ++a) {
            if (marked[k][a] >= n)
                throw Error::bad_input(where + ": generator index out of range");
            for (std::size_t b = a + 1; b < marked[k].size(); ++b)
                if (marked[k][a] == marked[k][b])
                    throw Error::bad_input(where + ": repeated generator");
        }
    }
    const UPolyMatrix dmat = boundary_matrix();
    const UPolyMatrix sq = dmat * dmat;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!sq.at(i, j).is_zero())
                throw Error::computation(
                    "differential does not square to zero (at " +
                    generators[j].name + " -> " + generators[i].name + ")");
}

UPolyMatrix UComplex::boundary_matrix() const {
    UPolyMatrix d(size(), size());
    for (const UArrow& a : arrows)
        d.at(a.to, a.from) += UPoly::monomial(a.u_power);
    return d;
}

UComplex UComplex::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error::bad_input("complex: expected an object");
    UComplex c;
    if (!j.contains("mode") || !j.at("mode").is_string())
        throw Error::bad_input("complex: missing \"mode\"");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "F2")
        c.mode = CoeffMode::F2;
    else if (mode == "F2U")
        c.mode = CoeffMode::F2U;
    else
        throw Error::bad_input("complex: mode must be \"F2\" or \"F2U\"");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw Error::bad_input("complex: missing \"generators\" array");
    for (std::size_t i = 0; i < j.at("generators").size(); ++i) {
        const nlohmann::json& g = j.at("generators")[i];
        const std::string where = "generators[" + std::to_string(i) + "]";
        if (!g.is_object() || !g.contains("name") || !g.at("name").is_string())
            throw Error::bad_input(where + ": expected an object with a name");
        if (!g.contains("A"))
            throw Error::bad_input(where + ": missing Alexander grading \"A\"");
        UGenerator gen;
        gen.name = g.at("name").get<std::string>();
        gen.alexander = grading_from_json(g.at("A"), where + ".A");
        if (g.contains("M")) gen.maslov = json_int(g.at("M"), where + ".M");
        c.generators.push_back(std::move(gen));
    }
    if (j.contains("arrows")) {
        if (!j.at("arrows").is_array())
            throw Error::bad_input("complex: \"arrows\" must be an array");
        for (std::size_t k = 0; k < j.at("arrows").size(); ++k) {
            const nlohmann::json& a = j.at("arrows")[k];
            const std::string where = "arrows[" + std::to_string(k) + "]";
            if (!a.is_object() || !a.contains("from") || !a.contains("to"))
                throw Error::bad_input(where + ": expected {from, to, u}");
            UArrow arrow;
            arrow.from = c.index_of(a.at("from").get<std::string>());
            arrow.to = c.index_of(a.at("to").get<std::string>());
            if (a.contains("u")) {
                const Int u = json_int(a.at("u"), where + ".u");
                if (u < 0) throw Error::bad_input(where + ".u: negative U-power");
                arrow.u_power = static_cast<unsigned>(u);
            }
            c.arrows.push_back(arrow);
        }
    }
    if (j.contains("marked")) {
        if (!j.at("marked").is_array())
            throw Error::bad_input("complex: \"marked\" must be an array");
        for (const nlohmann::json& mk : j.at("marked")) {
            std::vector<std::size_t> sum;
            if (mk.is_string()) {
                sum.push_back(c.index_of(mk.get<std::string>()));
            } else if (mk.is_array()) {
                for (const nlohmann::json& name : mk) {
                    if (!name.is_string())
                        throw Error::bad_input(
                            "marked: entries must be generator names");
                    sum.push_back(c.index_of(name.get<std::string>()));
                }
            } else {
                throw Error::bad_input(
                    "marked: expected a name or an array of names");
            }
            c.marked.push_back(std::move(sum));
        }
    }
    c.validate();
    return c;
}

nlohmann::json UComplex::to_json() const {
    nlohmann::json j;
    j["mode"] = mode == CoeffMode::F2 ? "F2" : "F2U";
    j["generators"] = nlohmann::json::array();
    for (const UGenerator& g : generators) {
        nlohmann::json gj;
        gj["name"] = g.name;
        gj["A"] = grading_to_json(g.alexander);
        if (g.maslov) gj["M"] = static_cast<long long>(*g.maslov);
        j["generators"].push_back(std::move(gj));
    }
    j["arrows"] = nlohmann::json::array();
    for (const UArrow& a : arrows) {
        nlohmann::json aj;
        aj["from"] = generators[a.from].name;
        aj["to"] = generators[a.to].name;
        aj["u"] = a.u_power;
        j["arrows"].push_back(std::move(aj));
    }
    j["marked"] = nlohmann::json::array();
    for (const auto& sum : marked) {
        nlohmann::json mj = nlohmann::json::array();
        for (std::size_t idx : sum) mj.push_back(generators[idx].name);
        j["marked"].push_back(std::move(mj));
    }
    return j;
}

bool HClass::is_zero() const {
    for (const UPoly& p : tower)
        if (!p.is_zero()) return false;
    for (const UPoly& p : torsion)
        if (!p.is_zero()) return false;
    return true;
}

std::size_t HomologyModule::total_dimension() const {
    return free_towers.size() + torsion.size();
}

HomologyModule homology(const UComplex& c) {
    const HomologyEngine engine(c);
    HomologyModule h;
    h.mode = c.mode;
    for (const auto& e : engine.towers)
        h.free_towers.push_back({e.grading.alexander, e.grading.maslov});
    for (const auto& e : engine.torsion)
        h.torsion.push_back({e.grading.alexander, e.grading.maslov, e.order});
    for (std::size_t k = 0; k < c.marked.size(); ++k)
        h.class_coordinates.push_back(
            engine.reduce(c.marked[k], "marked[" + std::to_string(k) + "]"));
    return h;
}

HClass class_of(const UComplex& c, const std::vector<std::size_t>& cycle) {
    for (std::size_t idx : cycle)
        if (idx >= c.size())
            throw Error::bad_input("cycle: generator index out of range");
    const HomologyEngine engine(c);
    return engine.reduce(cycle, "the given sum");
}

TorsionInfo is_u_torsion(const HomologyModule& h, const HClass& cls) {
    if (cls.tower.size() != h.free_towers.size() ||
        cls.torsion.size() != h.torsion.size())
        throw Error::bad_input(
            "class coordinates do not match the homology basis");
    for (const UPoly& p : cls.tower)
        if (!p.is_zero()) return {std::nullopt};
    unsigned d = 0;
    for (std::size_t j = 0; j < cls.torsion.size(); ++j) {
        const UPoly reduced =
            cls.torsion[j].divmod(UPoly::monomial(h.torsion[j].order)).second;
        if (reduced.is_zero()) continue;
        const unsigned needed =
            h.torsion[j].order - static_cast<unsigned>(reduced.valuation());
        d = std::max(d, needed);
    }
    return {d};
}

UComplex set_u_one(const UComplex& c) {
    if (c.mode != CoeffMode::F2U)
        throw Error::bad_input("U = 1 specialization needs an F2[U] complex");
    c.validate();
    UComplex hat;
    hat.mode = CoeffMode::F2;
    hat.generators.reserve(c.size());
    for (const UGenerator& g : c.generators)
        hat.generators.push_back({g.name, AGrading(0), std::nullopt});
    hat.arrows.reserve(c.arrows.size());
    for (const UArrow& a : c.arrows) hat.arrows.push_back({a.from, a.to, 0});
    hat.marked = c.marked;
    hat.validate();
    return hat;
}

UComplex tensor(const UComplex& a, const UComplex& b) {
    if (a.mode != b.mode)
        throw Error::bad_input("tensor factors have different coefficient modes");
    for (const UGenerator& g : a.generators)
        if (g.alexander.bigraded())
            throw Error::bad_input("tensor factors must be singly graded");
    for (const UGenerator& g : b.generators)
        if (g.alexander.bigraded())
            throw Error::bad_input("tensor factors must be singly graded");
    UComplex t;
    t.mode = a.mode;
    const std::size_t nb = b.size();
    const auto pair_index = [nb](std::size_t i, std::size_t j) {
        return i * nb + j;
    };
    for (const UGenerator& x : a.generators)
        for (const UGenerator& y : b.generators) {
            UGenerator g;
            g.name = x.name + "⊗" + y.name;
            g.alexander = AGrading(x.alexander.s1, y.alexander.s1);
            if (x.maslov && y.maslov) g.maslov = *x.maslov + *y.maslov;
            t.generators.push_back(std::move(g));
        }
    for (const UArrow& ar : a.arrows)
        for (std::size_t j = 0; j < nb; ++j)
            t.arrows.push_back(
                {pair_index(ar.from, j), pair_index(ar.to, j), ar.u_power});
    for (const UArrow& br : b.arrows)
        for (std::size_t i = 0; i < a.size(); ++i)
            t.arrows.push_back(
                {pair_index(i, br.from), pair_index(i, br.to), br.u_power});
    for (const auto& ma : a.marked)
        for (const auto& mb : b.marked) {
            std::vector<std::size_t> prod;
            prod.reserve(ma.size() * mb.size());
            for (std::size_t i : ma)
                for (std::size_t j : mb) prod.push_back(pair_index(i, j));
            t.marked.push_back(std::move(prod));
        }
    t.validate();
    return t;
}

UComplex quotient_by_subcomplex(const UComplex& c,
                                const std::vector<std::size_t>& sub) {
    std::vector<bool> in_sub(c.size(), false);
    for (std::size_t idx : sub) {
        if (idx >= c.size())
            throw Error::bad_input("subcomplex: generator index out of range");
        if (in_sub[idx])
            throw Error::bad_input("subcomplex: repeated generator");
        in_sub[idx] = true;
    }
    for (const UArrow& a : c.arrows)
        if (in_sub[a.from] && !in_sub[a.to])
            throw Error::bad_input(
                "subcomplex: span is not closed under the differential (" +
                c.generators[a.from].name + " -> " + c.generators[a.to].name +
                ")");
    UComplex q;
    q.mode = c.mode;
    std::vector<std::size_t> remap(c.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (in_sub[i]) continue;
        remap[i] = q.generators.size();
        q.generators.push_back(c.generators[i]);
    }
    for (const UArrow& a : c.arrows) {
        if (in_sub[a.from] || in_sub[a.to]) continue;
        q.arrows.push_back({remap[a.from], remap[a.to], a.u_power});
    }
    for (const auto& sum : c.marked) {
        std::vector<std::size_t> image;
        for (std::size_t idx : sum)
            if (!in_sub[idx]) image.push_back(remap[idx]);
        q.marked.push_back(std::move(image));
    }
    q.validate();
    return q;
}

} // namespace kf
