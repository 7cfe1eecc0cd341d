#include "kf/hfk_catalog.hpp"

namespace kf {

namespace {

void require_odd_torus_parameter(int m) {
    if (m % 2 == 0 || m == 1 || m == -1 || (m < 3 && m > -3))
        throw Error::bad_input(
            "torus-knot parameter must be odd with |m| >= 3, got " +
            std::to_string(m));
}

} // namespace

bool TableKey::operator<(const TableKey& other) const {
    if (alexander.s1 != other.alexander.s1)
        return alexander.s1 < other.alexander.s1;
    const Int a2 = alexander.s2.value_or(Int(0));
    const Int b2 = other.alexander.s2.value_or(Int(0));
    if (a2 != b2) return a2 < b2;
    return maslov < other.maslov;
}

unsigned HFKTable::dim(const AGrading& a, const Int& m) const {
    const auto it = entries.find(TableKey{a, m});
    return it == entries.end() ? 0 : it->second;
}

std::size_t HFKTable::dim_at_alexander(const AGrading& a) const {
    std::size_t total = 0;
    for (const auto& [key, d] : entries)
        if (key.alexander == a) total += d;
    return total;
}

std::size_t HFKTable::total_dimension() const {
    std::size_t total = 0;
    for (const auto& [key, d] : entries) total += d;
    return total;
}

std::map<Int, std::size_t> HFKTable::dims_by_alexander_total() const {
    std::map<Int, std::size_t> out;
    for (const auto& [key, d] : entries) out[key.alexander.total()] += d;
    return out;
}

bool HFKTable::bigraded() const {
    for (const auto& [key, d] : entries)
        if (key.alexander.bigraded()) return true;
    return false;
}

nlohmann::json HFKTable::to_json() const {
    nlohmann::json j;
    j["variant"] = variant == Variant::hat ? "hat" : "minus";
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, d] : entries) {
        nlohmann::json e;
        if (key.alexander.bigraded())
            e["A"] = nlohmann::json::array(
                {static_cast<long long>(key.alexander.s1),
                 static_cast<long long>(*key.alexander.s2)});
        else
            e["A"] = static_cast<long long>(key.alexander.s1);
        e["M"] = static_cast<long long>(key.maslov);
        e["dim"] = d;
        j["entries"].push_back(std::move(e));
    }
    if (tower) {
        j["tower"] = {{"A", static_cast<long long>(tower->alexander)},
                      {"M", static_cast<long long>(tower->maslov)}};
    }
    if (variant == Variant::minus) {
        j["torsion"] = nlohmann::json::array();
        for (const TorsionGen& t : torsion)
            j["torsion"].push_back({{"A", static_cast<long long>(t.alexander)},
                                    {"M", static_cast<long long>(t.maslov)},
                                    {"order", t.order}});
    }
    return j;
}

HFKTable hat_table_T2(int m) {
    require_odd_torus_parameter(m);
    HFKTable t;
    t.variant = HFKTable::Variant::hat;
    if (m < 0) {
        const int n = (-m - 1) / 2;
        for (int s = -n; s <= n; ++s)
            t.entries[TableKey{AGrading(Int(s)), Int(n + s)}] = 1;
    } else {
        const int n = (m + 1) / 2;
        for (int s = -(n - 1); s <= n - 1; ++s)
            t.entries[TableKey{AGrading(Int(s)), Int(s - n + 1)}] = 1;
    }
    return t;
}

HFKTable hat_table_unknot() {
    HFKTable t;
    t.variant = HFKTable::Variant::hat;
    t.entries[TableKey{AGrading(Int(0)), Int(0)}] = 1;
    return t;
}

HFKTable minus_table_T2(int m) {
    require_odd_torus_parameter(m);
    HFKTable t;
    t.variant = HFKTable::Variant::minus;
    if (m < 0) {
        const int n = (-m - 1) / 2;
        t.tower = HFKTable::Tower{Int(n), Int(2 * n)};
        for (int i = 0; i < n; ++i)
            t.torsion.push_back(
                {Int(n - 1 - 2 * i), Int(2 * n - 1 - 2 * i), 1});
    } else {
        const int n = (m + 1) / 2;
        t.tower = HFKTable::Tower{Int(-(n - 1)), Int(-2 * (n - 1))};
        for (int i = 0; i < n - 1; ++i)
            t.torsion.push_back({Int(n - 1 - 2 * i), Int(-2 * i), 1});
    }
    t.entries[TableKey{AGrading(t.tower->alexander), t.tower->maslov}] += 1;
    for (const HFKTable::TorsionGen& g : t.torsion)
        t.entries[TableKey{AGrading(g.alexander), g.maslov}] += 1;
    return t;
}

HFKTable kunneth_table(const HFKTable& t1, const HFKTable& t2) {
    if (t1.variant != HFKTable::Variant::hat ||
        t2.variant != HFKTable::Variant::hat)
        throw Error::bad_input("connected-sum tables need two hat tables");
    if (t1.bigraded() || t2.bigraded())
        throw Error::bad_input(
            "connected-sum tables need singly graded factors");
    HFKTable out;
    out.variant = HFKTable::Variant::hat;
    for (const auto& [k1, d1] : t1.entries)
        for (const auto& [k2, d2] : t2.entries)
            out.entries[TableKey{AGrading(k1.alexander.s1, k2.alexander.s1),
                                 k1.maslov + k2.maslov}] += d1 * d2;
    return out;
}

RefinedComparison refined_compare(const RefinedInvariant& a,
                                  const RefinedInvariant& b,
                                  const HFKTable* context) {
    if (!a.nonzero || !b.nonzero)
        throw Error::bad_input("refined comparison needs two nonzero classes");
    if (a.s1 != b.s1 || a.s2 != b.s2) return RefinedComparison::distinct;
    if (a.maslov && b.maslov && *a.maslov != *b.maslov)
        return RefinedComparison::distinct;
    if (context) {
        const AGrading slot(a.s1, a.s2);
        std::size_t dim = 0;
        if (a.maslov && b.maslov)
            dim = context->dim(slot, *a.maslov);
        else
            dim = context->dim_at_alexander(slot);
        if (dim == 1) return RefinedComparison::equal;
    }
    return RefinedComparison::inconclusive;
}

bool d3_grading_check(int /*k*/, int l, const Int& alexander,
                      const Int& maslov) {
    return 2 * alexander - maslov == 2 * l + 2;
}

} // namespace kf
