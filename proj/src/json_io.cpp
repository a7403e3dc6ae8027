#include "lcc/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lcc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing required field");
    return *it;
}

long long int_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

int small_int(const Json& j, const std::string& path) {
    long long v = int_from_json(j, path);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(path, "integer out of range");
    return static_cast<int>(v);
}

bool bool_from_json(const Json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
    const Json& a = field(j, key, path);
    if (!a.is_array()) fail(path + "." + key, "expected an array");
    return a;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Json int_list(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

}  // namespace

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json to_json(const Partition& p) { return int_list(p.parts()); }

Json to_json(const SymExpr& e) {
    Json terms = Json::array();
    for (const auto& [p, c] : e.terms()) terms.push_back({{"partition", to_json(p)}, {"coefficient", to_json(c)}});
    return {{"basis", basis_name(e.basis())}, {"homogeneous", e.homogeneous()}, {"terms", terms}};
}

Json to_json(const FgAbelianGroup& g) {
    Json t = Json::array();
    for (auto d : g.torsion()) t.push_back(d);
    return {{"rank", g.rank()}, {"torsion", t}};
}

Json to_json(const GroupRingElement& x) {
    Json terms = Json::array();
    for (const auto& [e, c] : x.coeffs()) {
        Json el = Json::array();
        for (auto v : e) el.push_back(v);
        terms.push_back(Json::array({el, to_json(c)}));
    }
    return {{"group", to_json(x.group())}, {"terms", terms}};
}

Json to_json(const ChowVector& x) {
    Json c = Json::array();
    for (const auto& a : x.coords()) c.push_back(to_json(a));
    return {{"g", x.g()}, {"coords", c}};
}

Json to_json(const CleanCycleModel& c) {
    Json comps = Json::array();
    for (const auto& comp : c.components) {
        Json cm = Json::array();
        for (const auto& a : comp.cm.coords()) cm.push_back(to_json(a));
        Json o = {{"label", comp.label},       {"dim", comp.dim}, {"mult", to_json(comp.mult)},
                  {"cm", cm},                  {"gauss_finite", comp.gauss_finite}};
        if (comp.aggregate) o["aggregate"] = true;
        comps.push_back(o);
    }
    Json j = {{"g", c.g}, {"components", comps}};
    if (c.cm_valid_through >= 0 && c.cm_valid_through != c.g - 1) j["cm_valid_through"] = c.cm_valid_through;
    if (c.fiber) j["fiber"] = to_json(*c.fiber);
    return j;
}

Json to_json(const Character& x) {
    Json w = Json::array();
    for (const auto& [wt, m] : x.sorted()) w.push_back(Json::array({int_list(wt), m}));
    return {{"type", x.root_system()->name()}, {"dim", x.dimension()}, {"weights", w}};
}

Json to_json(const WmfEntry& e) {
    return {{"type", e.rs->name()},
            {"rank", e.rs->rank()},
            {"highest_weight", int_list(e.lambda)},
            {"label", weight_label(e.lambda)},
            {"dim", to_json(e.dim)},
            {"minuscule", e.minuscule},
            {"quasi_minuscule", e.quasi_minuscule},
            {"fs_type", fs_name(e.fs)},
            {"image", e.image},
            {"kernel", to_json(e.kernel)}};
}

Json to_json(const PpavInput& p) {
    return {{"g", p.g},
            {"k", p.k},
            {"symmetric", p.symmetric},
            {"double_points_sum_zero", p.double_points_sum_zero},
            {"pairwise_torsion_independent", p.pairwise_torsion_independent},
            {"stabilizer_trivial", p.stabilizer_trivial},
            {"gauss_finite", p.gauss_finite},
            {"non_jacobian", p.non_jacobian}};
}

Json to_json(const GroupDescriptor& d) {
    Json alts = Json::array();
    for (const auto& a : d.alternatives) alts.push_back(a);
    return {{"determined", d.determined}, {"family", d.family}, {"size", d.size},
            {"label", d.label},           {"reason", d.reason}, {"alternatives", alts}};
}

Json to_json(const Genus5Record& r) {
    Json parts = Json::array();
    for (const auto& pc : r.partitions)
        parts.push_back(
            {{"partition", to_json(pc.beta)}, {"e_coefficient", to_json(pc.m)}, {"cm1_coefficient", to_json(pc.cm1_factor)}});
    return {{"g", r.g},
            {"c0", to_json(r.c0)},
            {"fake_jacobian_dimension", to_json(r.fake_dimension)},
            {"partition_coefficients", parts},
            {"alt_coefficient", to_json(r.alt_coefficient)},
            {"e", to_json(r.e)},
            {"cc_cm1", to_json(r.cc_cm1)},
            {"left_side", to_json(r.left_side)},
            {"c1", to_json(r.c1)},
            {"c1_mu1", to_json(r.c1[1])},
            {"integral", r.integral},
            {"verdict", r.verdict}};
}

Json to_json(const FakeJacobianSolution& s) {
    Json sols = Json::array();
    for (const auto& c : s.c0_solutions) sols.push_back(to_json(c));
    Json j = {{"g", s.g},
              {"hyperelliptic", s.hyperelliptic},
              {"target_degree", to_json(s.target_degree)},
              {"feasible", s.feasible},
              {"c0_solutions", sols}};
    if (s.feasible) {
        j["c0"] = to_json(s.c0);
        j["e"] = to_json(s.e);
        j["c1_coefficient"] = to_json(s.c1_coefficient);
        j["target_cm1"] = s.target_cm1 ? to_json(*s.target_cm1) : Json(nullptr);
        j["c1"] = s.c1 ? to_json(*s.c1) : Json(nullptr);
        j["c1_integral"] = s.c1_integral;
        j["c1_effective"] = s.c1_effective;
        j["higher_layers"] = "unconstrained";
    }
    j["reason"] = s.reason;
    return j;
}

Json to_json(const SummandBound& b) {
    return {{"vacuous", b.vacuous},
            {"delta", b.vacuous ? Json(nullptr) : to_json(b.delta)},
            {"d_z", b.d_z},
            {"no_decomposition", b.no_decomposition}};
}

Json to_json(const SimplicityRecord& r) {
    return {{"criterion1", r.criterion1},
            {"criterion2", r.criterion2},
            {"criterion3", {{"applicable", r.criterion3_applicable}, {"holds", r.criterion3}}},
            {"criterion4", {{"available", r.criterion4_available}, {"holds", r.criterion4}}},
            {"bound", r.bound},
            {"simple_modulo_center", r.proved ? "proved" : (r.verified_up_to_bound ? "verified up to bound" : "open")}};
}

Json to_json(const FourfoldTable& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        rows.push_back({{"stratum", r.stratum},
                        {"deg_gauss", r.deg_gauss},
                        {"dim_omega", r.dim_omega},
                        {"omega", r.omega},
                        {"group", r.group},
                        {"note", r.note},
                        {"degree_cc", t.cc_degree[i]}});
    }
    Json tn = Json::array();
    for (const auto& [k, deg, dim, grp] : t.theta_null)
        tn.push_back({{"k", k}, {"deg_gauss", to_json(deg)}, {"dim_omega", to_json(dim)}, {"group", grp}});
    return {{"rows", rows}, {"theta_null", tn}};
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (!j.is_string()) fail(path, "expected a rational string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

Integer integer_from_json(const Json& j, const std::string& path) {
    Rational q = rational_from_json(j, path);
    if (!is_integer(q)) fail(path, "expected an integer");
    return q.get_num();
}

FgAbelianGroup group_from_json(const Json& j, const std::string& path) {
    int rank = small_int(field(j, "rank", path), path + ".rank");
    std::vector<std::int64_t> tors;
    if (j.contains("torsion")) {
        const Json& t = array_field(j, "torsion", path);
        for (std::size_t i = 0; i < t.size(); ++i) tors.push_back(int_from_json(t[i], at(path + ".torsion", i)));
    }
    try {
        return FgAbelianGroup(rank, tors);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

GroupRingElement group_ring_from_json(const Json& j, const std::string& path) {
    FgAbelianGroup g = group_from_json(field(j, "group", path), path + ".group");
    GroupRingElement x(g);
    const Json& terms = array_field(j, "terms", path);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string p = at(path + ".terms", i);
        const Json& t = terms[i];
        if (!t.is_array() || t.size() != 2 || !t[0].is_array()) fail(p, "expected [element, coefficient]");
        if (t[0].size() != g.arity()) fail(p + "[0]", "element needs " + std::to_string(g.arity()) + " coordinates");
        GroupElement e;
        for (std::size_t k = 0; k < t[0].size(); ++k) e.push_back(int_from_json(t[0][k], at(p + "[0]", k)));
        x.add_term(e, integer_from_json(t[1], p + "[1]"));
    }
    return x;
}

ChowVector chow_from_json(const Json& j, int g, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rationals");
    if (static_cast<int>(j.size()) != g) fail(path, "expected " + std::to_string(g) + " coordinates");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(path, i)));
    return ChowVector(g, c);
}

CleanCycleModel cycle_from_json(const Json& j) {
    CleanCycleModel c;
    c.g = small_int(field(j, "g", "$"), "$.g");
    if (c.g < 1) fail("$.g", "must be >= 1");
    const Json& comps = array_field(j, "components", "$");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string p = at("$.components", i);
        CycleComponent comp;
        const Json& cj = comps[i];
        const Json& label = field(cj, "label", p);
        if (!label.is_string()) fail(p + ".label", "expected a string");
        comp.label = label.get<std::string>();
        comp.dim = small_int(field(cj, "dim", p), p + ".dim");
        comp.mult = integer_from_json(field(cj, "mult", p), p + ".mult");
        comp.cm = chow_from_json(field(cj, "cm", p), c.g, p + ".cm");
        comp.gauss_finite = bool_from_json(field(cj, "gauss_finite", p), p + ".gauss_finite");
        if (cj.contains("aggregate")) comp.aggregate = bool_from_json(cj["aggregate"], p + ".aggregate");
        c.components.push_back(std::move(comp));
    }
    if (j.contains("cm_valid_through")) c.cm_valid_through = small_int(j["cm_valid_through"], "$.cm_valid_through");
    if (j.contains("fiber") && !j["fiber"].is_null()) c.fiber = group_ring_from_json(j["fiber"], "$.fiber");
    validate(c);
    return c;
}

Character character_from_json(const Json& j) {
    const Json& t = field(j, "type", "$");
    if (!t.is_string()) fail("$.type", "expected a Dynkin type string");
    RootSystemPtr rs;
    try {
        rs = RootSystem::parse(t.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail("$.type", e.what());
    }
    Character x(rs);
    const Json& w = array_field(j, "weights", "$");
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string p = at("$.weights", i);
        if (!w[i].is_array() || w[i].size() != 2 || !w[i][0].is_array()) fail(p, "expected [weight, multiplicity]");
        if (static_cast<int>(w[i][0].size()) != rs->rank()) fail(p + "[0]", "weight must have rank coordinates");
        Weight wt;
        for (std::size_t k = 0; k < w[i][0].size(); ++k) wt.push_back(small_int(w[i][0][k], at(p + "[0]", k)));
        long long m = int_from_json(w[i][1], p + "[1]");
        if (m <= 0) fail(p + "[1]", "multiplicities must be positive");
        if (x.multiplicity(wt) != 0) fail(p, "duplicate weight");
        x.add(wt, m);
    }
    // Closed under simple reflections means closed under W.
    for (const auto& [wt, m] : x.weights())
        for (int i = 0; i < rs->rank(); ++i)
            if (x.multiplicity(rs->reflect(i, wt)) != m)
                fail("$.weights", "not Weyl-invariant at weight [" + weight_coords(wt) + "]");
    return x;
}

TensorConstruction construction_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (j.contains("var")) return TensorConstruction::variable(small_int(j["var"], path + ".var"));
    auto kids = [&](const char* key) {
        const Json& a = array_field(j, key, path);
        std::vector<TensorConstruction> out;
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(construction_from_json(a[i], at(path + "." + key, i)));
        return out;
    };
    if (j.contains("sum")) return TensorConstruction::direct_sum(kids("sum"));
    if (j.contains("tensor")) return TensorConstruction::tensor(kids("tensor"));
    if (j.contains("schur")) {
        const Json& a = array_field(j, "schur", path);
        std::vector<int> parts;
        for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(small_int(a[i], at(path + ".schur", i)));
        Partition alpha;
        try {
            alpha = Partition(parts);
        } catch (const std::invalid_argument& e) {
            fail(path + ".schur", e.what());
        }
        return TensorConstruction::schur(alpha, construction_from_json(field(j, "arg", path), path + ".arg"));
    }
    fail(path, "expected one of var, sum, tensor, schur");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": malformed JSON: " + e.what());
    }
}

CleanCycleModel load_cycle(const std::string& path) { return cycle_from_json(read_json_file(path)); }

Character load_character(const std::string& path) { return character_from_json(read_json_file(path)); }

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << j.dump(2) << "\n";
}

}  // namespace lcc
