#include "lcc/cli.hpp"

#include "lcc/json_io.hpp"
#include "lcc/tables.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace lcc {

namespace {

enum class Format { json, csv, text };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Report {
    Json json;
    // Rows for CSV; empty header means CSV is not offered.
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string text;  // overrides the generic text rendering when set
    int status = 0;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const Report& r, Format f, std::ostream& out) {
    switch (f) {
        case Format::json:
            out << r.json.dump(2) << "\n";
            break;
        case Format::csv: {
            if (r.header.empty()) throw UsageError("--format csv is not offered for this subcommand");
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
                out << "\n";
            };
            line(r.header);
            for (const auto& row : r.rows) line(row);
            break;
        }
        case Format::text:
            if (!r.text.empty()) {
                out << r.text;
            } else if (r.json.is_object()) {
                for (const auto& [k, v] : r.json.items()) out << k << ": " << plain(v) << "\n";
            } else {
                out << plain(r.json) << "\n";
            }
            break;
    }
}

struct PpavFlags {
    PpavInput p;
    void attach(CLI::App* sub, int default_g) {
        p.g = default_g;
        sub->add_option("--g", p.g, "dimension of the ppav")->capture_default_str();
        sub->add_option("--k", p.k, "number of ordinary double points")->capture_default_str();
        sub->add_flag("--symmetric,!--no-symmetric", p.symmetric, "theta divisor is symmetric");
        sub->add_flag("--sum-zero,!--sum-nonzero", p.double_points_sum_zero, "double points sum to zero");
        sub->add_flag("--torsion-independent,!--torsion-dependent", p.pairwise_torsion_independent,
                      "no two double points differ by a torsion point");
        sub->add_flag("--stabilizer-trivial,!--stabilizer-nontrivial", p.stabilizer_trivial, "Stab(Theta) = 0");
        sub->add_flag("--gauss-finite", p.gauss_finite, "projectivized Gauss map is finite");
        sub->add_flag("--non-jacobian", p.non_jacobian, "the ppav is not a Jacobian");
    }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    if (s.empty()) return v;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("bad integer list '" + s + "'");
        }
        if (used != tok.size()) throw UsageError("bad integer list '" + s + "'");
        v.push_back(x);
    }
    return v;
}

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (int x : w) a.push_back(x);
    return a;
}

Report character_report(const Character& x, const std::vector<std::pair<Weight, std::int64_t>>* parts) {
    Report r;
    r.json = to_json(x);
    r.header = {"weight", "multiplicity"};
    for (const auto& [w, m] : x.sorted()) r.rows.push_back({weight_coords(w), std::to_string(m)});
    if (parts) {
        Json d = Json::array();
        for (const auto& [w, m] : *parts)
            d.push_back({{"highest_weight", weight_json(w)},
                         {"label", weight_label(w)},
                         {"multiplicity", m},
                         {"dim", to_json(weyl_dim(*x.root_system(), w))}});
        r.json["decomposition"] = d;
    }
    std::ostringstream t;
    t << x.root_system()->name() << " character of dimension " << x.dimension() << "\n";
    if (parts)
        for (const auto& [w, m] : *parts)
            t << "  " << m << " x " << weight_label(w) << " (dim " << weyl_dim(*x.root_system(), w) << ")\n";
    r.text = t.str();
    return r;
}

Report classify_report(const std::vector<WmfEntry>& entries, int max_rank, long max_dim) {
    Report r;
    Json arr = Json::array();
    r.header = {"type", "highest_weight", "label", "dim", "minuscule", "quasi_minuscule", "symplectic", "orthogonal",
                "image", "kernel"};
    for (const auto& e : entries) {
        arr.push_back(to_json(e));
        r.rows.push_back({e.rs->name(), weight_coords(e.lambda), weight_label(e.lambda), e.dim.get_str(),
                          e.minuscule ? "yes" : "no", e.quasi_minuscule ? "yes" : "no",
                          e.fs == FsType::symplectic ? "yes" : "no", e.fs == FsType::orthogonal ? "yes" : "no",
                          e.image, e.kernel.get_str()});
    }
    r.json = {{"max_rank", max_rank}, {"max_dim", max_dim}, {"entries", arr}};
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lambda-ring, Chern-Mather and Weyl-orbit calculus for theta divisors", "lcc"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

    std::function<Report()> action;
    std::vector<std::string> inputs;
    int max_rank = 8;
    long max_dim = 600;
    int m_bound = 4;
    int d_trunc = 1;

    auto* symfun = app.add_subcommand("symfun", "expand s_alpha or e_n in power sums");
    std::string basis, sym_arg;
    symfun->add_option("basis", basis)->required()->check(CLI::IsMember({"schur", "elementary"}));
    symfun->add_option("arg", sym_arg, "partition like 2,1,1 or n")->required();
    symfun->callback([&] {
        action = [&] {
            SymExpr e = basis == "schur" ? schur_to_powersum(Partition::parse(sym_arg))
                                         : elementary_to_powersum(std::stoi(sym_arg));
            Report r;
            r.json = {{"input", {{"basis", basis}, {"arg", sym_arg}}}};
            r.json.update(to_json(e));
            r.header = {"partition", "coefficient"};
            std::ostringstream t;
            for (const auto& [p, c] : e.terms()) {
                r.rows.push_back({p.to_string(), c.get_str()});
                t << c.get_str() << " p" << p.to_string() << "\n";
            }
            r.text = t.str();
            return r;
        };
    });

    auto* lam = app.add_subcommand("lambda-eval", "Adams, lambda and Schur operations on a group ring element");
    long adams_n = 0;
    int lambda_k = -1;
    std::string schur_part;
    lam->add_option("--input", inputs, "group ring element JSON")->required();
    auto* o_adams = lam->add_option("--adams", adams_n);
    auto* o_lambda = lam->add_option("--lambda", lambda_k);
    auto* o_schur = lam->add_option("--schur", schur_part);
    o_adams->excludes(o_lambda)->excludes(o_schur);
    o_lambda->excludes(o_schur);
    lam->callback([&] {
        action = [&, o_adams, o_lambda] {
            if (inputs.size() != 1) throw UsageError("lambda-eval takes exactly one --input");
            auto x = group_ring_from_json(read_json_file(inputs[0]));
            Report r;
            if (*o_adams) r.json = {{"operation", "adams"}, {"n", adams_n}, {"result", to_json(gr_adams(adams_n, x))}};
            else if (*o_lambda)
                r.json = {{"operation", "lambda"}, {"k", lambda_k}, {"result", to_json(lambda_op(lambda_k, x))}};
            else if (!schur_part.empty())
                r.json = {{"operation", "schur"},
                          {"partition", to_json(Partition::parse(schur_part))},
                          {"result", to_json(schur_apply(Partition::parse(schur_part), x))}};
            else throw UsageError("one of --adams, --lambda, --schur is required");
            return r;
        };
    });

    auto* conv = app.add_subcommand("cycle-convolve", "convolution of two clean cycle models");
    conv->add_option("--input", inputs, "two cycle JSON files")->required()->expected(1, 2);
    conv->add_option("--d-trunc", d_trunc)->capture_default_str();
    conv->callback([&] {
        action = [&] {
            if (inputs.size() != 2) throw UsageError("cycle-convolve needs --input twice");
            Report r;
            r.json = to_json(convolve(load_cycle(inputs[0]), load_cycle(inputs[1]), d_trunc));
            return r;
        };
    });

    auto* cschur = app.add_subcommand("cycle-schur", "Schur functor applied to a clean cycle model");
    std::string cyc_part;
    cschur->add_option("--input", inputs, "cycle JSON")->required();
    cschur->add_option("--partition", cyc_part)->required();
    cschur->add_option("--d-trunc", d_trunc)->capture_default_str();
    cschur->callback([&] {
        action = [&] {
            if (inputs.size() != 1) throw UsageError("cycle-schur takes exactly one --input");
            Report r;
            r.json = to_json(schur_cycle(Partition::parse(cyc_part), load_cycle(inputs[0]), d_trunc));
            return r;
        };
    });

    auto* rdim = app.add_subcommand("rep-dim", "Weyl dimension of an irreducible representation");
    std::string rtype, rweight;
    rdim->add_option("type", rtype, "Dynkin type such as A5")->required();
    rdim->add_option("weight", rweight, "highest weight such as 0,0,1,0,0")->required();
    rdim->callback([&] {
        action = [&] {
            auto rs = RootSystem::parse(rtype);
            Weight w = parse_weight(rweight, rs->rank());
            Integer d = weyl_dim(*rs, w);
            Report r;
            r.json = {{"type", rs->name()}, {"highest_weight", weight_json(w)}, {"dim", to_json(d)}};
            r.text = d.get_str() + "\n";
            return r;
        };
    });

    auto* rchar = app.add_subcommand("rep-char", "characters, tensor operations and decomposition");
    int alt_k = -1, sym_k = -1;
    long char_adams_n = 0;
    std::string tensor_w;
    bool do_decompose = false;
    rchar->add_option("type", rtype);
    rchar->add_option("weight", rweight);
    rchar->add_option("--input", inputs, "character JSON instead of type and weight");
    rchar->add_option("--alt", alt_k);
    rchar->add_option("--sym", sym_k);
    rchar->add_option("--adams", char_adams_n);
    rchar->add_option("--tensor", tensor_w, "tensor with the irreducible of this highest weight");
    rchar->add_flag("--decompose", do_decompose);
    rchar->callback([&] {
        action = [&] {
            std::optional<Character> x;
            if (!inputs.empty()) {
                x = load_character(inputs.at(0));
            } else {
                if (rtype.empty() || rweight.empty()) throw UsageError("rep-char needs TYPE WEIGHT or --input");
                auto rs = RootSystem::parse(rtype);
                x = freudenthal_character(rs, parse_weight(rweight, rs->rank()));
            }
            const auto& rs = x->root_system();
            if (!tensor_w.empty()) x = char_tensor(*x, freudenthal_character(rs, parse_weight(tensor_w, rs->rank())));
            if (alt_k >= 0) x = char_alt(alt_k, *x);
            if (sym_k >= 0) x = char_sym(sym_k, *x);
            if (char_adams_n != 0) x = char_adams(char_adams_n, *x);
            if (!do_decompose) return character_report(*x, nullptr);
            auto parts = decompose(*x);
            return character_report(*x, &parts);
        };
    });

    auto* rclass = app.add_subcommand("rep-classify", "weight multiplicity free irreducibles by type");
    rclass->add_option("--max-rank", max_rank)->capture_default_str()->check(CLI::PositiveNumber);
    rclass->add_option("--max-dim", max_dim)->capture_default_str()->check(CLI::PositiveNumber);
    rclass->callback([&] {
        action = [&] { return classify_report(classify_wmf(max_rank, max_dim), max_rank, max_dim); };
    });

    auto* wtab = app.add_subcommand("wmf-tables", "classification compared against the published tables");
    wtab->add_option("--max-rank", max_rank)->capture_default_str()->check(CLI::PositiveNumber);
    wtab->add_option("--max-dim", max_dim)->capture_default_str()->check(CLI::PositiveNumber);
    wtab->callback([&] {
        action = [&] {
            auto check = compare_with_tables(classify_wmf(max_rank, max_dim), max_rank, max_dim);
            Report r;
            Json rows = Json::array(), missing = Json::array();
            r.header = {"type", "highest_weight", "dim", "minuscule", "fs_type", "table", "column", "formula",
                        "table_dim", "table_minuscule", "table_fs_type", "agrees"};
            for (const auto& row : check.rows) {
                Json j = to_json(row.entry);
                std::vector<std::string> cells = {row.entry.rs->name(), weight_coords(row.entry.lambda),
                                                  row.entry.dim.get_str(), row.entry.minuscule ? "yes" : "no",
                                                  fs_name(row.entry.fs)};
                if (row.prediction) {
                    const auto& p = *row.prediction;
                    j["table"] = {{"table", p.table},         {"column", p.column},
                                  {"formula", p.formula},     {"dim", to_json(p.dim)},
                                  {"minuscule", p.minuscule}, {"fs_type", fs_name(p.fs)}};
                    cells.insert(cells.end(), {std::to_string(p.table), p.column, p.formula, p.dim.get_str(),
                                               p.minuscule ? "yes" : "no", fs_name(p.fs)});
                } else {
                    j["table"] = nullptr;
                    cells.insert(cells.end(), {"", "", "", "", "", ""});
                }
                j["agrees"] = row.ok();
                cells.push_back(row.ok() ? "yes" : "no");
                rows.push_back(j);
                r.rows.push_back(cells);
            }
            for (const auto& [rs, w] : check.missing)
                missing.push_back({{"type", rs->name()}, {"highest_weight", weight_json(w)}});
            r.json = {{"max_rank", max_rank},
                      {"max_dim", max_dim},
                      {"rows", rows},
                      {"missing", missing},
                      {"mismatches", check.mismatches()}};
            return r;
        };
    });

    PpavFlags tg_flags, cc_flags, g5_flags, simp_flags;
    auto* tg = app.add_subcommand("theta-group", "Tannaka group of a theta divisor with double points");
    tg_flags.attach(tg, 4);
    tg->callback([&] {
        action = [&] {
            Report r;
            r.json = {{"input", to_json(tg_flags.p)}};
            r.json.update(to_json(theta_group(tg_flags.p)));
            return r;
        };
    });

    auto* cc = app.add_subcommand("cc-odp", "clean characteristic cycle of a theta divisor with double points");
    cc_flags.attach(cc, 5);
    cc->callback([&] {
        action = [&] {
            Report r;
            r.json = to_json(cc_odp(cc_flags.p));
            return r;
        };
    });

    auto* g5 = app.add_subcommand("genus5", "degree-1 Chern-Mather obstruction in genus five");
    g5_flags.attach(g5, 5);
    g5->add_option("--input", inputs, "cycle JSON instead of the double-point model");
    g5->callback([&] {
        action = [&] {
            Genus5Record rec = inputs.empty() ? genus5_obstruction(g5_flags.p) : genus5_obstruction(load_cycle(inputs[0]));
            Report r;
            r.json = to_json(rec);
            r.status = rec.integral ? 0 : 1;
            return r;
        };
    });

    auto* fj = app.add_subcommand("fake-jacobian", "solve the fake-Jacobian equation at degrees 0 and 1");
    int fj_g = 5;
    std::string fj_degree;
    bool hyper = false;
    fj->add_option("--g", fj_g)->capture_default_str();
    fj->add_option("--degree", fj_degree, "target degree (instead of --input)");
    fj->add_option("--input", inputs, "target cycle JSON");
    fj->add_flag("--hyperelliptic", hyper);
    fj->callback([&] {
        action = [&] {
            FakeJacobianSolution s;
            if (!inputs.empty()) s = fake_jacobian_solve(fj_g, load_cycle(inputs[0]), hyper);
            else if (!fj_degree.empty()) s = fake_jacobian_solve_degree(fj_g, Integer(fj_degree), hyper);
            else throw UsageError("fake-jacobian needs --degree or --input");
            Report r;
            r.json = to_json(s);
            r.status = (!s.feasible || (s.c1 && !s.c1_integral)) ? 1 : 0;
            return r;
        };
    });

    auto* sb = app.add_subcommand("summand-bound", "dimension bound for summands from the adjoint supports");
    std::string supports;
    int dz = 0;
    sb->add_option("--supports", supports, "support dimensions, comma separated")->required();
    sb->add_option("--dz", dz, "dimension of the subvariety")->required();
    sb->callback([&] {
        action = [&] {
            Report r;
            r.json = to_json(summand_bound(parse_int_list(supports), dz));
            return r;
        };
    });

    auto* simp = app.add_subcommand("simplicity", "simplicity criteria for a clean cycle with a divisor component");
    std::string divisor = "Theta";
    simp_flags.attach(simp, 5);
    simp->add_option("--input", inputs, "cycle JSON instead of the double-point model");
    simp->add_option("--divisor", divisor)->capture_default_str();
    simp->add_option("--m-bound", m_bound)->capture_default_str()->check(CLI::PositiveNumber);
    simp->callback([&] {
        action = [&] {
            CleanCycleModel c = inputs.empty() ? cc_odp(simp_flags.p) : load_cycle(inputs[0]);
            Report r;
            r.json = to_json(simplicity_criteria(c, divisor, m_bound));
            return r;
        };
    });

    auto* ff = app.add_subcommand("fourfold-table", "invariants of principally polarized abelian fourfolds");
    ff->callback([&] {
        action = [&] {
            auto t = fourfold_table();
            Report r;
            r.json = to_json(t);
            r.header = {"stratum", "deg_gauss", "dim_omega", "omega", "group"};
            std::ostringstream text;
            for (const auto& row : t.rows) {
                r.rows.push_back({row.stratum, row.deg_gauss, row.dim_omega, row.omega, row.group});
                text << row.stratum << "  " << row.deg_gauss << "  " << row.dim_omega << "  " << row.omega << "  "
                     << row.group << (row.note.empty() ? "" : "  (" + row.note + ")") << "\n";
            }
            r.text = text.str();
            return r;
        };
    });

    auto* qm = app.add_subcommand("qm-search", "quasi-minuscule representations of a given dimension");
    long qm_dim = 118;
    int qm_rank = 20;
    qm->add_option("--dim", qm_dim)->capture_default_str()->check(CLI::PositiveNumber);
    qm->add_option("--max-rank", qm_rank)->capture_default_str()->check(CLI::PositiveNumber);
    qm->callback([&] {
        action = [&] {
            Json m = Json::array();
            for (const auto& x : quasi_minuscule_dim_search(qm_dim, qm_rank))
                m.push_back({{"type", x.rs->name()}, {"highest_weight", weight_json(x.lambda)}, {"dim", to_json(x.dim)}});
            Report r;
            r.json = {{"dim", qm_dim}, {"max_rank", qm_rank}, {"matches", m}};
            return r;
        };
    });

    auto* ig = app.add_subcommand("verify-ig", "check [e]_* target = S(candidates) on group ring fibers");
    ig->add_option("--input", inputs, "JSON with target, construction, e, candidates")->required();
    ig->callback([&] {
        action = [&] {
            Json j = read_json_file(inputs.at(0));
            if (!j.is_object()) throw SchemaError("$: expected an object");
            for (const char* key : {"target", "construction", "e", "candidates"})
                if (!j.contains(key)) throw SchemaError(std::string("$.") + key + ": missing required field");
            auto target = group_ring_from_json(j["target"], "$.target");
            auto s = construction_from_json(j["construction"], "$.construction");
            if (!j["e"].is_number_integer()) throw SchemaError("$.e: expected an integer");
            long e = j["e"].get<long>();
            if (!j["candidates"].is_array()) throw SchemaError("$.candidates: expected an array");
            std::vector<GroupRingElement> cands;
            for (std::size_t i = 0; i < j["candidates"].size(); ++i)
                cands.push_back(group_ring_from_json(j["candidates"][i], "$.candidates[" + std::to_string(i) + "]"));
            bool holds = verify_inverse_galois(target, s, e, cands);
            Report r;
            r.json = {{"e", e}, {"holds", holds}};
            r.status = holds ? 0 : 1;
            return r;
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    Format f = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
    try {
        Report r = action();
        emit(r, f, out);
        return r.status;
    } catch (const NonIntegralError& e) {
        err << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace lcc
