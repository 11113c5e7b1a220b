// hamspec: spectral Hamiltonicity toolkit CLI.
// Subcommands: spectra, closure, family, oracle, check-theorem, campaign.
// Exit codes: 0 ok / pass, 1 usage or input error, 2 audit conclusion
// failure, 3 capacity exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamspec/closure.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/oracles.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/verifier.hpp"

using json = nlohmann::json;
using namespace hamspec;

namespace {

// Round to 12 significant digits so reports are stable across platforms.
double sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

int default_jobs() {
    if (const char* env = std::getenv("HAMSPEC_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

std::istream& open_input(std::ifstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cin;
    file.open(path);
    if (!file) throw CLI::ValidationError("input", "cannot open " + path);
    return file;
}

ParamMap parse_params(const std::vector<std::string>& kvs) {
    ParamMap out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = std::strtod(kv.c_str() + eq + 1, nullptr);
    }
    return out;
}

json report_to_json(const AuditReport& r) {
    json incidents = json::array();
    for (const auto& f : r.conclusion_failures)
        incidents.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
    json borderline = json::array();
    for (const auto& b : r.borderline_spectral)
        borderline.push_back({{"graph6", b.graph6}, {"detail", b.detail}});
    return json{{"theorem", to_string(r.id)},
                {"mode", to_string(r.mode)},
                {"graphs_checked", r.graphs_checked},
                {"hypothesis_hits", r.hypothesis_hits},
                {"conclusion_failures", incidents},
                {"failures_suppressed", r.failures_suppressed},
                {"borderline_spectral", borderline},
                {"notes", r.notes},
                {"elapsed_seconds", sig12(r.elapsed_seconds)},
                {"passed", r.passed()}};
}

int report_exit_code(const AuditReport& r) { return r.passed() ? 0 : 2; }

// ---- spectra -------------------------------------------------------------

int cmd_spectra(const std::string& input, const std::vector<double>& alphas) {
    std::ifstream file;
    std::istream& in = open_input(file, input);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        SimpleGraph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return 1;
        }
        json rec;
        rec["n"] = g.order();
        rec["m"] = g.edge_count();
        try {
            rec["rho"] = sig12(rho(g).value);
            rec["rho2"] = sig12(rho2(g).value);
            rec["mu"] = sig12(mu(g).value);
            json thetas = json::array();
            for (double a : alphas)
                thetas.push_back({{"alpha", a},
                                  {"value", sig12(lambda_max_symmetric(g, a).value)}});
            rec["theta"] = thetas;
        } catch (const SpectralError& e) {
            rec["error"] = e.what();
            std::cout << rec.dump() << "\n";
            continue;
        }
        if (g.edge_count() > 0) {
            DegreeBounds b = degree_bounds(g);
            json bounds;
            bounds["mu_degree_lower"] = sig12(b.mu_lower);
            bounds["rho_degree_lower"] = sig12(b.rho_lower);
            bounds["connected_regular"] = b.connected_regular;
            bounds["connected_semiregular_bipartite"] = b.connected_semiregular_bipartite;
            if (auto parts = bipartition(g)) {
                // Bipartite: rho^2 <= |E|; balanced additionally mu <= |E|/n + n.
                bounds["rho_upper"] = sig12(std::sqrt(static_cast<double>(g.edge_count())));
                if (parts->first.size() == parts->second.size()) {
                    int half = parts->first.size();
                    bounds["mu_upper"] =
                        sig12(static_cast<double>(g.edge_count()) / half + half);
                }
            }
            rec["bounds"] = bounds;
        }
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

// ---- closure -------------------------------------------------------------

int cmd_closure(const std::string& input, int k, bool bip, int left) {
    std::ifstream file;
    std::istream& in = open_input(file, input);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        SimpleGraph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return 1;
        }
        json rec;
        rec["input"] = line;
        rec["k"] = k;
        SimpleGraph closed;
        ClosureTrace trace;
        if (bip) {
            int nl = left > 0 ? left : g.order() / 2;
            BipartiteGraph bg = BipartiteGraph::from_simple(g, nl);
            auto [cb, tr] = bipartite_closure(bg, k);
            closed = cb.as_simple();
            trace = tr;
            rec["complete"] =
                cb.edge_count() == static_cast<long>(cb.left_size()) * cb.right_size();
        } else {
            auto [c, tr] = k_closure(g, k);
            closed = c;
            trace = tr;
            int n = g.order();
            rec["complete"] = closed.edge_count() == static_cast<long>(n) * (n - 1) / 2;
        }
        rec["closure"] = graph6_encode(closed);
        rec["rounds"] = trace.rounds;
        json added = json::array();
        for (const auto& a : trace.added_edges)
            added.push_back({{"u", a.u}, {"v", a.v}, {"degree_sum", a.degree_sum}});
        rec["added"] = added;
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

// ---- family ----------------------------------------------------------------

SimpleGraph build_family(FamilyTag tag, const FamilyParams& p, std::uint64_t seed) {
    switch (tag) {
        case FamilyTag::M: return build_M(p.n, p.k, p.s);
        case FamilyTag::Z: return build_Z(p.n, p.k, p.p, p.q).as_simple();
        case FamilyTag::Z0: return build_Z0(p.n, p.k, p.p, p.q).as_simple();
        case FamilyTag::F: return build_F(p.n, p.k, p.s).as_simple();
        case FamilyTag::F0: return build_F0(p.n, p.k, p.s).as_simple();
        case FamilyTag::EX21: return build_example21(p.n, p.q, seed);
        default:
            throw std::invalid_argument("family gen supports M, Z, Z0, F, F0, EX21; "
                                        "B/C/H/D/W are membership-only classes");
    }
}

int cmd_family_gen(const std::string& tag_s, const FamilyParams& p, std::uint64_t seed) {
    auto tag = parse_family_tag(tag_s);
    if (!tag) {
        std::cerr << "unknown family tag: " << tag_s << "\n";
        return 1;
    }
    std::cout << graph6_encode(build_family(*tag, p, seed)) << "\n";
    return 0;
}

int cmd_family_check(const std::string& tag_s, const FamilyParams& p, const std::string& input) {
    auto tag = parse_family_tag(tag_s);
    if (!tag) {
        std::cerr << "unknown family tag: " << tag_s << "\n";
        return 1;
    }
    std::ifstream file;
    std::istream& in = open_input(file, input);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        SimpleGraph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return 1;
        }
        json rec;
        rec["graph6"] = line;
        rec["family"] = tag_s;
        auto w = membership(g, *tag, p);
        rec["member"] = w.has_value();
        if (w) {
            json parts = json::array();
            for (std::size_t i = 0; i < w->parts.size(); ++i) {
                std::vector<int> vs;
                for (int v = 0; v < g.order(); ++v)
                    if (w->parts[i].contains(v)) vs.push_back(v);
                parts.push_back({{"role", w->roles[i]}, {"vertices", vs}});
            }
            rec["witness"] = parts;
        }
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

// ---- oracle ------------------------------------------------------------------

int cmd_oracle(const std::string& input, const std::string& prop_s, int q, int p, int left) {
    auto prop = parse_property(prop_s);
    if (!prop) {
        std::cerr << "unknown property: " << prop_s << "\n";
        return 1;
    }
    std::ifstream file;
    std::istream& in = open_input(file, input);
    std::string line;
    long lineno = 0;
    int rc = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        SimpleGraph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return 1;
        }
        json rec;
        rec["graph6"] = line;
        rec["property"] = prop_s;
        try {
            switch (*prop) {
                case Property::HAM_CYCLE: {
                    auto c = hamiltonian_cycle(g);
                    rec["value"] = c.has_value();
                    if (c) rec["certificate"] = c->sequences;
                    break;
                }
                case Property::HAM_PATH: {
                    auto c = hamiltonian_path(g);
                    rec["value"] = c.has_value();
                    if (c) rec["certificate"] = c->sequences;
                    break;
                }
                case Property::HAM_CONNECTED:
                    rec["value"] = hamilton_connected(g);
                    break;
                case Property::Q_HAM:
                case Property::Q_TRACEABLE:
                case Property::Q_PATH_COVER:
                    rec["q"] = q;
                    rec["value"] = q_property(g, *prop, q);
                    break;
                case Property::Q_EDGE_HAM:
                    rec["q"] = q;
                    rec["value"] = q_edge_hamiltonian(g, q);
                    break;
                case Property::QQ_HAM:
                case Property::QQ_TRACEABLE:
                case Property::PQ_TRACEABLE: {
                    int nl = left > 0 ? left : g.order() / 2;
                    BipartiteGraph bg = BipartiteGraph::from_simple(g, nl);
                    rec["p"] = (*prop == Property::PQ_TRACEABLE) ? p : q;
                    rec["q"] = q;
                    rec["value"] = bipartite_qq(
                        bg, *prop, (*prop == Property::PQ_TRACEABLE) ? p : q, q);
                    break;
                }
                case Property::VERTEX_CONN:
                    rec["value"] = vertex_connectivity(g);
                    break;
                case Property::EDGE_CONN:
                    rec["value"] = edge_connectivity(g);
                    break;
            }
        } catch (const CapacityError& e) {
            rec["error"] = e.what();
            rc = 3;
        } catch (const std::invalid_argument& e) {
            rec["error"] = e.what();
            rc = 1;
        }
        std::cout << rec.dump() << "\n";
    }
    return rc;
}

// ---- check-theorem ------------------------------------------------------------

int run_theorem(const TheoremSpec& spec, AuditMode mode, const AuditBudget& budget,
                std::ostream& out) {
    try {
        AuditReport rep = audit(spec, mode, budget);
        out << report_to_json(rep).dump(2) << "\n";
        return report_exit_code(rep);
    } catch (const CapacityError& e) {
        out << json{{"theorem", to_string(spec.id)}, {"error", e.what()},
                    {"kind", "capacity"}}.dump(2)
            << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        out << json{{"theorem", to_string(spec.id)}, {"error", e.what()},
                    {"kind", "invalid-params"}}.dump(2)
            << "\n";
        return 1;
    }
}

// ---- campaign --------------------------------------------------------------------

// Config: key=value lines, [SECTION] headers. Global keys (seed, jobs,
// samples, outdir) may appear before the first section; each section names a
// theorem id (an optional ".suffix" distinguishes repeated runs) and holds
// mode=, property= and numeric params. See docs/campaign-format.md.
int cmd_campaign(const std::string& config_path, std::string outdir) {
    std::ifstream cfg(config_path);
    if (!cfg) {
        std::cerr << "cannot open config: " << config_path << "\n";
        return 1;
    }

    struct Entry {
        std::string name;
        TheoremSpec spec;
        AuditMode mode = AuditMode::SAMPLED;
        AuditBudget budget;
    };
    AuditBudget defaults;
    defaults.jobs = default_jobs();
    std::vector<Entry> entries;
    Entry* cur = nullptr;

    std::string line;
    long lineno = 0;
    while (std::getline(cfg, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                std::cerr << config_path << ":" << lineno << ": bad section header\n";
                return 1;
            }
            std::string name = line.substr(1, line.size() - 2);
            std::string id_part = name.substr(0, name.find('.'));
            auto id = parse_theorem_id(id_part);
            if (!id) {
                std::cerr << config_path << ":" << lineno << ": unknown theorem " << id_part
                          << "\n";
                return 1;
            }
            entries.push_back({name, TheoremSpec{*id, {}, ""}, AuditMode::SAMPLED, defaults});
            cur = &entries.back();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::cerr << config_path << ":" << lineno << ": expected key=value\n";
            return 1;
        }
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (!cur) {
            if (key == "seed") defaults.seed = std::strtoull(val.c_str(), nullptr, 10);
            else if (key == "jobs") defaults.jobs = std::atoi(val.c_str());
            else if (key == "samples") defaults.samples = std::atol(val.c_str());
            else if (key == "outdir") outdir = val;
            else {
                std::cerr << config_path << ":" << lineno << ": unknown global key " << key
                          << "\n";
                return 1;
            }
            continue;
        }
        if (key == "mode") {
            auto m = parse_audit_mode(val);
            if (!m) {
                std::cerr << config_path << ":" << lineno << ": unknown mode " << val << "\n";
                return 1;
            }
            cur->mode = *m;
        } else if (key == "property") {
            cur->spec.property = val;
        } else if (key == "seed") {
            cur->budget.seed = std::strtoull(val.c_str(), nullptr, 10);
        } else if (key == "jobs") {
            cur->budget.jobs = std::atoi(val.c_str());
        } else if (key == "samples") {
            cur->budget.samples = std::atol(val.c_str());
        } else {
            cur->spec.params[key] = std::strtod(val.c_str(), nullptr);
        }
    }

    if (!outdir.empty()) std::filesystem::create_directories(outdir);
    std::ofstream summary(outdir.empty() ? "summary.csv" : outdir + "/summary.csv");
    summary << "name,theorem,mode,status,graphs_checked,hypothesis_hits,failures,"
               "borderline,elapsed_seconds\n";

    int worst = 0;
    for (auto& e : entries) {
        std::string status;
        AuditReport rep;
        int code;
        try {
            rep = audit(e.spec, e.mode, e.budget);
            code = report_exit_code(rep);
            status = rep.passed() ? "pass" : "fail";
        } catch (const CapacityError& ex) {
            code = 3;
            status = "capacity";
            rep.id = e.spec.id;
            rep.notes.push_back(ex.what());
        } catch (const std::exception& ex) {
            code = 1;
            status = "error";
            rep.id = e.spec.id;
            rep.notes.push_back(ex.what());
        }
        std::string path = (outdir.empty() ? "" : outdir + "/") + e.name + ".json";
        std::ofstream rf(path);
        json j = report_to_json(rep);
        j["status"] = status;
        rf << j.dump(2) << "\n";
        summary << e.name << "," << to_string(e.spec.id) << "," << to_string(e.mode) << ","
                << status << "," << rep.graphs_checked << "," << rep.hypothesis_hits << ","
                << rep.conclusion_failures.size() << "," << rep.borderline_spectral.size()
                << "," << sig12(rep.elapsed_seconds) << "\n";
        // failure (2) dominates capacity (3) dominates clean (0)
        if (code == 2) worst = 2;
        else if (code != 0 && worst != 2) worst = 3;
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral Hamiltonicity toolkit"};
    app.require_subcommand(1);

    // spectra
    auto* sp = app.add_subcommand("spectra", "per-graph spectral values from graph6 stream");
    std::string sp_input = "-";
    std::vector<double> sp_alphas = {0.0, 1.0};
    sp->add_option("--input", sp_input, "graph6 file ('-' = stdin)");
    sp->add_option("--alpha", sp_alphas, "alpha values for Theta")->delimiter(',');

    // closure
    auto* cl = app.add_subcommand("closure", "k-closure of each input graph");
    std::string cl_input = "-";
    int cl_k = 0, cl_left = 0;
    bool cl_bip = false;
    cl->add_option("--k", cl_k, "closure index")->required();
    cl->add_option("--input", cl_input, "graph6 file ('-' = stdin)");
    cl->add_flag("--bipartite", cl_bip, "use the bipartite closure");
    cl->add_option("--left", cl_left, "left part size (default n/2)");

    // family gen / check
    auto* fam = app.add_subcommand("family", "construct or test family membership");
    fam->require_subcommand(1);
    std::string f_tag, f_input = "-";
    FamilyParams fp;
    std::uint64_t f_seed = 1;
    auto add_family_params = [&](CLI::App* c) {
        c->add_option("--tag", f_tag, "family tag: M Z Z0 F F0 B C H D W EX21")->required();
        c->add_option("--n", fp.n);
        c->add_option("--k", fp.k);
        c->add_option("--s", fp.s);
        c->add_option("--r", fp.r);
        c->add_option("--p", fp.p);
        c->add_option("--q", fp.q);
    };
    auto* fgen = fam->add_subcommand("gen", "emit a family instance as graph6");
    add_family_params(fgen);
    fgen->add_option("--seed", f_seed, "seed for randomized constructions");
    auto* fchk = fam->add_subcommand("check", "membership test for each input graph");
    add_family_params(fchk);
    fchk->add_option("--input", f_input, "graph6 file ('-' = stdin)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact property deciders");
    std::string o_input = "-", o_prop;
    int o_q = 0, o_p = 0, o_left = 0;
    orc->add_option("--property", o_prop, "property name (e.g. ham-cycle, q-traceable)")
        ->required();
    orc->add_option("--q", o_q, "q parameter");
    orc->add_option("--p", o_p, "p parameter for (p,q)-traceable");
    orc->add_option("--left", o_left, "left part size for bipartite properties");
    orc->add_option("--input", o_input, "graph6 file ('-' = stdin)");

    // check-theorem
    auto* ct = app.add_subcommand("check-theorem", "audit one theorem");
    std::string ct_id, ct_mode = "sampled", ct_prop;
    std::vector<std::string> ct_params;
    AuditBudget ct_budget;
    ct_budget.jobs = default_jobs();
    ct->add_option("--id", ct_id, "theorem id (e.g. T_W11T_I)")->required();
    ct->add_option("--mode", ct_mode, "exhaustive | sampled | extremal");
    ct->add_option("--param", ct_params, "key=value (repeatable)");
    ct->add_option("--property", ct_prop, "property name for STAB_W01P / PROP_11P");
    ct->add_option("--budget", ct_budget.samples, "sample count for sampled mode");
    ct->add_option("--seed", ct_budget.seed, "rng seed");
    ct->add_option("--jobs", ct_budget.jobs, "worker threads");

    // campaign
    auto* cp = app.add_subcommand("campaign", "batch audits from a config file");
    std::string cp_config, cp_outdir = "reports";
    cp->add_option("config", cp_config, "campaign config file")->required();
    cp->add_option("--out", cp_outdir, "report output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) return cmd_spectra(sp_input, sp_alphas);
        if (cl->parsed()) return cmd_closure(cl_input, cl_k, cl_bip, cl_left);
        if (fam->parsed()) {
            if (fgen->parsed()) return cmd_family_gen(f_tag, fp, f_seed);
            return cmd_family_check(f_tag, fp, f_input);
        }
        if (orc->parsed()) return cmd_oracle(o_input, o_prop, o_q, o_p, o_left);
        if (ct->parsed()) {
            auto id = parse_theorem_id(ct_id);
            if (!id) {
                std::cerr << "unknown theorem id: " << ct_id << "\n";
                return 1;
            }
            auto mode = parse_audit_mode(ct_mode);
            if (!mode) {
                std::cerr << "unknown mode: " << ct_mode << "\n";
                return 1;
            }
            TheoremSpec spec{*id, parse_params(ct_params), ct_prop};
            return run_theorem(spec, *mode, ct_budget, std::cout);
        }
        if (cp->parsed()) return cmd_campaign(cp_config, cp_outdir);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
