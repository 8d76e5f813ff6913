// apartness-lab: finite-model workbench for (pre-)apartness spaces.
//
// Subcommands: check, construct, sc, search, harness, catalog.
// Exit codes: 0 all requested checks pass, 1 a property fails,
//             2 parse error (file or command line), 3 invariant violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apartness/apartness.hpp"

namespace {

using namespace apartness;
using io::json;

constexpr int kExitPass = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

// worker count: hardware concurrency, capped by APARTNESS_LAB_THREADS
int env_threads() {
    const char* raw = std::getenv("APARTNESS_LAB_THREADS");
    if (!raw) return 0; // auto
    const int v = std::atoi(raw);
    return v >= 1 ? v : 1;
}

WssReading parse_wss_reading(const std::string& s) {
    if (s == "neighborhood" || s == "NEIGHBORHOOD") return WssReading::kNeighborhood;
    if (s == "difference" || s == "DIFFERENCE") return WssReading::kDifference;
    throw CLI::ValidationError("--wss-reading", "expected 'neighborhood' or 'difference'");
}

TotallyCauchyVariant parse_tc_variant(const std::string& s) {
    if (s == "corrected" || s == "CORRECTED") return TotallyCauchyVariant::kCorrected;
    if (s == "as-printed" || s == "AS_PRINTED") return TotallyCauchyVariant::kAsPrinted;
    throw CLI::ValidationError("--tc-variant", "expected 'corrected' or 'as-printed'");
}

std::vector<Prop> parse_prop_list(const std::string& csv) {
    std::vector<Prop> out;
    std::string token;
    std::stringstream ss(csv);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        auto p = parse_prop(token);
        if (!p) throw io::ParseError("unknown property name: '" + token + "'");
        out.push_back(*p);
    }
    return out;
}

std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(csv);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw io::ParseError("bad index list entry: '" + token + "'");
        }
    }
    return out;
}

void print_line(const std::string& name, bool ok, const Witness& w) {
    std::cout << "  " << name << ": " << (ok ? "pass" : "FAIL");
    if (!ok && !w.empty()) std::cout << "  (" << w.to_string() << ")";
    if (ok && !w.note.empty()) std::cout << "  [" << w.note << "]";
    std::cout << "\n";
}

// ---- check ----

struct CheckFlags {
    std::string properties;
    std::string wss_reading = "neighborhood";
    std::string tc_variant = "corrected"; // selects the formula for net-based
                                          // checks; space documents carry no
                                          // nets, so it is accepted for flag
                                          // compatibility and otherwise unused
    bool brute_force = false;
    bool json_out = false;
};

int run_check(const std::string& file, const CheckFlags& flags) {
    const Space space = io::load_space_document(file).to_space();
    const WssReading wss = parse_wss_reading(flags.wss_reading);
    (void)parse_tc_variant(flags.tc_variant);
    const PropertyOptions popts{flags.brute_force};

    std::vector<Prop> selected;
    const bool explicit_selection = !flags.properties.empty();
    if (explicit_selection)
        selected = parse_prop_list(flags.properties);
    else
        for (int i = 0; i < kPropCount; ++i) selected.push_back(static_cast<Prop>(i));

    std::optional<AxiomReport> axioms;
    auto axiom_result = [&](Prop p) -> const CheckResult& {
        if (!axioms)
            axioms = check_axioms(space, AxiomOptions{flags.brute_force});
        switch (p) {
            case Prop::kB1: return axioms->b1;
            case Prop::kB2: return axioms->b2;
            case Prop::kB3: return axioms->b3;
            case Prop::kB4: return axioms->b4;
            case Prop::kB5: return axioms->b5;
            default: return axioms->symmetry;
        }
    };

    json results = json::array();
    bool all_ok = true;
    if (!flags.json_out)
        std::cout << file << ": carrier " << space.n << "\n";
    for (Prop p : selected) {
        std::string name = prop_name(p);
        bool ok = true;
        Witness witness;
        bool skipped = false;
        try {
            switch (p) {
                case Prop::kB1:
                case Prop::kB2:
                case Prop::kB3:
                case Prop::kB4:
                case Prop::kB5:
                case Prop::kSym: {
                    const CheckResult& r = axiom_result(p);
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
                case Prop::kTight: {
                    CheckResult r = check_tight(space.ineq);
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
                case Prop::kEf: {
                    PropertyReport r = check_ef(space, popts);
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
                case Prop::kNn: {
                    PropertyReport r = check_nn(space, popts);
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
                case Prop::kWss: {
                    PropertyReport r = check_wss(space, wss, popts);
                    name = r.name;
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
                case Prop::kD11: {
                    PropertyReport r = check_d11(space);
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
                case Prop::kD12: {
                    PropertyReport r = check_d12(space);
                    ok = r.ok;
                    witness = r.witness;
                    break;
                }
            }
        } catch (const std::length_error& e) {
            if (explicit_selection) throw;
            skipped = true;
            witness.note = e.what();
        }
        if (skipped) {
            if (flags.json_out) {
                json entry;
                entry["property"] = name;
                entry["skipped"] = true;
                entry["reason"] = witness.note;
                results.push_back(std::move(entry));
            } else {
                std::cout << "  " << name << ": skipped  [" << witness.note << "]\n";
            }
            continue;
        }
        all_ok = all_ok && ok;
        if (flags.json_out) {
            json entry;
            entry["property"] = name;
            entry["ok"] = ok;
            if (!witness.empty() && !ok) entry["witness"] = io::witness_to_json(witness);
            results.push_back(std::move(entry));
        } else {
            print_line(name, ok, witness);
        }
    }
    if (flags.json_out) {
        json out;
        out["schema"] = 1;
        out["command"] = "check";
        out["file"] = file;
        out["carrier"] = space.n;
        out["results"] = std::move(results);
        out["ok"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all_ok ? "all requested properties hold" : "some properties FAILED") << "\n";
    }
    return all_ok ? kExitPass : kExitPropertyFail;
}

// ---- construct ----

struct ConstructFlags {
    std::string op;
    std::vector<std::string> inputs;
    std::string out_file;
    std::string carrier;
    int depth = 0;
    bool verify = false;
    bool json_out = false;
};

int run_construct(const ConstructFlags& flags) {
    json meta;
    meta["construct"] = flags.op;
    json out_doc;

    if (flags.op == "cantor") {
        if (flags.depth < 1) throw io::ParseError("construct cantor: --depth is required");
        const MetricSpace m = cantor(CantorSpec(flags.depth));
        meta["depth"] = flags.depth;
        out_doc = io::metric_to_json(m, meta);
        io::write_file(flags.out_file, out_doc);
        if (flags.verify) {
            const AxiomReport rep = check_axioms(from_metric(m));
            if (!rep.all_pass()) return kExitPropertyFail;
        }
        if (!flags.json_out)
            std::cout << "wrote " << flags.out_file << " (metric document, " << m.size()
                      << " points)\n";
        return kExitPass;
    }

    Space result;
    if (flags.op == "union" || flags.op == "product") {
        if (flags.inputs.size() != 2)
            throw io::ParseError("construct " + flags.op + ": exactly two input documents");
        const Space a = io::load_space_document(flags.inputs[0]).to_space();
        const Space b = io::load_space_document(flags.inputs[1]).to_space();
        if (flags.op == "union") {
            result = disjoint_union(a, b);
            meta["copy_boundary"] = a.n; // indices >= boundary lie in the second copy
        } else {
            result = product(a, b);
            meta["order"] = "row-major";
            meta["factors"] = json::array({a.n, b.n});
        }
    } else if (flags.op == "subspace") {
        if (flags.inputs.size() != 1)
            throw io::ParseError("construct subspace: exactly one input document");
        const Space a = io::load_space_document(flags.inputs[0]).to_space();
        Subset carrier(a.n);
        for (int i : parse_index_list(flags.carrier)) {
            if (i < 0 || i >= a.n) throw io::ParseError("--carrier: index out of range");
            carrier.set(i);
        }
        result = subspace(a, carrier);
        meta["carrier"] = carrier.indices();
    } else {
        throw io::ParseError("construct: unknown op '" + flags.op +
                             "' (expected union|product|subspace|cantor)");
    }

    out_doc = io::space_to_json(result, meta);
    io::write_file(flags.out_file, out_doc);
    int code = kExitPass;
    if (flags.verify) {
        const AxiomReport rep = check_axioms(result);
        if (!flags.json_out)
            for (const auto& [name, r] : rep.entries()) print_line(name, r->ok, r->witness);
        if (!rep.all_pass()) code = kExitPropertyFail;
    }
    if (!flags.json_out)
        std::cout << "wrote " << flags.out_file << " (abstract document, " << result.n
                  << " points)\n";
    return code;
}

// ---- sc ----

int run_sc(const std::string& map_file, const std::string& src_file, const std::string& dst_file,
           bool brute, bool json_out) {
    const Space src = io::load_space_document(src_file).to_space();
    const Space dst = io::load_space_document(dst_file).to_space();
    const PointMap f = io::load_point_map(map_file, src.n, dst.n);
    const PropertyReport rep = is_strongly_continuous(f, src, dst, PropertyOptions{brute});
    if (json_out) {
        json out;
        out["schema"] = 1;
        out["command"] = "sc";
        out["result"] = io::report_to_json(rep);
        std::cout << out.dump(2) << "\n";
    } else {
        print_line("STRONGLY_CONTINUOUS", rep.ok, rep.witness);
    }
    return rep.ok ? kExitPass : kExitPropertyFail;
}

// ---- search ----

struct SearchFlags {
    int n = 3;
    std::string require, forbid;
    long limit = 0;
    bool canonicalize = false;
    std::string wss_reading = "neighborhood";
    bool json_out = false;
};

int run_search(const SearchFlags& flags) {
    ModelQuery q;
    q.n = flags.n;
    q.require = parse_prop_list(flags.require);
    q.forbid = parse_prop_list(flags.forbid);
    q.limit = flags.limit;
    q.canonicalize = flags.canonicalize;
    q.wss_reading = parse_wss_reading(flags.wss_reading);
    q.threads = env_threads();
    const std::vector<ModelReport> models = enumerate_models(q);
    if (flags.json_out) {
        json out;
        out["schema"] = 1;
        out["command"] = "search";
        out["n"] = q.n;
        out["count"] = models.size();
        json arr = json::array();
        for (const auto& rep : models) arr.push_back(io::model_report_to_json(rep));
        out["models"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << models.size() << " model(s)\n";
        for (const auto& rep : models) {
            std::cout << "model " << model_encoding(rep.model);
            if (!rep.canonical_tag.empty()) std::cout << "  canonical " << rep.canonical_tag;
            std::cout << "\n";
            for (const auto& w : rep.forbidden_witnesses)
                print_line(w.name, w.ok, w.witness);
        }
    }
    return models.empty() ? kExitPropertyFail : kExitPass;
}

// ---- harness ----

struct HarnessFlags {
    int depth = 3;
    std::string x0_file, x1_file;
    std::string d1, d2;
    std::string h1_file, h2_file;
    bool json_out = false;
};

int run_harness(const HarnessFlags& flags) {
    const Space c_sp = from_metric(cantor(CantorSpec(flags.depth)));
    Subset d1 = Subset::full(c_sp.n), d2 = Subset::full(c_sp.n);
    if (!flags.d1.empty()) {
        d1 = Subset(c_sp.n);
        for (int i : parse_index_list(flags.d1)) d1.set(i);
    }
    if (!flags.d2.empty()) {
        d2 = Subset(c_sp.n);
        for (int i : parse_index_list(flags.d2)) d2.set(i);
    }
    Space x0 = flags.x0_file.empty() ? c_sp : io::load_space_document(flags.x0_file).to_space();
    Space x1 = flags.x1_file.empty() ? c_sp : io::load_space_document(flags.x1_file).to_space();
    PointMap h1 = flags.h1_file.empty() ? PointMap::identity(d1.count())
                                        : io::load_point_map(flags.h1_file, d1.count(), x0.n);
    PointMap h2 = flags.h2_file.empty() ? PointMap::identity(d2.count())
                                        : io::load_point_map(flags.h2_file, d2.count(), x1.n);
    if (flags.h1_file.empty() && h1.dst != x0.n)
        throw io::ParseError("harness: identity h1 needs |D1| = |X0|; supply --h1");
    if (flags.h2_file.empty() && h2.dst != x1.n)
        throw io::ParseError("harness: identity h2 needs |D2| = |X1|; supply --h2");

    const HarnessReport rep = union_harness(flags.depth, d1, d2, h1, h2, x0, x1);
    if (flags.json_out) {
        std::cout << io::harness_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "union harness, depth " << rep.depth << "\n";
        std::cout << "preconditions:\n";
        for (const auto& p : rep.preconditions) print_line(p.name, p.ok, p.witness);
        std::cout << "checks:\n";
        for (const auto* c : rep.checks()) print_line(c->name, c->ok, c->witness);
        std::cout << (rep.all_pass() ? "all checks pass" : "FAILURES present") << "\n";
    }
    return rep.all_pass() ? kExitPass : kExitPropertyFail;
}

// ---- catalog ----

int run_catalog(int nmax, const std::string& out_file, bool json_out) {
    const CatalogDocument doc = catalog(nmax, env_threads());
    const json j = io::catalog_to_json(doc);
    if (!out_file.empty()) io::write_file(out_file, j);
    if (json_out || out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& level : doc.levels)
            std::cout << "n=" << level.n << ": " << level.total_models << " models, "
                      << level.canonical_models << " up to isomorphism\n";
        std::cout << "wrote " << out_file << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"apartness-lab: finite-model workbench for (pre-)apartness spaces"};
    app.require_subcommand(1);

    CheckFlags check_flags;
    std::string check_file;
    auto* cmd_check = app.add_subcommand("check", "decide axioms and properties of a space document");
    cmd_check->add_option("file", check_file, "space document (JSON)")->required();
    cmd_check->add_option("--properties", check_flags.properties,
                          "comma list from B1,B2,B3,B4,B5,SYM,TIGHT,EF,NN,WSS,D11,D12");
    cmd_check->add_option("--wss-reading", check_flags.wss_reading, "neighborhood|difference");
    cmd_check->add_option("--tc-variant", check_flags.tc_variant, "corrected|as-printed");
    cmd_check->add_flag("--brute-force", check_flags.brute_force,
                        "use the exhaustive search routes instead of the fast paths");
    cmd_check->add_flag("--json", check_flags.json_out, "machine-readable report");

    ConstructFlags construct_flags;
    auto* cmd_construct =
        app.add_subcommand("construct", "build union|product|subspace|cantor and write a document");
    cmd_construct->add_option("op", construct_flags.op, "union|product|subspace|cantor")->required();
    cmd_construct->add_option("inputs", construct_flags.inputs, "input documents");
    cmd_construct->add_option("--out", construct_flags.out_file, "output document path")->required();
    cmd_construct->add_option("--carrier", construct_flags.carrier,
                              "comma list of point indices (subspace)");
    cmd_construct->add_option("--depth", construct_flags.depth, "cantor depth");
    cmd_construct->add_flag("--verify", construct_flags.verify, "re-run the axiom checks on the output");
    cmd_construct->add_flag("--json", construct_flags.json_out, "machine-readable report");

    std::string sc_map, sc_src, sc_dst;
    bool sc_brute = false, sc_json = false;
    auto* cmd_sc = app.add_subcommand("sc", "check strong continuity of a point map");
    cmd_sc->add_option("map", sc_map, "JSON array of target indices")->required();
    cmd_sc->add_option("src", sc_src, "source space document")->required();
    cmd_sc->add_option("dst", sc_dst, "target space document")->required();
    cmd_sc->add_flag("--brute-force", sc_brute, "subset-pair search instead of the point fast path");
    cmd_sc->add_flag("--json", sc_json, "machine-readable report");

    SearchFlags search_flags;
    auto* cmd_search = app.add_subcommand("search", "enumerate models matching constraints");
    cmd_search->add_option("--n", search_flags.n, "carrier size (1..7)")->required();
    cmd_search->add_option("--require", search_flags.require, "properties that must hold");
    cmd_search->add_option("--forbid", search_flags.forbid, "properties that must fail");
    cmd_search->add_option("--limit", search_flags.limit, "stop after this many models");
    cmd_search->add_flag("--canonicalize", search_flags.canonicalize,
                         "emit one representative per isomorphism class");
    cmd_search->add_option("--wss-reading", search_flags.wss_reading, "neighborhood|difference");
    cmd_search->add_flag("--json", search_flags.json_out, "machine-readable report");

    HarnessFlags harness_flags;
    auto* cmd_harness = app.add_subcommand("harness", "run the union-theorem diagram at finite depth");
    cmd_harness->add_option("--depth", harness_flags.depth, "cantor truncation depth")->required();
    cmd_harness->add_option("--x0", harness_flags.x0_file, "first component space document");
    cmd_harness->add_option("--x1", harness_flags.x1_file, "second component space document");
    cmd_harness->add_option("--d1", harness_flags.d1, "dense subset of cantor(depth), comma indices");
    cmd_harness->add_option("--d2", harness_flags.d2, "dense subset of cantor(depth), comma indices");
    cmd_harness->add_option("--h1", harness_flags.h1_file, "map file for h1 (default identity)");
    cmd_harness->add_option("--h2", harness_flags.h2_file, "map file for h2 (default identity)");
    cmd_harness->add_flag("--json", harness_flags.json_out, "machine-readable report");

    int catalog_nmax = 3;
    std::string catalog_out;
    bool catalog_json = false;
    auto* cmd_catalog = app.add_subcommand("catalog", "exhaustive property catalog up to a carrier size");
    cmd_catalog->add_option("--nmax", catalog_nmax, "largest carrier size (1..6)")->required();
    cmd_catalog->add_option("--out", catalog_out, "write the catalog document here");
    cmd_catalog->add_flag("--json", catalog_json, "print the catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(cmd_check)) return run_check(check_file, check_flags);
        if (app.got_subcommand(cmd_construct)) return run_construct(construct_flags);
        if (app.got_subcommand(cmd_sc)) return run_sc(sc_map, sc_src, sc_dst, sc_brute, sc_json);
        if (app.got_subcommand(cmd_search)) return run_search(search_flags);
        if (app.got_subcommand(cmd_harness)) return run_harness(harness_flags);
        if (app.got_subcommand(cmd_catalog))
            return run_catalog(catalog_nmax, catalog_out, catalog_json);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::length_error& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitPass;
}
