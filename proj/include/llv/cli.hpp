#pragma once

// Command-line surface. run() takes argv-style arguments and writes rendered
// output to the given stream, so tests can drive it directly and compare
// bytes. Exit codes: 0 success, 1 computation/invariant failure, 2 usage.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "llv/cache.hpp"
#include "llv/monodromy.hpp"

namespace llv {

namespace cli_detail {

inline std::string poly1_text(const Poly1& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        int64_t a = std::abs(c);
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

inline std::string poly2_text(const Poly2& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        int64_t a = std::abs(c);
        if (a != 1 || (e.first == 0 && e.second == 0)) os << a;
        if (e.first != 0) {
            os << "s";
            if (e.first != 1) os << "^" << e.first;
        }
        if (e.second != 0) {
            os << "t";
            if (e.second != 1) os << "^" << e.second;
        }
        first = false;
    }
    return os.str();
}

// first-quadrant triangle: row d lists h^{p, d-p} for p >= d-p;
// rows that vanish identically (absent odd cohomology) are omitted
inline std::string diamond_text(const HodgeDiamond& h) {
    std::ostringstream os;
    for (int d = 0; d <= 2 * h.n; ++d) {
        bool any = false;
        std::ostringstream row;
        for (int p = (d + 1) / 2; p <= d; ++p) {
            if (p > 2 * h.n || d - p > 2 * h.n) continue;
            if (p > (d + 1) / 2) row << ' ';
            row << h.h[p][d - p];
            if (h.h[p][d - p] != 0) any = true;
        }
        if (any) os << row.str() << '\n';
    }
    return os.str();
}

// Table-1 style row: even Betti numbers, dimension, Salamon weight
inline std::string betti_table_text(const std::vector<std::pair<Weight, BettiVector>>& rows,
                                    int n) {
    std::ostringstream os;
    os << "weight";
    for (int k = 0; k <= n; ++k) os << "\tb_" << 2 * k;
    os << "\tdim\tsalamon\n";
    for (auto& [w, bv] : rows) {
        int64_t dim = 0, sal = 0;
        for (size_t k = 0; k < bv.b.size(); ++k) dim += bv.b[k];
        for (int k = 0; k <= n; ++k)
            sal += static_cast<int64_t>(n - k) * (n - k) * bv.b[2 * k];
        os << w.display();
        for (int k = 0; k <= n; ++k) os << '\t' << bv.b[2 * k];
        os << '\t' << dim << '\t' << sal << '\n';
    }
    return os.str();
}

inline Decomposition family_decomposition(const std::string& family, int n) {
    if (family == "k3n") return decompose(k3n_series(n).c[n]);
    if (family == "kumn") return decompose(kumn_series(n).c[n]);
    if (family == "og10") {
        if (n != 5) throw precondition_error("og10 has n = 5");
        auto cs = solve_og10();
        if (cs.candidates.size() != 1) throw error("og10 solve did not return a unique candidate");
        return cs.candidates[0].dec;
    }
    if (family == "og6") {
        if (n != 3) throw precondition_error("og6 has n = 3");
        return og6_disambiguate(solve_og6());
    }
    throw precondition_error("unknown family: " + family);
}

inline std::string render_series(const std::string& family, int max_n, bool do_decompose,
                                 const std::string& specialize, const std::string& out) {
    std::ostringstream os;
    bool is_k3 = family == "k3n";
    if (!specialize.empty()) {
        if (specialize == "euler") {
            auto e = is_k3 ? euler_series_k3(max_n) : euler_series_kum(max_n);
            if (out == "json") {
                json j;
                j["schema"] = kSchemaVersion;
                j["family"] = family;
                j["specialize"] = "euler";
                j["coefficients"] = e;
                os << j.dump(2) << '\n';
            } else {
                for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
                os << '\n';
            }
        } else if (specialize == "poincare") {
            auto ps = is_k3 ? poincare_series_k3(max_n) : poincare_series_kum(max_n);
            if (out == "json") {
                json arr = json::array();
                for (int n = 0; n <= max_n; ++n)
                    arr.push_back(json{{"n", n}, {"polynomial", poly1_to_json(ps[n])}, {"centered", true}});
                json j;
                j["schema"] = kSchemaVersion;
                j["family"] = family;
                j["specialize"] = "poincare";
                j["coefficients"] = std::move(arr);
                os << j.dump(2) << '\n';
            } else {
                for (int n = 0; n <= max_n; ++n)
                    os << n << ": " << poly1_text(ps[n], "t") << '\n';
            }
        } else if (specialize == "hd") {
            auto hs = is_k3 ? hd_series_k3(max_n) : hd_series_kum(max_n);
            if (out == "json") {
                json arr = json::array();
                for (int n = 0; n <= max_n; ++n)
                    arr.push_back(json{{"n", n}, {"polynomial", poly2_to_json(hs[n])}, {"centered", true}});
                json j;
                j["schema"] = kSchemaVersion;
                j["family"] = family;
                j["specialize"] = "hd";
                j["coefficients"] = std::move(arr);
                os << j.dump(2) << '\n';
            } else {
                for (int n = 0; n <= max_n; ++n) os << n << ": " << poly2_text(hs[n]) << '\n';
            }
        } else {
            throw precondition_error("unknown specialization: " + specialize);
        }
        return os.str();
    }

    CharSeries s = is_k3 ? k3n_series(max_n) : kumn_series(max_n);
    if (do_decompose) {
        json arr = json::array();
        for (int n = 0; n <= max_n; ++n) {
            // the n = 0, 1 coefficients are formal conventions, not modules
            if (n < 2) {
                if (out == "json")
                    arr.push_back(json{{"n", n}, {"formal_only", true}});
                else
                    os << n << ": formal-only\n";
                continue;
            }
            Decomposition d = decompose(s.c[n]);
            if (out == "json")
                arr.push_back(json{{"n", n}, {"decomposition", decomposition_to_json(d)}});
            else
                os << n << ": " << d.str() << '\n';
        }
        if (out == "json") {
            json j;
            j["schema"] = kSchemaVersion;
            j["family"] = family;
            j["coefficients"] = std::move(arr);
            os << j.dump(2) << '\n';
        }
    } else {
        if (out == "json") {
            json arr = json::array();
            for (int n = 0; n <= max_n; ++n)
                arr.push_back(json{{"n", n}, {"character", character_to_json(s.c[n])}});
            json j;
            j["schema"] = kSchemaVersion;
            j["family"] = family;
            j["coefficients"] = std::move(arr);
            os << j.dump(2) << '\n';
        } else {
            for (int n = 0; n <= max_n; ++n)
                os << n << ": dim=" << s.c[n].dimension()
                   << " support=" << s.c[n].support_size() << '\n';
        }
    }
    return os.str();
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact LLV decompositions of hyper-Kahler cohomology"};
    app.require_subcommand(1);

    std::string algebra_name, weight_str, out_fmt = "text";

    auto* cdim = app.add_subcommand("dim", "Weyl dimension of an irreducible module");
    cdim->add_option("--algebra", algebra_name)->required();
    cdim->add_option("--weight", weight_str)->required();

    auto* cchar = app.add_subcommand("character", "irreducible character of a dominant weight");
    cchar->add_option("--algebra", algebra_name)->required();
    cchar->add_option("--weight", weight_str)->required();
    cchar->add_option("--out", out_fmt)->check(CLI::IsMember({"text", "json"}));

    std::string input_path, dseries;
    int dn = 0;
    auto* cdec = app.add_subcommand("decompose", "decompose a character into irreducibles");
    cdec->add_option("--character", input_path, "character JSON file, or - for stdin");
    cdec->add_option("--series", dseries)->check(CLI::IsMember({"k3n", "kumn"}));
    cdec->add_option("--n", dn);
    cdec->add_option("--out", out_fmt)->check(CLI::IsMember({"text", "json"}));

    std::string family, specialize;
    int max_n = 2;
    bool do_decompose = false, force = false, no_cache = false;
    auto* cser = app.add_subcommand("series", "generating series of LLV characters");
    cser->add_option("family", family)->required()->check(CLI::IsMember({"k3n", "kumn"}));
    cser->add_option("--max-n", max_n)->required();
    cser->add_flag("--decompose", do_decompose);
    cser->add_option("--specialize", specialize)
        ->check(CLI::IsMember({"euler", "poincare", "hd"}));
    cser->add_option("--out", out_fmt)->check(CLI::IsMember({"text", "json"}));
    cser->add_flag("--force", force, "override the default series caps");
    cser->add_flag("--no-cache", no_cache);

    std::vector<std::string> weight_list;
    int hodge_n = 0;
    bool table_mode = false;
    auto* chod = app.add_subcommand("hodge", "Hodge diamond / Betti table of weights");
    chod->add_option("--algebra", algebra_name)->required();
    chod->add_option("--weights", weight_list, "dominant weights, repeatable")->required();
    chod->add_option("--n", hodge_n)->required();
    chod->add_flag("--table", table_mode, "Betti-table layout instead of the diamond");
    chod->add_option("--out", out_fmt)->check(CLI::IsMember({"text", "json"}));

    std::string solve_what, profile_path;
    auto* csol = app.add_subcommand("solve", "enumerate LLV candidates from numeric constraints");
    csol->add_option("what", solve_what)->required()->check(CLI::IsMember({"og10", "og6", "custom"}));
    csol->add_option("--profile", profile_path, "profile JSON for custom solves");
    csol->add_option("--out", out_fmt)->check(CLI::IsMember({"text", "json"}));

    std::string nagai_family;
    int nagai_n = 0, nu2 = 1;
    auto* cnag = app.add_subcommand("nagai", "Nagai verdict for a family decomposition");
    cnag->add_option("--family", nagai_family)
        ->required()
        ->check(CLI::IsMember({"k3n", "kumn", "og6", "og10"}));
    cnag->add_option("--n", nagai_n)->required();
    cnag->add_option("--nu2", nu2)->required()->check(CLI::Range(0, 2));
    cnag->add_option("--out", out_fmt)->check(CLI::IsMember({"text", "json"}));

    int oracle_b2 = 0;
    auto* corc = app.add_subcommand("oracle", "independent nilpotency oracle");
    std::string oracle_kind;
    corc->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"nilpotency"}));
    corc->add_option("--b2", oracle_b2)->required();
    corc->add_option("--nu2", nu2)->required()->check(CLI::Range(1, 2));
    corc->add_option("--weight", weight_str)->required();

    int bracket_b2 = 0;
    auto* cbrk = app.add_subcommand("bracket-check", "verify the so(b2+2) bracket identities");
    cbrk->add_option("--b2", bracket_b2)->required();

    std::vector<const char*> argv;
    argv.push_back("llv");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cdim->parsed()) {
            Algebra a = Algebra::parse(algebra_name);
            out << weyl_dim(a, parse_weight(weight_str, a.rank)) << '\n';
        } else if (cchar->parsed()) {
            Algebra a = Algebra::parse(algebra_name);
            Character c = irreducible_character(a, parse_weight(weight_str, a.rank));
            if (out_fmt == "json")
                out << character_to_json(c).dump(2) << '\n';
            else
                out << "dim=" << c.dimension() << " support=" << c.support_size() << '\n';
        } else if (cdec->parsed()) {
            Character c;
            if (!dseries.empty()) {
                c = (dseries == "k3n" ? k3n_series(dn) : kumn_series(dn)).c[dn];
            } else if (!input_path.empty()) {
                json j;
                if (input_path == "-") {
                    j = json::parse(std::cin);
                } else {
                    std::ifstream in(input_path);
                    if (!in) throw error("cannot open " + input_path);
                    j = json::parse(in);
                }
                c = character_from_json(j);
            } else {
                err << "usage error: decompose needs --character or --series\n";
                return 2;
            }
            Decomposition d = decompose(c);
            if (out_fmt == "json")
                out << decomposition_to_json(d).dump(2) << '\n';
            else
                out << d.str() << '\n';
        } else if (cser->parsed()) {
            int cap = family == "k3n" ? 10 : 6;
            if (max_n > cap && !force)
                throw precondition_error("series cap for " + family + " is " +
                                         std::to_string(cap) + "; pass --force to override");
            std::string key = std::string("series|") + family + "|" + std::to_string(max_n) +
                              "|" + (do_decompose ? "dec" : "raw") + "|" + specialize + "|" +
                              out_fmt + "|" + kEngineVersion + "|schema" +
                              std::to_string(kSchemaVersion);
            if (!no_cache)
                if (auto hit = cache_get(key)) {
                    out << *hit;
                    return 0;
                }
            std::string text =
                cli_detail::render_series(family, max_n, do_decompose, specialize, out_fmt);
            if (!no_cache) cache_put(key, text);
            out << text;
        } else if (chod->parsed()) {
            Algebra a = Algebra::parse(algebra_name);
            std::vector<std::pair<Weight, BettiVector>> rows;
            Character total(a);
            for (auto& ws : weight_list) {
                Weight w = parse_weight(ws, a.rank);
                Character c = irreducible_character(a, w);
                rows.emplace_back(w, betti(c, hodge_n));
                total = add(total, c);
            }
            if (table_mode) {
                if (out_fmt == "json") {
                    json arr = json::array();
                    for (auto& [w, bv] : rows)
                        arr.push_back(json{{"w", w.doubled()}, {"betti", betti_to_json(bv)}});
                    json j;
                    j["schema"] = kSchemaVersion;
                    j["rows"] = std::move(arr);
                    out << j.dump(2) << '\n';
                } else {
                    out << cli_detail::betti_table_text(rows, hodge_n);
                }
            } else {
                HodgeDiamond h = hodge_diamond(total, hodge_n);
                if (out_fmt == "json")
                    out << diamond_to_json(h).dump(2) << '\n';
                else
                    out << cli_detail::diamond_text(h);
            }
        } else if (csol->parsed()) {
            CandidateSet cs;
            if (solve_what == "og10")
                cs = solve_og10();
            else if (solve_what == "og6")
                cs = solve_og6();
            else {
                if (profile_path.empty()) {
                    err << "usage error: solve custom needs --profile\n";
                    return 2;
                }
                std::ifstream in(profile_path);
                if (!in) throw error("cannot open " + profile_path);
                HKProfile p = profile_from_json(json::parse(in));
                Algebra g = p.llv_algebra();
                Weight verb(g.rank);
                verb.d[0] = static_cast<int16_t>(2 * p.n);
                int64_t residual = std::max<int64_t>(1, p.euler - weyl_dim(g, verb));
                cs = solve_constraints(p, enumerate_weights(g, residual, true));
            }
            if (solve_what == "og6" && out_fmt == "text") {
                out << "candidates:\n";
                for (auto& c : cs.candidates) out << "  " << c.dec.str() << '\n';
                out << "selected: " << og6_disambiguate(cs).str() << '\n';
            } else if (out_fmt == "json") {
                out << candidate_set_to_json(cs).dump(2) << '\n';
            } else {
                for (auto& c : cs.candidates) out << c.dec.str() << '\n';
            }
        } else if (cnag->parsed()) {
            Decomposition d = cli_detail::family_decomposition(nagai_family, nagai_n);
            NagaiReport rep = nagai_verdict(d, nagai_n, nu2);
            if (out_fmt == "json") {
                json j;
                j["schema"] = kSchemaVersion;
                j["family"] = nagai_family;
                j["n"] = nagai_n;
                j["nu2"] = nu2;
                j["nu_even"] = rep.nu_even;
                j["ok"] = rep.ok;
                out << j.dump(2) << '\n';
            } else {
                out << "nu_{2k} for k=0.." << nagai_n << ":";
                for (int v : rep.nu_even) out << ' ' << v;
                out << "\nverdict: " << (rep.ok ? "true" : "false") << '\n';
            }
            if (!rep.ok) return 1;
        } else if (corc->parsed()) {
            int r = oracle_b2 / 2;
            Weight lam = parse_weight(weight_str, r);
            NilpotentOperator op = normal_form(oracle_b2, nu2);
            ModuleBlueprint bp = blueprint_from_weight(lam);
            int brute = induced_index(op, bp);
            int formula = index_formula(lam, nu2, oracle_b2);
            out << "induced=" << brute << " formula=" << formula
                << " match=" << (brute == formula ? "true" : "false") << '\n';
            if (brute != formula) return 1;
        } else if (cbrk->parsed()) {
            bool ok = mukai_bracket_check(bracket_b2);
            out << (ok ? "true" : "false") << '\n';
            if (!ok) return 1;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace llv
