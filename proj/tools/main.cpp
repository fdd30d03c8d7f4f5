#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qca/cartan.hpp"
#include "qca/error.hpp"
#include "qca/io.hpp"
#include "qca/pointed.hpp"
#include "qca/seed.hpp"
#include "qca/triangular.hpp"
#include "qca/tropical.hpp"

namespace {

using nlohmann::json;
using namespace qca;

const std::vector<std::pair<const char*, const char*>> kConventions = {
    {"product", "X^m * X^n = v^Lambda(m,n) X^(m+n), v = q^(1/2)"},
    {"order", "terms print in ascending lexicographic exponent order"},
    {"words", "mutation words apply their leftmost letter first"},
    {"B", "one row per vertex, one column per unfrozen vertex; positive "
          "b[i][k] puts X_i into the first exchange monomial at k"},
    {"tropical", "g'[k] = -g[k]; for i != k, g'[i] = g[i] + max(b[i][k],0)*g[k] "
                 "if g[k] >= 0, else g[i] + max(-b[i][k],0)*g[k]"},
};

struct Printer {
    bool as_json = false;
    json j;
    std::ostringstream text;

    explicit Printer(const std::string& fmt, const std::string& command)
        : as_json(fmt == "json") {
        if (as_json) {
            j["command"] = command;
            for (const auto& [k, v] : kConventions) j["conventions"][k] = v;
        } else {
            for (const auto& [k, v] : kConventions)
                text << "# " << k << ": " << v << "\n";
        }
    }

    void flush() {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

json degree_json(const ExpVec& g) { return json(g); }

void print_seed(Printer& out, const Seed& t, bool with_vars) {
    if (out.as_json) {
        out.j["seed"] = seed_to_json(t);
        if (with_vars) {
            json vars = json::object();
            for (int i = 0; i < t.nvert(); ++i)
                vars[t.names[i]] = element_to_json(t.vars[i]);
            out.j["variables"] = vars;
        }
        return;
    }
    out.text << "vertices:";
    for (int i = 0; i < t.nvert(); ++i) {
        out.text << " " << t.names[i];
        if (!t.is_unfrozen(i)) out.text << "(frozen)";
    }
    out.text << "\nB: " << t.b.str() << "\nLambda: " << t.lambda.str() << "\n";
    if (with_vars)
        for (int i = 0; i < t.nvert(); ++i)
            out.text << "X_" << t.names[i] << " = " << t.vars[i].str() << "\n";
}

int cmd_from_word(const std::string& fmt, const std::string& cartan,
                  const std::string& wordcsv, const std::string& outpath) {
    CartanData c = cartan_named(cartan);
    std::vector<int> letters;
    for (long long x : parse_vec(wordcsv)) letters.push_back((int)x);
    Seed t = seed_from_word(c, letters);

    Printer out(fmt, "from-word");
    json sj = seed_to_json(t);
    if (!outpath.empty()) {
        std::ofstream f(outpath);
        if (!f) throw InputError("cannot write " + outpath);
        f << sj.dump(2) << "\n";
    }
    if (out.as_json) {
        out.j["seed"] = sj;
        auto d = validate(t);
        out.j["d"] = d;
    } else {
        out.text << sj.dump(2) << "\n";
        out.text << "# compatible, d = " << vec_str(validate(t)) << "\n";
        if (!outpath.empty()) out.text << "# written to " << outpath << "\n";
    }
    out.flush();
    return 0;
}

int cmd_mutate(const std::string& fmt, const std::string& seedpath,
               const std::string& wordcsv) {
    Seed t = load_seed_file(seedpath);
    std::vector<int> word = parse_word(t, wordcsv);
    Seed s = apply_sequence(t, word);
    validate(s);
    Printer out(fmt, "mutate");
    print_seed(out, s, true);
    out.flush();
    return 0;
}

int cmd_expand(const std::string& fmt, const std::string& seedpath,
               const std::string& wordcsv, const std::string& expcsv) {
    Seed t = load_seed_file(seedpath);
    Seed s = wordcsv.empty() ? t : apply_sequence(t, parse_word(t, wordcsv));
    Printer out(fmt, "expand");
    if (expcsv.empty()) {
        print_seed(out, s, true);
    } else {
        ExpVec m = parse_vec(expcsv, t.nvert());
        TorusElement z = cluster_monomial(s, m);
        PointedElement p = as_pointed(z);
        if (out.as_json) {
            out.j["exponent"] = m;
            out.j["element"] = element_to_json(z);
            out.j["degree"] = degree_json(p.degree);
        } else {
            out.text << "X^" << vec_str(m) << " = " << z.str() << "\n";
            out.text << "degree: " << vec_str(p.degree) << "\n";
        }
    }
    out.flush();
    return 0;
}

int cmd_degree(const std::string& fmt, const std::string& seedpath,
               const std::string& wordcsv) {
    Seed t = load_seed_file(seedpath);
    Seed s = wordcsv.empty() ? t : apply_sequence(t, parse_word(t, wordcsv));
    SignCoherenceReport rep = check_sign_coherence(s);
    Printer out(fmt, "degree");
    if (out.as_json) {
        json degs = json::object();
        for (int c = 0; c < s.nuf(); ++c) {
            int u = s.unfrozen[c];
            degs[s.names[u]] = degree_json(as_pointed(s.vars[u]).degree);
        }
        out.j["degrees"] = degs;
        out.j["sign_coherent"] = rep.ok;
        if (!rep.ok) out.j["witness"] = rep.detail;
    } else {
        for (int c = 0; c < s.nuf(); ++c) {
            int u = s.unfrozen[c];
            out.text << "deg X_" << s.names[u] << " = "
                     << vec_str(as_pointed(s.vars[u]).degree) << "\n";
        }
        out.text << "sign coherence: " << (rep.ok ? "ok" : rep.detail) << "\n";
    }
    out.flush();
    return rep.ok ? 0 : 1;
}

int cmd_tropical(const std::string& fmt, const std::string& seedpath,
                 const std::string& wordcsv, const std::string& gcsv) {
    Seed t = load_seed_file(seedpath);
    std::vector<int> word = parse_word(t, wordcsv);
    ExpVec g = parse_vec(gcsv, t.nvert());
    ExpVec out_g = phi_path(t, word, g);
    Printer out(fmt, "tropical");
    if (out.as_json) {
        out.j["input"] = degree_json(g);
        out.j["transported"] = degree_json(out_g);
    } else {
        out.text << vec_str(g) << " -> " << vec_str(out_g) << "\n";
    }
    out.flush();
    return 0;
}

int cmd_tribasis(const std::string& fmt, const std::string& seedpath,
                 long long window, long long trunc, int depth) {
    Seed t = load_seed_file(seedpath);
    auto reach = find_t1(t, depth);
    if (!reach)
        throw InputError("no companion chart within depth " +
                         std::to_string(depth));
    TriFamily fam = build_family(t, *reach, box_window(t.nvert(), window), trunc);

    Printer out(fmt, "tribasis");
    if (out.as_json) {
        std::vector<std::string> wnames;
        for (int k : reach->word) wnames.push_back(t.names[k]);
        out.j["t1_word"] = wnames;
        out.j["order"] = trunc;
        out.j["members"] = json::array();
        for (const auto& [g, tf] : fam.fns) {
            json m;
            m["degree"] = degree_json(g);
            m["exact"] = tf.exact;
            m["element"] = element_to_json(tf.f.elem);
            m["corrections"] = json::array();
            for (const auto& [nn, c] : tf.corrections) {
                json cc;
                cc["n"] = nn;
                cc["c"] = qcoeff_to_json(c);
                m["corrections"].push_back(cc);
            }
            out.j["members"].push_back(m);
        }
    } else {
        out.text << "t1 word:";
        for (int k : reach->word) out.text << " " << t.names[k];
        out.text << "\n";
        for (const auto& [g, tf] : fam.fns) {
            out.text << "f" << vec_str(g)
                     << (tf.exact ? " (exact)"
                                  : " (truncated at " + std::to_string(trunc) + ")")
                     << " = " << tf.f.elem.str() << "\n";
            for (const auto& [nn, c] : tf.corrections)
                out.text << "  correction n=" << vec_str(nn) << ": " << c.str()
                         << "\n";
        }
    }
    out.flush();
    return 0;
}

int cmd_check(const std::string& fmt, const std::string& seedpath,
              long long window, long long trunc, int depth, int dmax) {
    Seed t = load_seed_file(seedpath);
    Printer out(fmt, "check");
    int failures = 0;
    json checks = json::array();

    auto record = [&](const std::string& name, bool ok,
                      const std::string& detail) {
        if (!ok) ++failures;
        if (out.as_json) {
            json c;
            c["name"] = name;
            c["ok"] = ok;
            if (!detail.empty()) c["detail"] = detail;
            checks.push_back(c);
        } else {
            out.text << "check " << name << ": " << (ok ? "PASS" : "FAIL");
            if (!ok && !detail.empty()) out.text << " (" << detail << ")";
            out.text << "\n";
        }
    };

    try {
        auto d = validate(t);
        record("compatible pair, d = " + vec_str(d), true, "");
    } catch (const SeedError& e) {
        record("compatible pair", false, e.what());
        if (out.as_json) out.j["checks"] = checks;
        out.flush();
        return 1;
    }

    for (int k : t.unfrozen) {
        Seed back = mutate(mutate(t, k), k);
        record("mutation at " + t.names[k] + " is involutive",
               same_seed_content(back, t), "");
        SignCoherenceReport sc = check_sign_coherence(mutate(t, k));
        record("sign coherence after mutation at " + t.names[k], sc.ok,
               sc.detail);
    }

    auto reach = find_t1(t, depth);
    record("companion chart found", reach.has_value(), "");
    if (reach) {
        TriFamily fam =
            build_family(t, *reach, box_window(t.nvert(), window), trunc);
        CheckReport ax = verify_triangular_basis(t, fam);
        record("triangular axioms (" + std::to_string(ax.checked) + " checks, " +
                   std::to_string(ax.skipped) + " skipped)",
               ax.ok, ax.detail);
        for (int k : t.unfrozen) {
            CheckReport ad = verify_admissible(t, fam, k, dmax, depth);
            record("admissibility at " + t.names[k] + " (" +
                       std::to_string(ad.checked) + " checks)",
                   ad.ok, ad.detail);
            CheckReport cp = verify_compatibility(t, fam, k, trunc, depth);
            record("chart compatibility at " + t.names[k] + " (" +
                       std::to_string(cp.checked) + " checks)",
                   cp.ok, cp.detail);
        }
    }

    for (int k : t.unfrozen) {
        Seed tp = mutate(t, k);
        bool ok = true;
        std::string detail;
        for (const ExpVec& g : box_window(t.nvert(), window)) {
            ExpVec gg = phi_step(tp, k, phi_step(t, k, g));
            if (gg != g) {
                ok = false;
                detail = "phi not involutive at " + vec_str(g);
                break;
            }
        }
        record("tropical involution at " + t.names[k], ok, detail);
    }

    if (out.as_json) {
        out.j["checks"] = checks;
        out.j["failures"] = failures;
    } else {
        out.text << (failures ? "FAILED" : "OK") << " (" << failures
                 << " failing checks)\n";
    }
    out.flush();
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum cluster algebra kernel"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string seedpath, wordcsv, expcsv, gcsv, cartan, outpath;
    long long window = 2, trunc = 4;
    int depth = 8, dmax = 3;

    CLI::App* c_mutate = app.add_subcommand("mutate", "apply a mutation word");
    c_mutate->add_option("--seed", seedpath, "seed JSON file")->required();
    c_mutate->add_option("--word", wordcsv, "comma-separated vertex names")
        ->required();

    CLI::App* c_expand =
        app.add_subcommand("expand", "expand a cluster monomial");
    c_expand->add_option("--seed", seedpath)->required();
    c_expand->add_option("--word", wordcsv, "mutation word to the chart");
    c_expand->add_option("--exp", expcsv, "exponent vector over the vertices");

    CLI::App* c_degree =
        app.add_subcommand("degree", "pointed degrees and sign coherence");
    c_degree->add_option("--seed", seedpath)->required();
    c_degree->add_option("--word", wordcsv);

    CLI::App* c_tropical =
        app.add_subcommand("tropical", "transport a degree along a word");
    c_tropical->add_option("--seed", seedpath)->required();
    c_tropical->add_option("--word", wordcsv)->required();
    c_tropical->add_option("--g", gcsv, "degree vector")->required();

    CLI::App* c_tribasis =
        app.add_subcommand("tribasis", "triangular family over a degree box");
    c_tribasis->add_option("--seed", seedpath)->required();
    c_tribasis->add_option("--window", window, "box radius");
    c_tribasis->add_option("--trunc", trunc, "truncation order");
    c_tribasis->add_option("--depth", depth, "companion chart search depth");

    CLI::App* c_check = app.add_subcommand("check", "verification battery");
    c_check->add_option("--seed", seedpath)->required();
    c_check->add_option("--window", window);
    c_check->add_option("--trunc", trunc);
    c_check->add_option("--depth", depth);
    c_check->add_option("--dmax", dmax, "highest checked power");

    CLI::App* c_fromword =
        app.add_subcommand("from-word", "seed from a reduced word");
    c_fromword->add_option("--cartan", cartan, "A1,A2,A3,B2,C2,G2")->required();
    c_fromword->add_option("--word", wordcsv, "comma-separated 1-based letters")
        ->required();
    c_fromword->add_option("--out", outpath, "write the seed JSON here");

    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_mutate))
            return cmd_mutate(format, seedpath, wordcsv);
        if (app.got_subcommand(c_expand))
            return cmd_expand(format, seedpath, wordcsv, expcsv);
        if (app.got_subcommand(c_degree))
            return cmd_degree(format, seedpath, wordcsv);
        if (app.got_subcommand(c_tropical))
            return cmd_tropical(format, seedpath, wordcsv, gcsv);
        if (app.got_subcommand(c_tribasis))
            return cmd_tribasis(format, seedpath, window, trunc, depth);
        if (app.got_subcommand(c_check))
            return cmd_check(format, seedpath, window, trunc, depth, dmax);
        if (app.got_subcommand(c_fromword))
            return cmd_from_word(format, cartan, wordcsv, outpath);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
