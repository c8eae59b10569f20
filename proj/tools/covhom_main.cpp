// Command-line front end: define covers, run checks, emit reproducible
// JSON reports.  Exit codes: 0 = verified, 2 = inconclusive (sampling
// saturated below target), 1 = invalid input or internal contradiction.
#include "covhom/spancheck.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace covhom;

namespace {

Perm perm_from_json(const nlohmann::json& arr, int degree) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != degree)
        throw std::invalid_argument("permutation image list has the wrong length");
    std::vector<int> img;
    for (const auto& x : arr) img.push_back(x.get<int>() - 1);  // file lists are 1-based
    Perm p(std::move(img));
    if (!p.is_valid()) throw std::invalid_argument("image list is not a permutation");
    return p;
}

PermutationRep rep_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cover file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("type")) {
        std::string type = j["type"].get<std::string>();
        if (type == "mod_ell") return mod_ell_rep(j["genus"].get<int>(), j["ell"].get<int>());
        if (type == "abelian") {
            std::vector<int> moduli = j["moduli"].get<std::vector<int>>();
            int g = j["genus"].get<int>();
            std::vector<std::vector<int>> targets;
            for (int i = 1; i <= g; ++i)
                for (char c : {'a', 'b'}) {
                    std::string key = std::string(1, c) + std::to_string(i);
                    if (j["targets"].contains(key))
                        targets.push_back(j["targets"][key].get<std::vector<int>>());
                    else
                        targets.push_back(std::vector<int>(moduli.size(), 0));
                }
            return abelian_rep(g, moduli, targets);
        }
        throw std::invalid_argument("unknown cover type: " + type);
    }
    SurfaceType st{j["genus"].get<int>(), j.value("marked", 0)};
    int degree = j["degree"].get<int>();
    std::vector<Perm> perms;
    for (int i = 1; i <= st.genus; ++i)
        for (char c : {'a', 'b'}) {
            std::string key = std::string(1, c) + std::to_string(i);
            if (!j["perm"].contains(key))
                throw std::invalid_argument("cover file is missing perm for " + key);
            perms.push_back(perm_from_json(j["perm"][key], degree));
        }
    for (int k = 1; k <= st.marked; ++k) {
        std::string key = "z" + std::to_string(k);
        if (!j["perm"].contains(key))
            throw std::invalid_argument("cover file is missing perm for " + key);
        perms.push_back(perm_from_json(j["perm"][key], degree));
    }
    return rep_from_perms(st, degree, std::move(perms), "file:" + path);
}

// "d1,d2,...:a1=c1|c2|...;b1=..."  unlisted generators map to 0
PermutationRep rep_from_abelian_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad --abelian spec");
    std::vector<int> moduli;
    {
        std::istringstream ms(spec.substr(0, colon));
        std::string tok;
        while (std::getline(ms, tok, ',')) moduli.push_back(std::stoi(tok));
    }
    std::map<std::string, std::vector<int>> assign;
    int genus = 0;
    std::istringstream as(spec.substr(colon + 1));
    std::string item;
    while (std::getline(as, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad --abelian assignment: " + item);
        std::string gen = item.substr(0, eq);
        std::vector<int> elem;
        std::istringstream es(item.substr(eq + 1));
        std::string c;
        while (std::getline(es, c, '|')) elem.push_back(std::stoi(c));
        if (elem.size() != moduli.size())
            throw std::invalid_argument("--abelian element has wrong number of components");
        assign[gen] = elem;
        genus = std::max(genus, std::stoi(gen.substr(1)));
    }
    std::vector<std::vector<int>> targets;
    for (int i = 1; i <= genus; ++i)
        for (char c : {'a', 'b'}) {
            std::string key = std::string(1, c) + std::to_string(i);
            auto it = assign.find(key);
            targets.push_back(it != assign.end() ? it->second
                                                 : std::vector<int>(moduli.size(), 0));
        }
    return abelian_rep(genus, moduli, targets);
}

void write_report(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write: " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), out.c_str()) != 0)
        throw std::invalid_argument("cannot move report into place: " + out);
}

std::vector<TopType> parse_sigma(const std::string& sigma) {
    if (sigma == "pants") return {TopType::nonseparating(), TopType::separating(1)};
    return {TopType::parse(sigma)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology of finite branched covers of surfaces: builders and checkers"};
    app.require_subcommand(1);

    std::string cover_file, abelian_spec, sigma = "nonseparating", out;
    std::vector<int> mod_ell_args;
    bool forget_trivial_z = false;

    auto add_cover_flags = [&](CLI::App* cmd) {
        cmd->add_option("--cover", cover_file, "cover description file (JSON)");
        cmd->add_option("--mod-ell", mod_ell_args, "mod-ell cover: G L")->expected(2);
        cmd->add_option("--abelian", abelian_spec,
                        "abelian cover spec: d1,d2,..:a1=c1|c2;b1=..  (unlisted generators -> 0)");
        cmd->add_flag("--forget-trivial-z", forget_trivial_z,
                      "drop marked points whose monodromy is trivial");
    };
    auto make_rep = [&]() -> PermutationRep {
        int given = (!cover_file.empty()) + (!mod_ell_args.empty()) + (!abelian_spec.empty());
        if (given != 1)
            throw std::invalid_argument("specify exactly one of --cover, --mod-ell, --abelian");
        PermutationRep rep;
        if (!cover_file.empty())
            rep = rep_from_file(cover_file);
        else if (!mod_ell_args.empty())
            rep = mod_ell_rep(mod_ell_args[0], mod_ell_args[1]);
        else
            rep = rep_from_abelian_spec(abelian_spec);
        return forget_trivial_z ? rep.forget_trivial_marked() : rep;
    };

    CLI::App* build = app.add_subcommand("build", "build a cover and print its summary");
    add_cover_flags(build);
    build->add_option("--out", out, "write the summary here instead of stdout");

    CLI::App* check = app.add_subcommand("check", "run a verification and emit a report");
    std::string name;
    check->add_option("name", name, "fullness|symplectic|twistfixed|pants|gap|orbit|powerlemma")
        ->required();
    add_cover_flags(check);
    CheckConfig cfg;
    int g = 2, ell = 3, n = 2, trials = 1000, vectors = 50;
    bool cross_check = false;
    check->add_option("--sigma", sigma, "nonseparating|separating1|pants");
    check->add_option("--budget", cfg.budget, "sampled curves");
    check->add_option("--window", cfg.window, "saturation stability window");
    check->add_option("--walk-len", cfg.walk_len, "twists per sampled curve");
    check->add_option("--seed", cfg.seed, "rng seed (reports are reproducible per seed)");
    check->add_option("--g", g, "genus (gap check)");
    check->add_option("--ell", ell, "ell (gap / powerlemma checks)");
    check->add_option("--n", n, "rank of the nilpotent group (powerlemma)");
    check->add_option("--trials", trials, "powerlemma trials");
    check->add_option("--vectors", vectors, "vectors to test (orbit check)");
    check->add_flag("--cross-check", cross_check,
                    "gap: also verify the witness class against the sampled span on the cover");
    check->add_option("--out", out, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            CoverSession s = CoverSession::build(make_rep());
            Json j;
            j["schema"] = 1;
            j["cover"] = s.describe();
            write_report(j.dump(2) + "\n", out);
            return 0;
        }
        CheckReport rep;
        if (name == "gap") {
            std::optional<CoverSession> session;
            if (cross_check) session = CoverSession::build(mod_ell_rep(g, ell));
            rep = gap_check(g, ell, cfg, session ? &*session : nullptr);
        } else if (name == "powerlemma") {
            rep = powerlemma_check(n, ell, trials, cfg.seed);
        } else {
            CoverSession s = CoverSession::build(make_rep());
            std::vector<TopType> types = parse_sigma(sigma);
            if (name == "fullness")
                rep = rational_fullness(s, types, cfg);
            else if (name == "symplectic")
                rep = symplectic_check(s, types, cfg);
            else if (name == "twistfixed")
                rep = lemma_twistfixed_check(s, types, cfg);
            else if (name == "pants")
                rep = pants_span_check(s, standard_pants_g2(), cfg);
            else if (name == "orbit")
                rep = orbit_check(s, types, cfg, vectors);
            else
                throw std::invalid_argument("unknown check name: " + name);
        }
        write_report(rep.to_string(), out);
        return rep.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
