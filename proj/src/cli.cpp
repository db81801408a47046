#include "bsroots/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsroots/bsr.hpp"
#include "bsroots/nu.hpp"
#include "bsroots/parse.hpp"

namespace bsroots {

using json = nlohmann::ordered_json;

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::nu: return "nu";
        case Mode::roots: return "roots";
        case Mode::strength: return "strength";
        case Mode::bfunction: return "bfunction";
        case Mode::crosscheck: return "crosscheck";
    }
    return "?";
}

FrobeniusLift parse_lift(const std::vector<std::string>& entries, const std::vector<std::string>& variables,
                         const ChainRing& ring) {
    const std::size_t n = variables.size();
    if (entries.empty()) return FrobeniusLift::standard(ring, n);
    std::vector<Poly> h(n, Poly(ring, n));
    std::vector<bool> seen(n, false);
    for (const auto& entry : entries) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw ConfigError("lift entry '" + entry + "' is not of the form name:expr");
        std::string name = entry.substr(0, colon);
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        const auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end()) throw ConfigError("lift names unknown variable '" + name + "'");
        const auto i = static_cast<std::size_t>(it - variables.begin());
        if (seen[i]) throw ConfigError("lift given twice for '" + name + "'");
        seen[i] = true;
        h[i] = parse_poly(entry.substr(colon + 1), variables, ring);
    }
    return FrobeniusLift::from_h(std::move(h));
}

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

std::string join_roots(const std::vector<PAdicRational>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "}";
}

json tree_json(const ResidueTree& tree) {
    json levels = json::array();
    for (unsigned e = 0; e < tree.levels.size(); ++e)
        levels.push_back({{"level", e}, {"modulus", tree.modulus(e)}, {"survivors", tree.levels[e]}});
    return levels;
}

json report_json(const RootReport& report, bool with_strength) {
    json roots = json::array();
    for (const auto& r : report.roots) {
        json j{{"alpha", r.alpha.to_string()}, {"digits", digits(r.alpha, 8)}};
        if (with_strength) {
            j["strength"] = r.strength;
            j["stabilized"] = r.stabilized;
            j["strength_by_level"] = r.strength_by_level;
        }
        j["verified_to_level"] = r.verified_to_level;
        roots.push_back(std::move(j));
    }
    json unresolved = json::array();
    const std::uint64_t mod = report.tree.modulus(report.max_level);
    for (auto s : report.unresolved) unresolved.push_back({{"residue", s}, {"modulus", mod}});
    return json{{"roots", roots}, {"unresolved", unresolved}, {"residue_tree", tree_json(report.tree)}};
}

void print_report_text(const RootReport& report, bool with_strength, std::ostream& out) {
    for (unsigned e = 0; e < report.tree.levels.size(); ++e)
        out << "level " << e << " survivors mod " << report.tree.modulus(e) << ": " << report.tree.levels[e].size()
            << "\n";
    if (report.roots.empty()) out << "no roots found\n";
    for (const auto& r : report.roots) {
        out << "root " << r.alpha.to_string() << "  digits";
        for (auto d : digits(r.alpha, 8)) out << ' ' << d;
        if (with_strength) out << "  strength " << r.strength << (r.stabilized ? " (stabilized)" : " (not stabilized)");
        out << "  verified to level " << r.verified_to_level << "\n";
    }
    const std::uint64_t mod = report.tree.modulus(report.max_level);
    for (auto s : report.unresolved) out << "unresolved residue " << s << " mod " << mod << "\n";
}

void emit_error(const RunConfig& cfg, const std::string& kind, const std::string& message,
                std::optional<std::size_t> offset, std::ostream& out, std::ostream& err) {
    if (cfg.format == Format::structured) {
        json e{{"kind", kind}, {"message", message}};
        if (offset) e["offset"] = *offset;
        out << json{{"error", e}}.dump(2) << "\n";
    } else {
        err << "error: " << message << "\n";
    }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    std::optional<ChainRing> ring;
    std::optional<Poly> f;
    std::optional<FrobeniusLift> lift;
    ReconstructionBounds bounds;
    std::optional<PAdicRational> alpha;
    unsigned E = 0;
    try {
        if (!is_prime(cfg.p)) throw ConfigError("p = " + std::to_string(cfg.p) + " is not prime");
        if (cfg.variables.empty() || cfg.variables.size() > kMaxVars)
            throw ConfigError("between 1 and " + std::to_string(kMaxVars) + " variables are supported");
        if (std::set<std::string>(cfg.variables.begin(), cfg.variables.end()).size() != cfg.variables.size())
            throw ConfigError("repeated variable name");
        for (const auto& v : cfg.variables)
            if (!is_identifier(v)) throw ConfigError("invalid variable name '" + v + "'");
        if (cfg.poly.empty()) throw ConfigError("--poly is required");
        try {
            ring.emplace(cfg.p, cfg.m);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        f = parse_poly(cfg.poly, cfg.variables, *ring);
        lift = parse_lift(cfg.lift, cfg.variables, *ring);
        bounds = ReconstructionBounds::defaults(cfg.p);
        if (cfg.den_bound) bounds.den_bound = *cfg.den_bound;
        if (cfg.num_bound) bounds.num_bound = *cfg.num_bound;
        if (bounds.den_bound < 1 || bounds.num_bound < 0) throw ConfigError("reconstruction bounds must be positive");
        if (cfg.mode == Mode::strength) {
            if (!cfg.alpha) throw ConfigError("--alpha is required in strength mode");
            try {
                alpha = PAdicRational::parse(*cfg.alpha, cfg.p);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        if (cfg.max_level)
            E = *cfg.max_level;
        else if (cfg.mode == Mode::nu)
            E = 2;
        else if (cfg.mode == Mode::strength)
            E = 4;
        else
            E = default_max_level(*ring, bounds);
    } catch (const ParseError& e) {
        emit_error(cfg, "parse", e.what(), e.offset(), out, err);
        return kExitConfigError;
    } catch (const ConfigError& e) {
        emit_error(cfg, "config", e.what(), std::nullopt, out, err);
        return kExitConfigError;
    }

    const auto names = cfg.variables;
    json doc;
    doc["config"] = {{"p", cfg.p},
                     {"m", cfg.m},
                     {"variables", cfg.variables},
                     {"poly", f->to_string(names)},
                     {"lift", cfg.lift},
                     {"mode", mode_name(cfg.mode)},
                     {"max_level", E},
                     {"den_bound", bounds.den_bound},
                     {"num_bound", bounds.num_bound}};
    if (alpha) doc["config"]["alpha"] = alpha->to_string();

    int code = kExitOk;
    std::ostringstream text;
    try {
        switch (cfg.mode) {
            case Mode::nu: {
                json windows = json::array();
                for (unsigned e = 0; e <= E; ++e) {
                    const NuLevelSet s = nu_set(*f, *lift, e);
                    windows.push_back({{"level", e}, {"modulus", s.window}, {"members", s.members}});
                    text << "level " << e << " (mod " << s.window << "): " << join(s.members) << "\n";
                }
                doc["nu_windows"] = windows;
                break;
            }
            case Mode::roots:
            case Mode::bfunction: {
                const bool with_strength = cfg.mode == Mode::bfunction;
                const RootReport report =
                    with_strength ? bfunction_report(*f, *lift, E, bounds) : detect_roots(*f, *lift, E, bounds);
                const json body = report_json(report, with_strength);
                for (const auto& [k, v] : body.items()) doc[k] = v;
                if (with_strength) {
                    json strengths = json::array();
                    for (const auto& r : report.roots)
                        strengths.push_back({{"alpha", r.alpha.to_string()}, {"value", r.strength}});
                    doc["strengths"] = strengths;
                }
                print_report_text(report, with_strength, text);
                break;
            }
            case Mode::strength: {
                const StrengthResult s = strength(*f, *lift, *alpha, 0, E);
                doc["strengths"] = json::array({{{"alpha", alpha->to_string()},
                                                 {"value", s.value},
                                                 {"stabilized", s.stabilized},
                                                 {"per_level", s.per_level},
                                                 {"verified_to_level", E}}});
                text << "strength of " << alpha->to_string() << ": " << s.value
                     << (s.stabilized ? " (stabilized)" : " (not stabilized)") << "\n";
                text << "per level:";
                for (auto v : s.per_level) text << ' ' << v;
                text << "\n";
                break;
            }
            case Mode::crosscheck: {
                const CrosscheckResult r = crosscheck_mod_p(*f, *lift, E, bounds);
                doc["roots"] = report_json(r.full, false)["roots"];
                doc["unresolved"] = report_json(r.full, false)["unresolved"];
                doc["crosscheck"] = {{"reduced_roots", report_json(r.reduced, false)["roots"]},
                                     {"reduced_unresolved", report_json(r.reduced, false)["unresolved"]},
                                     {"negatives_match", r.negatives_match},
                                     {"positives_are_translates", r.positives_are_translates},
                                     {"classes_mod_z_match", r.classes_mod_z_match},
                                     {"mismatches", r.mismatches},
                                     {"ok", r.ok()}};
                text << "roots over Z/" << cfg.p << "^" << (cfg.m + 1) << ": " << join_roots(r.full.root_values()) << "\n";
                text << "roots of f mod " << cfg.p << ": " << join_roots(r.reduced.root_values()) << "\n";
                text << "negative roots agree: " << (r.negatives_match ? "yes" : "no") << "\n";
                text << "nonnegative roots are translates: " << (r.positives_are_translates ? "yes" : "no") << "\n";
                text << "classes mod Z agree: " << (r.classes_mod_z_match ? "yes" : "no") << "\n";
                for (const auto& msg : r.mismatches) text << "mismatch: " << msg << "\n";
                if (!r.ok()) code = kExitMismatch;
                break;
            }
        }
    } catch (const std::exception& e) {
        emit_error(cfg, "engine", e.what(), std::nullopt, out, err);
        return kExitEngineError;
    }

    if (cfg.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        doc["timing"] = {{"seconds", secs}};
        text << "time: " << secs << " s\n";
    }
    if (cfg.format == Format::structured)
        out << doc.dump(2) << "\n";
    else
        out << "f = " << f->to_string(names) << " over Z/" << cfg.p << "^" << (cfg.m + 1) << ", mode "
            << mode_name(cfg.mode) << ", max level " << E << "\n"
            << text.str();
    return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bernstein-Sato roots over Z/p^(m+1) via nu-invariants"};
    RunConfig cfg;
    std::string vars = "x,y";
    std::string mode = "roots";
    std::string format = "text";
    unsigned max_level = 0;
    std::int64_t den = 0, num = 0;
    std::string alpha;
    app.add_option("--p", cfg.p, "prime p")->required();
    app.add_option("--m", cfg.m, "coefficients are Z/p^(m+1)")->default_val(0);
    app.add_option("--vars", vars, "comma separated variable names")->default_val("x,y");
    app.add_option("--poly", cfg.poly, "the polynomial f")->required();
    app.add_option("--lift", cfg.lift, "name:expr, meaning F(name) = name^p + p*expr (repeatable)");
    app.add_option("--mode", mode, "nu | roots | strength | bfunction | crosscheck")
        ->check(CLI::IsMember({"nu", "roots", "strength", "bfunction", "crosscheck"}))
        ->default_val("roots");
    auto* level_opt = app.add_option("--max-level", max_level, "deepest level E");
    auto* den_opt = app.add_option("--den-bound", den, "reconstruction denominator bound");
    auto* num_opt = app.add_option("--num-bound", num, "reconstruction numerator bound");
    auto* alpha_opt = app.add_option("--alpha", alpha, "p-adic rational a/b (strength mode)");
    app.add_option("--format", format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->default_val("text");
    app.add_flag("--timing", cfg.timing, "include wall-clock time in the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    cfg.variables.clear();
    std::stringstream ss(vars);
    for (std::string v; std::getline(ss, v, ',');) {
        v.erase(0, v.find_first_not_of(' '));
        v.erase(v.find_last_not_of(' ') + 1);
        cfg.variables.push_back(v);
    }
    for (auto [name, value] : {std::pair{"nu", Mode::nu}, {"roots", Mode::roots}, {"strength", Mode::strength},
                               {"bfunction", Mode::bfunction}, {"crosscheck", Mode::crosscheck}})
        if (mode == name) cfg.mode = value;
    cfg.format = format == "structured" ? Format::structured : Format::text;
    if (*level_opt) cfg.max_level = max_level;
    if (*den_opt) cfg.den_bound = den;
    if (*num_opt) cfg.num_bound = num;
    if (*alpha_opt) cfg.alpha = alpha;
    return run(cfg, out, err);
}

}  // namespace bsroots
