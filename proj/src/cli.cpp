#include "superquiver/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "superquiver/errors.hpp"
#include "superquiver/gabriel.hpp"
#include "superquiver/pathalg.hpp"
#include "superquiver/serialize.hpp"

namespace superquiver {

namespace {

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw PreconditionError("not a number: '" + item + "'");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

struct Config {
    std::size_t n = 2;
    std::size_t m = 2;
    std::string orient;
    bool orient_set = false;
    std::string simple;
    std::string format;
    bool ascii = false;
};

void add_common(CLI::App* sub, Config& cfg) {
    sub->add_option("--n", cfg.n, "size of the epsilon block")->check(CLI::PositiveNumber);
    sub->add_option("--m", cfg.m, "size of the delta block")->check(CLI::PositiveNumber);
    sub->add_option("--orient", cfg.orient, "orientation, one '<' or '>' per edge (default all '<')");
    sub->add_option("--simple", cfg.simple, "simple system: default | st:S/T[/-] | refl:i,j,...");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_flag("--ascii", cfg.ascii, "ASCII rendering ((x) for odd vertices)");
}

Orientation orientation_of(const Config& cfg, std::size_t vertices) {
    if (cfg.orient.empty() && !cfg.orient_set) return Orientation(vertices);
    Orientation o = Orientation::parse(cfg.orient);
    if (o.vertex_count() != vertices) {
        throw PreconditionError("--orient needs " + std::to_string(vertices - 1) + " characters, got " +
                                std::to_string(cfg.orient.size()));
    }
    return o;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_roots(const Config& cfg, std::ostream& out) {
    const SuperRootSystem rs(cfg.n, cfg.m);
    const auto roots = all_roots(rs);
    const auto odd = std::count_if(roots.begin(), roots.end(), [](const SuperRoot& r) { return is_odd(r.parity()); });
    if (cfg.format == "text") {
        for (const auto& r : roots) out << r.name(cfg.ascii) << ' ' << to_int(r.parity()) << '\n';
        return exit_ok;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : roots) list.push_back(to_json(r));
    print_json(out, {{"n", cfg.n},
                     {"m", cfg.m},
                     {"total", roots.size()},
                     {"even", roots.size() - static_cast<std::size_t>(odd)},
                     {"odd", odd},
                     {"roots", list}});
    return exit_ok;
}

int cmd_reflect(const Config& cfg, std::size_t at, std::ostream& out) {
    const SuperRootSystem rs(cfg.n, cfg.m);
    const SimpleSystem pi = parse_simple_system(rs, cfg.simple);
    if (at < 1 || at > pi.size()) throw PreconditionError("--at must lie in 1.." + std::to_string(pi.size()));
    const SimpleSystem after = pi.reflect(at - 1);
    const ColouredQuiver q = coloured_quiver(pi, orientation_of(cfg, pi.size()));
    const bool movable = q.orientation().is_sink(at - 1) || q.orientation().is_source(at - 1);
    if (cfg.format == "text") {
        out << "simple system: " << pi.to_string(cfg.ascii) << '\n';
        out << "reflected:     " << after.to_string(cfg.ascii) << '\n';
        out << "quiver:        " << q.to_string(cfg.ascii) << '\n';
        if (movable) out << "reflected:     " << reflect_quiver(q, at - 1).to_string(cfg.ascii) << '\n';
        return exit_ok;
    }
    if (cfg.format == "dot") {
        if (!movable) throw PreconditionError("vertex " + std::to_string(at) + " is neither a sink nor a source");
        out << quiver_to_dot(reflect_quiver(q, at - 1));
        return exit_ok;
    }
    nlohmann::json j = {{"vertex", at},
                        {"parity", to_int(pi[at - 1].parity())},
                        {"before", to_json(pi)},
                        {"after", to_json(after)},
                        {"quiver", to_json(q)}};
    j["reflected_quiver"] = movable ? to_json(reflect_quiver(q, at - 1)) : nlohmann::json(nullptr);
    print_json(out, j);
    return exit_ok;
}

int cmd_construct(const Config& cfg, const std::string& root, std::ostream& out) {
    const SuperRootSystem rs(cfg.n, cfg.m);
    const SimpleSystem pi = parse_simple_system(rs, cfg.simple);
    const Orientation omega = orientation_of(cfg, pi.size());
    std::vector<RootObject> objects;
    if (root == "all") {
        objects = build_root_table(pi, omega);
    } else {
        objects.push_back(build_X_alpha(pi, omega, SuperRoot::parse(rs, root)));
    }
    if (cfg.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& o : objects) {
            list.push_back({{"root", o.root.name(true)},
                            {"parity", to_int(parity_value(o.object))},
                            {"word_prefix", o.prefix.to_string()},
                            {"seed_vertex", o.seed_vertex + 1},
                            {"seed_parity", to_int(o.seed_parity)},
                            {"object", to_json(o.object)}});
        }
        print_json(out, root == "all" ? list : list.front());
        return exit_ok;
    }
    for (const auto& o : objects) {
        if (root == "all") out << o.root.name(cfg.ascii) << ": ";
        out << render(o.object, cfg.ascii) << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Config& cfg, bool sweep, bool fault, std::size_t systems, std::ostream& out) {
    const SuperRootSystem rs(cfg.n, cfg.m);
    std::vector<SimpleSystem> pis;
    std::vector<Orientation> omegas;
    if (sweep) {
        pis = sample_simple_systems(rs, systems);
        omegas = Orientation::all(rs.rank());
    } else {
        pis.push_back(parse_simple_system(rs, cfg.simple));
        omegas.push_back(orientation_of(cfg, rs.rank()));
    }
    const BuildOptions options{fault};
    std::size_t failures = 0;
    std::size_t cases = 0;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& pi : pis) {
        for (const auto& omega : omegas) {
            ++cases;
            const auto main = verify_main_theorem(pi, omega, options);
            const auto groth = grothendieck_check(pi, omega);
            build_ar_quiver(pi, omega);
            const bool ok = main.passed() && groth.passed();
            if (!ok) ++failures;
            if (!sweep || !ok || cfg.format == "json") {
                nlohmann::json entry = {{"simple_system", pi.to_string(true)},
                                        {"orientation", omega.to_string()},
                                        {"passed", ok},
                                        {"grothendieck", to_json(groth)}};
                if (!sweep || !ok) entry["main_theorem"] = to_json(main);
                reports.push_back(std::move(entry));
            }
        }
    }
    if (cfg.format == "text") {
        out << "cases: " << cases << "\nfailures: " << failures << '\n';
        for (const auto& r : reports)
            if (!r["passed"].get<bool>()) out << "FAIL " << r["simple_system"].get<std::string>() << " / "
                                              << r["orientation"].get<std::string>() << '\n';
    } else {
        print_json(out, {{"n", cfg.n}, {"m", cfg.m}, {"cases", cases}, {"failures", failures}, {"reports", reports}});
    }
    return failures == 0 ? exit_ok : exit_verification_failed;
}

int cmd_ar(const Config& cfg, std::ostream& out) {
    const SuperRootSystem rs(cfg.n, cfg.m);
    const SimpleSystem pi = parse_simple_system(rs, cfg.simple);
    const ARQuiver ar = build_ar_quiver(pi, orientation_of(cfg, pi.size()));
    if (cfg.format == "json") {
        print_json(out, to_json(ar));
    } else if (cfg.format == "text") {
        for (const auto& v : ar.vertices) {
            out << v.vertex + 1 << ' ' << v.level << ' ' << ar.labels.at(v).name(cfg.ascii) << ' '
                << to_int(ar.colours.at(v)) << '\n';
        }
    } else {
        out << emit_dot(ar, cfg.ascii);
    }
    return exit_ok;
}

int cmd_pathalg(const Config& cfg, const std::string& type, const std::string& colours, std::ostream& out) {
    std::vector<Parity> ps;
    Orientation o;
    if (!type.empty()) {
        if (type.size() < 2 || (type[0] != 'A' && type[0] != 'a')) throw PreconditionError("--type must look like A3");
        const auto k = parse_list(type.substr(1));
        if (k.size() != 1 || k[0] < 1) throw PreconditionError("--type must look like A3");
        o = orientation_of(cfg, k[0]);
        ps.assign(k[0], Parity::even);
    } else {
        const SuperRootSystem rs(cfg.n, cfg.m);
        const SimpleSystem pi = parse_simple_system(rs, cfg.simple);
        o = orientation_of(cfg, pi.size());
        ps = pi.colours();
    }
    if (!colours.empty()) {
        const ColouredQuiver parsed = ColouredQuiver::parse(colours, o.to_string());
        ps = parsed.colours();
    }
    const DoubleQuiver dq(ColouredQuiver(ps, o));
    const PreprojectiveDims dims = preprojective_dims(dq);
    if (cfg.format == "text") {
        for (std::size_t k = 0; k < dims.by_length.size(); ++k) {
            out << k << ' ' << dims.by_length[k].even << ' ' << dims.by_length[k].odd << '\n';
        }
        out << "total " << dims.total() << '\n';
    } else {
        nlohmann::json j = to_json(dims);
        j["quiver"] = to_json(dq.base());
        print_json(out, j);
    }
    return dims.vanished ? exit_ok : exit_verification_failed;
}

}  // namespace

SimpleSystem parse_simple_system(const SuperRootSystem& rs, const std::string& text) {
    if (text.empty() || text == "default") return SimpleSystem::distinguished(rs);
    if (text.rfind("st:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(text.substr(3));
        std::string part;
        while (std::getline(ss, part, '/')) parts.push_back(part);
        if (parts.size() < 2 || parts.size() > 3 || (parts.size() == 3 && parts[2] != "-" && parts[2] != "+")) {
            throw PreconditionError("--simple st: expects S/T or S/T/-");
        }
        return SimpleSystem::from_st(rs, parse_list(parts[0]), parse_list(parts[1]),
                                     parts.size() == 3 && parts[2] == "-");
    }
    if (text.rfind("refl:", 0) == 0) {
        std::vector<std::size_t> vertices;
        for (std::size_t v : parse_list(text.substr(5))) {
            if (v < 1) throw PreconditionError("--simple refl: vertices are 1-based");
            vertices.push_back(v - 1);
        }
        return reflect_sequence(SimpleSystem::distinguished(rs), vertices);
    }
    throw PreconditionError("unrecognised --simple value '" + text + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Super-representations of coloured quivers and the root system A(n,m)", "superquiver"};
    app.require_subcommand(1);
    Config cfg;

    auto* roots = app.add_subcommand("roots", "list the roots of A(n,m) with parities");
    add_common(roots, cfg);

    std::size_t at = 0;
    auto* reflect = app.add_subcommand("reflect", "apply an odd/even reflection to a simple system");
    add_common(reflect, cfg);
    reflect->add_option("--at", at, "vertex (1-based)")->required();

    std::string root;
    auto* construct = app.add_subcommand("construct", "build X_alpha for a positive root");
    add_common(construct, cfg);
    construct->add_option("--root", root, "root such as e1-d2, or 'all'")->required();

    bool sweep = false;
    bool fault = false;
    std::size_t systems = 6;
    auto* verify = app.add_subcommand("verify", "check every X_alpha against its root");
    add_common(verify, cfg);
    verify->add_flag("--sweep", sweep, "all orientations and several simple systems");
    verify->add_option("--systems", systems, "number of simple systems in a sweep");
    verify->add_flag("--inject-fault", fault, "seed with the wrong parity")->group("");

    auto* ar = app.add_subcommand("ar", "periodic Auslander-Reiten quiver labelled by roots");
    add_common(ar, cfg);

    std::string type;
    std::string colours;
    auto* pathalg = app.add_subcommand("pathalg", "graded dimensions of the preprojective algebra");
    add_common(pathalg, cfg);
    pathalg->add_option("--type", type, "Dynkin type such as A3 (overrides --n/--m)");
    pathalg->add_option("--colours", colours, "vertex colours, 'o' even and 'x' odd");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (roots->parsed()) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_roots(cfg, out);
        }
        if (reflect->parsed()) {
            cfg.orient_set = reflect->count("--orient") > 0;
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_reflect(cfg, at, out);
        }
        if (construct->parsed()) {
            cfg.orient_set = construct->count("--orient") > 0;
            if (cfg.format.empty()) cfg.format = "text";
            return cmd_construct(cfg, root, out);
        }
        if (verify->parsed()) {
            cfg.orient_set = verify->count("--orient") > 0;
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_verify(cfg, sweep, fault, systems, out);
        }
        if (ar->parsed()) {
            cfg.orient_set = ar->count("--orient") > 0;
            if (cfg.format.empty()) cfg.format = "dot";
            return cmd_ar(cfg, out);
        }
        if (pathalg->parsed()) {
            cfg.orient_set = pathalg->count("--orient") > 0;
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_pathalg(cfg, type, colours, out);
        }
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    err << app.help();
    return exit_usage;
}

}  // namespace superquiver
