#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zadual/arthur.hpp"
#include "zadual/duality.hpp"
#include "zadual/jantzen.hpp"
#include "zadual/parse.hpp"
#include "zadual/verify.hpp"

namespace {

using namespace zadual;

constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct Input {
    RhoTable table;
    GroupKind group = GroupKind::SpEven;
    std::vector<std::string> expressions;
};

Input read_input(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw ValidationError("cannot open input file '" + path + "'");
        in = &file;
    }
    Input input;
    bool group_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(begin, end - begin + 1);
        try {
            if (parse_header_line(trimmed, input.table, input.group, group_seen)) continue;
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
        }
        input.expressions.push_back(trimmed);
    }
    if (!group_seen) throw ValidationError("missing 'group Sp|SO' declaration");
    if (input.expressions.empty()) throw ValidationError("no expression to process");
    return input;
}

LanglandsDatum parse_expr(const Input& in, const std::string& text, bool json) {
    return json ? parse_rep_json(text, in.table) : parse_rep(text, in.table, in.group);
}

// Point argument "rho:x", ":x" or "x"; x an integer or n/2.
Point parse_point(const std::string& spec, const RhoTable& table) {
    auto colon = spec.rfind(':');
    std::string rho_part = colon == std::string::npos ? "" : spec.substr(0, colon);
    std::string x_part = colon == std::string::npos ? spec : spec.substr(colon + 1);
    const Rho& rho = rho_part.empty() ? table.default_rho() : table.rho(rho_part);
    HalfInt x;
    size_t slash = x_part.find('/');
    try {
        if (slash != std::string::npos) {
            if (x_part.substr(slash) != "/2") throw std::invalid_argument("denominator");
            x = HalfInt(std::stoi(x_part.substr(0, slash)));
        } else {
            x = HalfInt::whole(std::stoi(x_part));
        }
    } catch (const std::exception&) {
        throw ValidationError("bad point '" + spec + "' (want rho:x with x = n or n/2)");
    }
    return Point{rho, x};
}

void print_trace(const DualTrace& trace, const RhoTable& table, std::ostream& out) {
    for (const auto& s : trace.steps) {
        out << "  [" << s.factor << "] " << step_name(s);
        if (!s.rho_id.empty()) out << " on " << s.rho_id;
        out << ": " << format_rep(s.before, table) << " -> " << format_rep(s.after, table)
            << "\n";
    }
}

nlohmann::json trace_json(const DualTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"factor", s.factor},
                         {"step", step_name(s)},
                         {"rho", s.rho_id},
                         {"k", s.k},
                         {"before", nlohmann::json::parse(format_rep_json(s.before))},
                         {"after", nlohmann::json::parse(format_rep_json(s.after))}});
    return steps;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zelevinsky-Aubert duals of symplectic/odd-orthogonal Langlands data"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input_path;
    bool json = false, trace = false;
    std::string at_spec;
    int socle_k = 1;
    app.add_option("--input", input_path, "input file (default: stdin)")->capture_default_str();
    app.add_flag("--json", json, "JSON expressions and output");
    app.add_flag("--trace", trace, "print the derivative/socle step table");

    auto* cmd_dual = app.add_subcommand("dual", "Zelevinsky-Aubert dual");
    auto* cmd_derive = app.add_subcommand("derive", "highest derivative at a point");
    cmd_derive->add_option("--at", at_spec, "point rho:x; x may be d01 or z01")->required();
    auto* cmd_socle = app.add_subcommand("socle", "k-fold socle at a point");
    cmd_socle->add_option("--at", at_spec, "point rho:x; x may be z01")->required();
    cmd_socle->add_option("--k", socle_k, "socle order")->capture_default_str();
    auto* cmd_irred = app.add_subcommand("irred", "irreducibility of rho|.|^x x pi");
    cmd_irred->add_option("--at", at_spec, "point rho:x with x > 0")->required();
    auto* cmd_split = app.add_subcommand("split", "Jantzen factorization");
    auto* cmd_rank = app.add_subcommand("rank", "rank of the underlying group");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the verification harness");
    std::string st_group = "Sp", st_lines = "good-int";
    int st_max_rank = 4, st_max_d = 7;
    cmd_selftest->add_option("--group", st_group, "Sp or SO")->capture_default_str();
    cmd_selftest->add_option("--max-rank", st_max_rank, "rank bound")->capture_default_str();
    cmd_selftest->add_option("--max-block-d", st_max_d, "block size bound")
        ->capture_default_str();
    cmd_selftest->add_option("--lines", st_lines,
                             "comma list: good-int, good-half, bad-int, ugly")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_selftest->parsed()) {
            EnumParams params;
            params.group = st_group == "SO" ? GroupKind::SOodd : GroupKind::SpEven;
            params.max_rank = st_max_rank;
            params.max_block_d = st_max_d;
            bool orth_good = params.group == GroupKind::SpEven;
            std::stringstream ss(st_lines);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "good-int")
                    params.lines.push_back(Rho{"r", 1,
                                               orth_good ? SelfDualType::Orthogonal
                                                         : SelfDualType::Symplectic,
                                               "r"});
                else if (item == "good-half")
                    params.lines.push_back(Rho{"h", 1,
                                               orth_good ? SelfDualType::Symplectic
                                                         : SelfDualType::Orthogonal,
                                               "h"});
                else if (item == "bad-int")
                    params.lines.push_back(Rho{"b", 1,
                                               orth_good ? SelfDualType::Symplectic
                                                         : SelfDualType::Orthogonal,
                                               "b"});
                else if (item == "ugly")
                    params.lines.push_back(Rho{"u", 1, SelfDualType::None, "v"});
                else
                    throw ValidationError("unknown line spec '" + item + "'");
            }
            // good-half and bad-int share the self-duality type; bad lines and
            // ugly lines need an anchor
            for (const auto& r : params.lines)
                if (!r.is_self_dual() ||
                    classify_line(r, ExpClass::Integral, params.group) == LineClass::Bad ||
                    classify_line(r, ExpClass::HalfIntegral, params.group) == LineClass::Bad)
                    params.sigma = SigmaInfo{"s0", 0};
            VerifyReport rep = verify(params);
            std::cout << rep.summary() << "\n";
            for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
            std::cout << (rep.ok() ? "selftest: PASS" : "selftest: FAIL") << "\n";
            return rep.ok() ? 0 : kExitInternal;
        }

        Input in = read_input(input_path);
        for (const auto& expr : in.expressions) {
            LanglandsDatum d = parse_expr(in, expr, json);

            if (cmd_dual->parsed()) {
                auto [res, tr] = dual(d);
                if (json) {
                    nlohmann::json j = nlohmann::json::parse(format_rep_json(res));
                    if (trace) j = {{"value", j}, {"trace", trace_json(tr)}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << format_rep(res, in.table) << "\n";
                    if (trace) print_trace(tr, in.table, std::cout);
                }
            } else if (cmd_derive->parsed()) {
                DerivativeResult res;
                if (at_spec.size() >= 3 && at_spec.substr(at_spec.size() - 3) == "d01") {
                    std::string head = at_spec.substr(0, at_spec.size() - 3);
                    if (!head.empty() && head.back() == ':') head.pop_back();
                    const Rho& rho = head.empty() ? in.table.default_rho() : in.table.rho(head);
                    res = derivative_delta01(d, rho);
                } else if (at_spec.size() >= 3 &&
                           at_spec.substr(at_spec.size() - 3) == "z01") {
                    std::string head = at_spec.substr(0, at_spec.size() - 3);
                    if (!head.empty() && head.back() == ':') head.pop_back();
                    const Rho& rho = head.empty() ? in.table.default_rho() : in.table.rho(head);
                    res = derivative_z01(d, rho);
                } else {
                    res = derivative_at(d, parse_point(at_spec, in.table));
                }
                if (json) {
                    nlohmann::json j = {{"k", res.k},
                                        {"value",
                                         nlohmann::json::parse(format_rep_json(res.value))}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "k=" << res.k << " " << format_rep(res.value, in.table)
                              << "\n";
                }
            } else if (cmd_socle->parsed()) {
                LanglandsDatum res;
                if (at_spec.size() >= 3 && at_spec.substr(at_spec.size() - 3) == "z01") {
                    std::string head = at_spec.substr(0, at_spec.size() - 3);
                    if (!head.empty() && head.back() == ':') head.pop_back();
                    const Rho& rho = head.empty() ? in.table.default_rho() : in.table.rho(head);
                    res = socle_z01(d, rho, socle_k);
                } else {
                    res = socle_at(d, parse_point(at_spec, in.table), socle_k);
                }
                std::cout << (json ? format_rep_json(res) : format_rep(res, in.table)) << "\n";
            } else if (cmd_irred->parsed()) {
                bool irr = irreducible_at(d, parse_point(at_spec, in.table));
                if (json)
                    std::cout << nlohmann::json({{"irreducible", irr}}).dump() << "\n";
                else
                    std::cout << (irr ? "irreducible" : "reducible") << "\n";
            } else if (cmd_split->parsed()) {
                for (const auto& f : jantzen_split(d)) {
                    if (json) {
                        nlohmann::json j = {
                            {"class", to_string(f.cls)},
                            {"line", f.cls == LineClass::Good ? "" : f.line.rep_id},
                            {"datum", nlohmann::json::parse(format_rep_json(f.datum))}};
                        std::cout << j.dump() << "\n";
                    } else {
                        std::cout << to_string(f.cls);
                        if (f.cls != LineClass::Good) std::cout << "[" << f.line.rep_id << "]";
                        std::cout << " " << format_rep(f.datum, in.table) << "\n";
                    }
                }
            } else if (cmd_rank->parsed()) {
                if (json)
                    std::cout << nlohmann::json({{"rank", rank(d)}}).dump() << "\n";
                else
                    std::cout << rank(d) << "\n";
            }
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
