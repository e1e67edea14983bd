// Batch front door: parse presentations and polynomial sets, dispatch the
// library operations, emit deterministic text and JSON.

#include <CLI11.hpp>

#include <iostream>

#include "gmr/gmr.hpp"

namespace {

using namespace gmr;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kFuel = 2;

struct Common {
    std::string presentation;
    std::string input;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool needs_input = true) {
    cmd->add_option("--presentation", c.presentation, "presentation file")->required();
    if (needs_input)
        cmd->add_option("--input", c.input, "polynomial file")->required();
    cmd->add_option("--out", c.out, "output file (default: stdout)");
}

void emit_polys(std::span<const Polynomial> ps, const std::string& out) {
    if (out.empty()) {
        for (const auto& p : ps) std::cout << io::format_polynomial(p) << "\n";
    } else {
        io::save_polynomials(ps, out);
    }
}

ReductionMode parse_mode(const std::string& m) {
    if (m == "strong") return ReductionMode::Strong;
    if (m == "right") return ReductionMode::Right;
    if (m == "prefix") return ReductionMode::Prefix;
    if (m == "comm" || m == "commutative") return ReductionMode::Commutative;
    if (m == "qc" || m == "quasi-commutative") return ReductionMode::QuasiCommutative;
    throw error("unknown mode '" + m + "'");
}

GBResult run_procedure(const std::string& proc, const std::vector<Polynomial>& F,
                       std::size_t fuel, bool reduced = false) {
    if (proc == "prefix") return reduced ? reduced_prefix_gb(F, fuel) : prefix_gb(F, fuel);
    if (proc == "reduced-prefix") return reduced_prefix_gb(F, fuel);
    if (proc == "comm") return comm_gb(F, reduced);
    if (proc == "comm-reduced") return comm_gb(F, true);
    if (proc == "free-group") return free_group_gb(F);
    if (proc == "context-free") return context_free_gb(F);
    if (proc == "nilpotent") return nilpotent_gb(F, false, fuel);
    if (proc == "nilpotent-2sided") return nilpotent_gb(F, true, fuel);
    throw error("unknown procedure '" + proc + "'");
}

ReductionMode mode_of_procedure(const std::string& proc) {
    if (proc == "comm" || proc == "comm-reduced") return ReductionMode::Commutative;
    if (proc == "nilpotent" || proc == "nilpotent-2sided") return ReductionMode::QuasiCommutative;
    return ReductionMode::Prefix;
}

int run(int argc, char** argv) {
    CLI::App app{"Gröbner bases in monoid and group rings over convergent presentations"};
    app.require_subcommand(1);

    // complete
    Common c_complete;
    std::string procedure;
    std::size_t fuel = 200000;
    std::string stats_path;
    auto* cmd_complete = app.add_subcommand("complete", "run a Gröbner basis procedure");
    add_common(cmd_complete, c_complete);
    cmd_complete->add_option("--procedure", procedure,
                             "prefix|reduced-prefix|comm|comm-reduced|free-group|"
                             "context-free|nilpotent|nilpotent-2sided")
        ->required();
    cmd_complete->add_option("--fuel", fuel, "budget on reductions and saturation steps");
    bool reduced = false;
    cmd_complete->add_flag("--reduced", reduced, "interreduce the basis (prefix and comm)");
    cmd_complete->add_option("--stats", stats_path, "write JSON statistics here");

    // normalform
    Common c_nf;
    std::string mode_name, basis_path;
    auto* cmd_nf = app.add_subcommand("normalform", "reduce a polynomial by a basis");
    add_common(cmd_nf, c_nf);
    cmd_nf->add_option("--mode", mode_name, "strong|right|prefix|comm|qc")->required();
    cmd_nf->add_option("--basis", basis_path, "basis polynomial file")->required();

    // saturate
    Common c_sat;
    std::string sat_mode;
    std::size_t sat_fuel = 10000;
    auto* cmd_sat = app.add_subcommand("saturate", "compute a saturating set");
    add_common(cmd_sat, c_sat);
    cmd_sat->add_option("--mode", sat_mode, "prefix|comm|qc|fg|plain")->required();
    cmd_sat->add_option("--fuel", sat_fuel, "prefix saturation budget");

    // check
    Common c_check;
    std::string what;
    auto* cmd_check = app.add_subcommand("check", "decide basis properties");
    add_common(cmd_check, c_check);
    cmd_check->add_option("--what", what, "prefix-gb|prefix-saturated|comm-saturated")
        ->required();

    // member
    Common c_member;
    std::string member_proc, generators_path;
    std::size_t member_fuel = 200000;
    auto* cmd_member = app.add_subcommand("member", "decide right-ideal membership");
    add_common(cmd_member, c_member);
    cmd_member->add_option("--generators", generators_path, "ideal generators file")->required();
    cmd_member
        ->add_option("--procedure", member_proc, "completion procedure for the generators")
        ->required();
    cmd_member->add_option("--fuel", member_fuel, "completion budget");

    // subgroup
    Common c_sub;
    std::string gens_words, query_word;
    auto* cmd_sub = app.add_subcommand("subgroup", "decide subgroup membership");
    add_common(cmd_sub, c_sub, /*needs_input=*/false);
    cmd_sub->add_option("--gens", gens_words, "file with one generator word per line")
        ->required();
    cmd_sub->add_option("--word", query_word, "query word")->required();

    // wordproblem
    Common c_wp;
    std::string left_word, right_word;
    std::size_t wp_bound = 3;
    auto* cmd_wp = app.add_subcommand("wordproblem", "decide word equality");
    add_common(cmd_wp, c_wp, /*needs_input=*/false);
    cmd_wp->add_option("--left", left_word, "left word")->required();
    cmd_wp->add_option("--right", right_word, "right word")->required();
    cmd_wp->add_option("--bound", wp_bound, "cofactor bound for the ideal route");

    // kb
    Common c_kb;
    std::size_t kb_fuel = 100000;
    auto* cmd_kb = app.add_subcommand("kb", "Knuth-Bendix completion of the rule system");
    add_common(cmd_kb, c_kb, /*needs_input=*/false);
    cmd_kb->add_option("--fuel", kb_fuel, "budget on normal form computations");

    // info
    Common c_info;
    auto* cmd_info = app.add_subcommand("info", "presentation summary and class report");
    add_common(cmd_info, c_info, /*needs_input=*/false);

    CLI11_PARSE(app, argc, argv);

    if (cmd_complete->parsed()) {
        Presentation P = io::load_presentation(c_complete.presentation);
        auto F = io::load_polynomials(P, c_complete.input);
        GBResult res = run_procedure(procedure, F, fuel, reduced);
        emit_polys(res.basis, c_complete.out);
        const auto stats = io::stats_json(res).dump();
        if (stats_path.empty()) std::cout << stats << "\n";
        else std::ofstream(stats_path) << stats << "\n";
        return res.status == GBStatus::Complete ? kOk : kFuel;
    }
    if (cmd_nf->parsed()) {
        Presentation P = io::load_presentation(c_nf.presentation);
        auto F = io::load_polynomials(P, basis_path);
        auto inputs = io::load_polynomials(P, c_nf.input);
        std::vector<Polynomial> out;
        for (const auto& p : inputs) out.push_back(normalform(p, F, parse_mode(mode_name)));
        emit_polys(out, c_nf.out);
        return kOk;
    }
    if (cmd_sat->parsed()) {
        Presentation P = io::load_presentation(c_sat.presentation);
        auto inputs = io::load_polynomials(P, c_sat.input);
        std::vector<Polynomial> out;
        bool exhausted = false;
        for (const auto& p : inputs) {
            if (sat_mode == "prefix") {
                auto r = prefix_saturate(p, sat_fuel);
                exhausted |= r.status == SatStatus::FuelExhausted;
                out.insert(out.end(), r.polys.begin(), r.polys.end());
            } else if (sat_mode == "comm") {
                auto r = comm_saturate(p);
                out.insert(out.end(), r.polys.begin(), r.polys.end());
            } else if (sat_mode == "qc") {
                auto r = qc_saturate(p);
                exhausted |= r.status == SatStatus::FuelExhausted;
                out.insert(out.end(), r.polys.begin(), r.polys.end());
            } else if (sat_mode == "fg") {
                auto ca = can_acan(p);
                out.push_back(ca.can);
                if (ca.acan != ca.can) out.push_back(ca.acan);
            } else if (sat_mode == "plain") {
                auto r = plain_sat(p);
                out.insert(out.end(), r.polys.begin(), r.polys.end());
            } else {
                throw error("unknown saturation mode '" + sat_mode + "'");
            }
        }
        emit_polys(out, c_sat.out);
        return exhausted ? kFuel : kOk;
    }
    if (cmd_check->parsed()) {
        Presentation P = io::load_presentation(c_check.presentation);
        auto F = io::load_polynomials(P, c_check.input);
        bool result = false;
        if (what == "prefix-gb") result = prefix_gb_check(F);
        else if (what == "prefix-saturated") result = saturated_check(F, ReductionMode::Prefix);
        else if (what == "comm-saturated") result = saturated_check(F, ReductionMode::Commutative);
        else throw error("unknown check '" + what + "'");
        std::cout << (result ? "true" : "false") << "\n";
        return kOk;
    }
    if (cmd_member->parsed()) {
        Presentation P = io::load_presentation(c_member.presentation);
        auto F = io::load_polynomials(P, generators_path);
        auto queries = io::load_polynomials(P, c_member.input);
        GBResult basis = run_procedure(member_proc, F, member_fuel);
        const ReductionMode mode = mode_of_procedure(member_proc);
        std::ostringstream lines;
        for (const auto& g : queries)
            lines << io::answer_json(member(g, basis, mode)).dump() << "\n";
        if (c_member.out.empty()) std::cout << lines.str();
        else std::ofstream(c_member.out) << lines.str();
        return basis.status == GBStatus::Complete ? kOk : kFuel;
    }
    if (cmd_sub->parsed()) {
        Presentation P = io::load_presentation(c_sub.presentation);
        std::ifstream in(gens_words);
        if (!in) throw error("cannot open '" + gens_words + "'");
        std::vector<MonoidElement> S;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            S.push_back(P.element(io::parse_word(P.alphabet(), line)));
        }
        const auto w = P.element(io::parse_word(P.alphabet(), query_word));
        const auto ans = subgroup_member(w, S);
        const std::string text = io::answer_json(ans).dump() + "\n";
        if (c_sub.out.empty()) std::cout << text;
        else std::ofstream(c_sub.out) << text;
        return ans.verdict == Verdict::Unknown ? kFuel : kOk;
    }
    if (cmd_wp->parsed()) {
        Presentation P = io::load_presentation(c_wp.presentation);
        const auto ans = encode_word_problem(P.sts(), io::parse_word(P.alphabet(), left_word),
                                             io::parse_word(P.alphabet(), right_word), wp_bound);
        std::cout << io::answer_json(ans).dump() << "\n";
        return ans.verdict == Verdict::Unknown ? kFuel : kOk;
    }
    if (cmd_kb->parsed()) {
        Presentation P = io::load_presentation(c_kb.presentation);
        auto res = knuth_bendix(P.sts(), kb_fuel);
        std::ostringstream lines;
        for (const Rule& r : res.system.rules())
            lines << r.lhs.str() << " -> " << r.rhs.str() << "\n";
        if (c_kb.out.empty()) std::cout << lines.str();
        else std::ofstream(c_kb.out) << lines.str();
        return res.status == KBStatus::Convergent ? kOk : kFuel;
    }
    if (cmd_info->parsed()) {
        Presentation P = io::load_presentation(c_info.presentation);
        const auto rep = P.validate_class();
        nlohmann::json j;
        j["class"] = structure_class_name(P.cls());
        j["letters"] = P.alphabet().size();
        j["group"] = P.is_group();
        j["convergent"] = rep.convergent;
        j["monadic"] = rep.monadic;
        j["two_monadic"] = rep.two_monadic;
        j["length_reducing"] = rep.length_reducing;
        j["group_system"] = rep.group_system;
        j["commutation_cab"] = rep.commutation_cab;
        j["commutation_cni"] = rep.commutation_cni;
        j["commutation_cp"] = rep.commutation_cp;
        j["power_rules"] = rep.has_power_rules;
        j["class_consistent"] = rep.class_consistent;
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    return kError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gmr::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
