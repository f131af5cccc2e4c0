#include "platt/errors.hpp"
#include "platt/generate.hpp"
#include "platt/gentle.hpp"
#include "platt/glattice.hpp"
#include "platt/json_io.hpp"
#include "platt/mackey.hpp"
#include "platt/presenter.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace platt;

struct Output {
    std::string path;   // empty = stdout
    std::string format; // only "json"
};

void emit(const Output& out, const json& report) {
    std::string text = canonical_dump(report);
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) fail("ParseError", "cannot open output file " + out.path);
    file << text;
}

json load_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail("ParseError", "cannot open " + path);
    json j = json::parse(file, nullptr, false);
    if (j.is_discarded()) fail("ParseError", "malformed JSON in " + path);
    return j;
}

json module_report(const FGModule& m) {
    json j;
    j["free"] = m.free_rank;
    j["torsion"] = m.torsion;
    return j;
}

int cmd_perm_check(const std::string& path, const Output& out) {
    GLattice m = lattice_from_json(load_file(path));
    PermVerdict v = is_permutation(m);
    json report;
    report["verdict"] = v.value;
    report["level_torsion"] = v.level_torsion;
    if (v.value) report["multiplicities"] = perm_multiplicities(m);
    emit(out, report);
    return v.value ? 0 : 1;
}

int cmd_perm_decompose(const std::string& path, const Output& out) {
    GLattice m = lattice_from_json(load_file(path));
    if (!is_permutation(m).value) {
        std::cerr << "not a permutation lattice\n";
        return 1;
    }
    json report;
    report["multiplicities"] = perm_multiplicities(m);
    emit(out, report);
    return 0;
}

int cmd_present(const std::string& path, const Output& out) {
    GLattice m = lattice_from_json(load_file(path));
    PermPresentation pres = present_lattice(m);
    presentation_verify(pres, m); // never trust the library postcondition
    json report = presentation_to_json(pres);
    report["verified"] = true;
    emit(out, report);
    return 0;
}

int cmd_tate(const std::string& path, const Output& out) {
    GLattice m = lattice_from_json(load_file(path));
    json groups = json::array();
    for (int k = 0; k <= m.n; ++k) {
        for (int degree : {-1, 0, 1}) {
            json entry;
            entry["k"] = k;
            entry["degree"] = degree;
            entry["group"] = module_report(tate(m, k, degree));
            groups.push_back(std::move(entry));
        }
    }
    json report;
    report["rank"] = m.rank;
    report["tate"] = std::move(groups);
    emit(out, report);
    return 0;
}

int cmd_mackey_axioms(const std::string& path, const Output& out) {
    Mackey x = mackey_from_json(load_file(path), /*validate=*/false);
    json report;
    try {
        mackey_validate(x);
        report["ok"] = true;
    } catch (const Error& e) {
        report["ok"] = false;
        report["violation"] = e.what();
    }
    emit(out, report);
    return report["ok"].get<bool>() ? 0 : 1;
}

int cmd_section(const std::string& path, int j, int k, const Output& out) {
    Mackey x = mackey_from_json(load_file(path));
    if (!(0 <= j && j < k && k <= x.n)) fail("BadIndices", "need 0 <= j < k <= n");
    SectionCohomology sc = section_cohomology(x, j, k);
    json report;
    report["j"] = j;
    report["k"] = k;
    report["k0"] = module_report(sc.k0);
    report["k1"] = module_report(sc.k1);
    report["c0"] = module_report(sc.c0);
    report["c1"] = module_report(sc.c1);
    bool exact = true;
    try {
        six_term_check(x, j, k);
    } catch (const Error&) {
        exact = false;
    }
    report["six_term_exact"] = exact;
    emit(out, report);
    return exact ? 0 : 1;
}

int cmd_gentle(const std::string& diagram, long p, const Output& out) {
    ArrowDiagram d = ArrowDiagram::parse(diagram);
    auto [maxs, mins] = max_min(d);
    GentleResolution r = rank1_resolution(functor_of(p, d));
    json report;
    report["diagram"] = d.str();
    report["max"] = maxs;
    report["min"] = mins;
    report["q0"] = r.q0_levels;
    report["q1"] = r.q1_levels;
    report["projective"] = mins.empty();
    report["exact"] = true; // rank1_resolution certifies exactness itself
    emit(out, report);
    return 0;
}

int cmd_gldim_witness(long p, int n, const Output& out) {
    GldimReport w = gldim_witness(p, n);
    json report;
    report["p"] = p;
    report["n"] = n;
    report["b_length"] = w.b_length;
    report["ext3"] = module_report(w.ext3);
    report["max_i_injective_length"] = w.max_i_injective_length;
    report["max_h0_length"] = w.max_h0_length;
    emit(out, report);
    return 0;
}

int cmd_generate(const InstanceSpec& spec, const Output& out) {
    GLattice m = generate_lattice(spec);
    emit(out, lattice_to_json(m));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with lattices, cohomological Mackey functors and "
                 "gentle-order functors for cyclic p-groups over Z_(p)."};
    app.require_subcommand(1);

    Output out;
    out.format = "json";
    app.add_option("--out", out.path, "write the JSON report to this file")->capture_default_str();
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json"}))
        ->capture_default_str();

    long p = 2;
    int n = 1;
    std::uint64_t seed = 1;
    app.add_option("--p", p, "prime p")->capture_default_str();
    app.add_option("--n", n, "exponent n of the group order p^n")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();

    std::string lattice_file, mackey_file, diagram, kind = "permutation+conjugate";
    std::vector<long> multiplicities;
    int sec_j = 0, sec_k = 1;

    CLI::App* perm_check = app.add_subcommand("perm-check", "decide whether a lattice is a permutation lattice");
    perm_check->add_option("file", lattice_file, "lattice JSON file")->required();
    CLI::App* perm_decompose = app.add_subcommand("perm-decompose", "orbit multiplicities of a permutation lattice");
    perm_decompose->add_option("file", lattice_file, "lattice JSON file")->required();
    CLI::App* present = app.add_subcommand("present", "permutation presentation 0 -> R[O1] -> R[O0] -> M -> 0");
    present->add_option("file", lattice_file, "lattice JSON file")->required();
    CLI::App* tate_cmd = app.add_subcommand("tate", "Tate cohomology of every subgroup in degrees -1, 0, 1");
    tate_cmd->add_option("file", lattice_file, "lattice JSON file")->required();
    CLI::App* axioms = app.add_subcommand("mackey-axioms", "check the cohomological Mackey functor axioms");
    axioms->add_option("file", mackey_file, "Mackey functor JSON file")->required();
    CLI::App* section = app.add_subcommand("section", "section cohomology and the six-term sequence");
    section->add_option("file", mackey_file, "Mackey functor JSON file")->required();
    section->add_option("--j", sec_j, "lower level")->capture_default_str();
    section->add_option("--k", sec_k, "upper level")->capture_default_str();
    CLI::App* gentle = app.add_subcommand("gentle", "resolution report for an arrow diagram");
    gentle->add_option("diagram", diagram, "direction word over < and >")->required();
    CLI::App* gldim = app.add_subcommand("gldim-witness", "global dimension witnesses for (p, n)");
    CLI::App* generate = app.add_subcommand("generate", "deterministic random lattice instances");
    generate->add_option("--kind", kind,
                         "trivial | regular | augmentation | permutation+conjugate | "
                         "kernel-of-random-perm-map")
        ->capture_default_str();
    generate->add_option("--mult", multiplicities, "orbit counts per level 0..n")
        ->delimiter(',');

    for (CLI::App* sub : {perm_check, perm_decompose, present, tate_cmd, axioms, section,
                          gentle, gldim, generate})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (perm_check->parsed()) return cmd_perm_check(lattice_file, out);
        if (perm_decompose->parsed()) return cmd_perm_decompose(lattice_file, out);
        if (present->parsed()) return cmd_present(lattice_file, out);
        if (tate_cmd->parsed()) return cmd_tate(lattice_file, out);
        if (axioms->parsed()) return cmd_mackey_axioms(mackey_file, out);
        if (section->parsed()) return cmd_section(mackey_file, sec_j, sec_k, out);
        if (gentle->parsed()) return cmd_gentle(diagram, p, out);
        if (gldim->parsed()) return cmd_gldim_witness(p, n, out);
        if (generate->parsed()) return cmd_generate({seed, p, n, kind, multiplicities}, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "WitnessFailed" ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
