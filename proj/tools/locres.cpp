#include <CLI11.hpp>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "locres/json_io.hpp"
#include "locres/oracle.hpp"
#include "locres/problem.hpp"

using namespace locres;

namespace {

struct Flags {
    std::string file;
    bool json = false;
    bool serial = false;
    long max_degree = 64;
    int threads = 0;
    std::string order;           // overrides the problem file
    std::vector<long> weights;   // overrides the problem file
};

ResidueMapOptions map_options(const Flags& fl) {
    ResidueMapOptions o;
    o.dual.max_total_degree = fl.max_degree;
    o.dual.exec = fl.serial ? Exec::Serial : Exec::Parallel;
    o.exec = o.dual.exec;
    return o;
}

template <class K>
Instance<K> load(const Flags& fl) {
    ProblemFile pf = read_problem_file(fl.file);
    if (!fl.order.empty()) pf.order = fl.order;
    if (!fl.weights.empty()) pf.weights = fl.weights;
    return instantiate<K>(pf);
}

template <class K>
void print_dual_text(const DualData<K>& d) {
    std::cout << "mu = " << d.mu() << "\n";
    std::cout << "box =";
    for (int i = 0; i < d.m.size(); ++i) std::cout << " " << d.m[i];
    std::cout << "\nlambda =";
    for (const auto& a : d.lambda) std::cout << " (" << a.key() << ")";
    std::cout << "\n";
    for (const auto& c : d.psi)
        std::cout << "psi[" << c.head().key() << "] = " << format_poly(c.as_polynomial())
                  << "\n";
}

void print_genericity(const std::vector<std::string>& gen) {
    for (const auto& g : gen) std::cout << "assumes nonzero: " << g << "\n";
}

template <class K>
int run_dual(const Instance<K>& inst, const Flags& fl) {
    if (inst.ring->params) inst.ring->params->glog.clear();
    DualData<K> d = dual_basis(inst.F, map_options(fl).dual);
    std::vector<std::string> gen;
    if (inst.ring->params) gen = inst.ring->params->glog.snapshot();
    if (fl.json) {
        std::cout << dump_json(json_dual(d, gen));
    } else {
        print_dual_text(d);
        print_genericity(gen);
    }
    return 0;
}

template <class K>
int run_tau(const Instance<K>& inst, const Flags& fl) {
    ResidueMap<K> M = residue_map(inst.F, map_options(fl));
    if (fl.json) {
        std::cout << dump_json(json_map(M));
    } else {
        print_dual_text(M.dual);
        std::cout << "q = " << format_poly(M.trans.q) << "\n";
        for (int k = 0; k < M.dual.mu(); ++k)
            std::cout << "coeff[" << M.dual.lambda[k].key() << "] = " << scalar_str(M.coeff[k])
                      << "\n";
        std::cout << "den = " << scalar_str(M.den) << "\n";
        print_genericity(M.genericity);
    }
    return 0;
}

template <class K>
int run_residue(const Instance<K>& inst, const Flags& fl) {
    if (!inst.h && !inst.h_series)
        throw InputError("the residue command needs a numerator (h or hseries)");
    ResidueMap<K> M = residue_map(inst.F, map_options(fl));
    K r = inst.h ? point_residue(*inst.h, M) : point_residue(*inst.h_series, M);
    Polynomial<K> nf = inst.h ? local_normal_form(*inst.h, M.dual)
                              : local_normal_form(*inst.h_series, M.dual);
    if (fl.json) {
        nlohmann::ordered_json j;
        j["residue"] = scalar_str(r);
        j["nf"] = format_poly(nf);
        if (inst.ring->params) j["genericity"] = M.genericity;
        std::cout << dump_json(j);
    } else {
        std::cout << "residue = " << scalar_str(r) << "\n";
        std::cout << "nf = " << format_poly(nf) << "\n";
        print_genericity(M.genericity);
    }
    return 0;
}

template <class K>
int run_check(const Instance<K>& inst, const Flags& fl) {
    ResidueMap<K> M = residue_map(inst.F, map_options(fl));
    bool dual_ok = verify_duality(M.dual);
    Polynomial<K> h = inst.h ? *inst.h : Polynomial<K>::constant(inst.ring, K(1));
    K main_r = point_residue(h, M);
    K oracle_r = residue_by_transformation(h, inst.F);
    bool match = main_r == oracle_r;
    if (fl.json) {
        nlohmann::ordered_json j;
        j["mu"] = M.dual.mu();
        j["duality"] = dual_ok;
        j["residue"] = scalar_str(main_r);
        j["oracle"] = scalar_str(oracle_r);
        j["match"] = match;
        if (inst.ring->params) j["genericity"] = M.genericity;
        std::cout << dump_json(j);
    } else {
        std::cout << "mu = " << M.dual.mu() << "\n"
                  << "duality = " << (dual_ok ? "ok" : "BROKEN") << "\n"
                  << "residue = " << scalar_str(main_r) << "\n"
                  << "oracle  = " << scalar_str(oracle_r) << "\n"
                  << "match = " << (match ? "ok" : "MISMATCH") << "\n";
        print_genericity(M.genericity);
    }
    return dual_ok && match ? 0 : 1;
}

template <class K>
int run_milnor(const Instance<K>& inst, const Flags& fl) {
    const std::vector<long>& w = inst.ring->order.weights();
    long d = 0;
    for (std::size_t i = 0; i < inst.F.size(); ++i) {
        if (inst.F[i].is_zero()) throw MathError("zero generator");
        long lo = -1;
        for (const auto& t : inst.F[i].terms()) {
            long wd = weighted_degree(w, t.m);
            if (lo < 0 || wd < lo) lo = wd;
        }
        long di = lo + w[i];
        if (i == 0)
            d = di;
        else if (d != di)
            throw MathError("generators are not the gradient of a quasi-homogeneous point");
    }
    long formula = quasi_homogeneous_milnor(w, d);
    DualData<K> dd = dual_basis(inst.F, map_options(fl).dual);
    bool match = (long)dd.mu() == formula;
    if (fl.json) {
        nlohmann::ordered_json j;
        j["mu"] = dd.mu();
        j["formula"] = formula;
        j["match"] = match;
        std::cout << dump_json(j);
    } else {
        std::cout << "mu = " << dd.mu() << "\nformula = " << formula << "\nmatch = "
                  << (match ? "ok" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

template <class K>
int run_command(const std::string& cmd, const Flags& fl) {
    Instance<K> inst = load<K>(fl);
    if (cmd == "dual") return run_dual(inst, fl);
    if (cmd == "tau") return run_tau(inst, fl);
    if (cmd == "residue") return run_residue(inst, fl);
    if (cmd == "check") return run_check(inst, fl);
    if (cmd == "milnor") return run_milnor(inst, fl);
    throw Error("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grothendieck point residues through algebraic local cohomology"};
    app.require_subcommand(1);
    Flags fl;
    const char* names[] = {"dual", "tau", "residue", "check", "milnor"};
    const char* descs[] = {
        "reduced basis of the local cohomology space attached to F",
        "kernel class of the residue mapping over the dual basis",
        "point residue of h dz / f_1...f_n at the origin",
        "self-check: duality pairing and an independent residue computation",
        "multiplicity against the quasi-homogeneous weight formula"};
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("file", fl.file, "problem file")->required();
        sub->add_flag("--json", fl.json, "machine-readable output");
        sub->add_flag("--serial", fl.serial, "disable parallel kernels");
        sub->add_option("--max-degree", fl.max_degree, "staircase degree bound");
        sub->add_option("--threads", fl.threads, "thread count for parallel kernels");
        sub->add_option("--order", fl.order, "override the order field");
        sub->add_option("--weights", fl.weights, "override the weights field")->delimiter(',');
    }
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (fl.threads > 0) omp_set_num_threads(fl.threads);
#endif

    std::string cmd;
    for (const auto* sub : app.get_subcommands()) cmd = sub->get_name();
    try {
        bool parametric = !read_problem_file(fl.file).params.empty();
        return parametric ? run_command<RatFunc>(cmd, fl) : run_command<Rational>(cmd, fl);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
