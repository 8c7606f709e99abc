#include "qclock/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qclock/dynamics.hpp"
#include "qclock/errors.hpp"
#include "qclock/feynman.hpp"
#include "qclock/groupstruct.hpp"
#include "qclock/histories.hpp"
#include "qclock/measure.hpp"
#include "qclock/random.hpp"
#include "qclock/syncclock.hpp"

namespace qclock {

namespace {

/// Restores the entry cap when a run ends.
class CapGuard {
  public:
    explicit CapGuard(std::size_t cap) : previous_(max_entries()) {
        set_max_entries(cap);
    }
    ~CapGuard() { set_max_entries(previous_); }
    CapGuard(const CapGuard &) = delete;
    CapGuard &operator=(const CapGuard &) = delete;

  private:
    std::size_t previous_;
};

Json read_document(const std::optional<std::string> &path) {
    if (!path) {
        throw InputError("input", "command requires an input file");
    }
    std::ifstream in(*path);
    if (!in) {
        throw InputError("input", "cannot open " + *path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError("$", std::string("malformed JSON: ") + e.what());
    }
}

Json header(const RunConfig &cfg) {
    Json j{{"schema_version", kSchemaVersion}, {"command", cfg.command}};
    return j;
}

/// Copies checks/pass/max_error of r into j.
void merge_report(Json &j, const Report &r) {
    const Json parts = to_json(r);
    for (const auto &[k, v] : parts.items()) {
        j[k] = v;
    }
}

ExitCode code_for(bool pass) {
    return pass ? ExitCode::Pass : ExitCode::CheckFailed;
}

RunResult run_axioms(const RunConfig &cfg) {
    if (!cfg.N) {
        throw InputError("N", "axioms requires a clock size");
    }
    if (*cfg.N < 1) {
        throw InputError("N", "clock size must be positive");
    }
    const ClockStructures cs = make_clock(*cfg.N);
    const Report r = verify_strong_complementarity(cs, cfg.tol);
    Json j = header(cfg);
    j["N"] = *cfg.N;
    merge_report(j, r);
    return {code_for(r.passed()), std::move(j)};
}

RunResult run_dynamic(const RunConfig &cfg) {
    const UnitaryDynamic d = dynamic_from_json(read_document(cfg.input_path), cfg.tol);
    const ClockStructures cs = make_clock(d.N);
    Report r;
    const Report axioms = validate_dynamic(d, cs, cfg.tol);
    for (auto c : axioms.checks()) {
        c.name = "axioms." + c.name;
        r.add(std::move(c));
    }
    const ProjectionSpectrum s = hamiltonian(d);
    r.add("hamiltonian.complete", completeness_error(s), cfg.tol.eps());
    r.add("ergodic", max_abs_diff(time_average(d), s.projectors.front()),
          cfg.tol.eps());
    try {
        r.add("stone_roundtrip", max_family_diff(stone_reconstruct(s, cfg.tol), d),
              cfg.tol.eps());
    } catch (const IncompleteSpectrum &e) {
        r.add(Check{"stone_roundtrip", false, completeness_error(s), e.what()});
    }

    Json j = header(cfg);
    j["N"] = d.N;
    j["dim"] = d.dim;
    Json ranks = Json::array();
    for (int E : s.support) {
        ranks.push_back(projector_rank(s.projectors[static_cast<std::size_t>(E)]));
    }
    j["spectrum"] = Json{{"support", s.support}, {"ranks", std::move(ranks)}};
    merge_report(j, r);
    return {code_for(r.passed()), std::move(j)};
}

RunResult run_feynman(const RunConfig &cfg) {
    const CyclicCircuit c = circuit_from_json(read_document(cfg.input_path), cfg.tol);
    Json j = header(cfg);
    try {
        const FeynmanReport fr = feynman_check(c, cfg.tol);
        const Json parts = to_json(fr);
        for (const auto &[k, v] : parts.items()) {
            j[k] = v;
        }
        j["checks"] = to_json(fr.details)["checks"];
        return {code_for(fr.pass), std::move(j)};
    } catch (const NotCyclic &e) {
        j["cyclic"] = false;
        j["ground_dim"] = nullptr;
        j["expected_dim"] = c.dim;
        j["max_residual"] = nullptr;
        j["pass"] = false;
        j["error"] = e.what();
        return {ExitCode::CheckFailed, std::move(j)};
    }
}

struct SyncInput {
    int chi = 0;
    std::vector<UnitaryDynamic> ds;
    std::vector<Vector> psis;
};

SyncInput parse_sync(const Json &doc, Tolerance tol) {
    if (!doc.is_object()) {
        throw InputError("$", "expected a JSON object");
    }
    const long long N = integer_from_json(require_member(doc, "N"), "N");
    if (N < 1 || N > (1 << 20)) {
        throw InputError("N", "clock size must be a positive integer");
    }
    const long long chi = integer_from_json(require_member(doc, "chi"), "chi");
    if (chi < 0 || chi >= N) {
        throw InputError("chi", "total energy must satisfy 0 <= chi < N");
    }
    const Json &systems = require_member(doc, "systems");
    if (!systems.is_array() || systems.empty()) {
        throw InputError("systems", "expected a non-empty array of systems");
    }
    SyncInput in;
    in.chi = static_cast<int>(chi);
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const std::string base = "systems[" + std::to_string(i) + "]";
        const Json &sys = systems[i];
        if (!sys.is_object()) {
            throw InputError(base, "expected an object");
        }
        if (!sys.contains("generator")) {
            throw InputError(base + ".generator", "missing required field");
        }
        if (!sys.contains("state")) {
            throw InputError(base + ".state", "missing required field");
        }
        Matrix g = matrix_from_json(sys["generator"], base + ".generator");
        if (!g.is_square()) {
            throw InputError(base + ".generator", "expected a square matrix");
        }
        Vector psi = vector_from_json(sys["state"], base + ".state");
        if (psi.dim() != g.rows()) {
            throw InputError(base + ".state", "dimension does not match generator");
        }
        in.ds.push_back(dynamic_from_generator(g, static_cast<int>(N), tol));
        in.psis.push_back(std::move(psi));
    }
    return in;
}

RunResult run_sync(const RunConfig &cfg) {
    const SyncInput in = parse_sync(read_document(cfg.input_path), cfg.tol);
    const int N = in.ds.front().N;
    const ClockStructures cs = make_clock(N);
    const double bound = cfg.tol.eps();

    Report r;
    for (std::size_t i = 0; i < in.ds.size(); ++i) {
        const Report c = conundrum_check(in.ds[i], cs, cfg.tol);
        r.add("system[" + std::to_string(i) + "].time_energy_commute", c.max_error(),
              bound);
    }
    const Contraction collapse = clock_energy_collapse(in.ds, in.psis, in.chi);
    r.add("clock_energy_collapse", collapse.residual, bound);
    const SyncState fam = synchronized_family(in.ds, in.psis, in.chi);
    if (in.ds.size() >= 2) {
        for (std::size_t j = 0; j < in.ds.size(); ++j) {
            for (int E = 0; E < N; ++E) {
                if ((spectral_projector(in.ds[j], E) * in.psis[j]).norm() <
                    kSupportThreshold) {
                    continue;
                }
                const Contraction m =
                    subsystem_energy_measure(fam, in.ds, in.psis, in.chi, j, E);
                r.add("measure[" + std::to_string(j) + "].E=" + std::to_string(E),
                      m.residual, bound);
            }
        }
    }
    Json j = header(cfg);
    j["N"] = N;
    j["chi"] = in.chi;
    j["systems"] = in.ds.size();
    j["family"] = to_json(fam.amplitudes);
    merge_report(j, r);
    return {code_for(r.passed()), std::move(j)};
}

RunResult run_internal_time(const RunConfig &cfg) {
    const UnitaryDynamic d = dynamic_from_json(read_document(cfg.input_path), cfg.tol);
    Json j = header(cfg);
    try {
        const InternalClockDescriptor desc = describe_internal_clock(d);
        const Json parts = to_json(desc);
        for (const auto &[k, v] : parts.items()) {
            j[k] = v;
        }
        if (!desc.subgroup) {
            j["pass"] = false;
            j["error"] = "energies do not form a subgroup";
            return {ExitCode::CheckFailed, std::move(j)};
        }
        j["internal_basis"] = Json::array();
        for (const auto &v : desc.internal_basis) {
            j["internal_basis"].push_back(to_json(v));
        }
        Report r;
        r.add("translation_permutes_internal_basis", desc.permutation_error,
              cfg.tol.eps());
        merge_report(j, r);
        return {code_for(r.passed()), std::move(j)};
    } catch (const Degenerate &e) {
        j["pass"] = false;
        j["error"] = e.what();
        return {ExitCode::CheckFailed, std::move(j)};
    }
}

RunResult run_self_test(const RunConfig &cfg) {
    Rng rng(cfg.seed);
    const double bound = 1e-8;
    double stone = 0.0, ergodic = 0.0, eigen = 0.0, em = 0.0, spectral = 0.0;
    double observable = 0.0;
    for (int k = 0; k < 20; ++k) {
        const int N = std::uniform_int_distribution<int>(1, 12)(rng);
        const auto dim = static_cast<std::size_t>(
            std::uniform_int_distribution<int>(1, 5)(rng));
        const UnitaryDynamic d =
            dynamic_from_generator(random_generator(dim, N, rng).generator, N, Tolerance(bound));
        const ProjectionSpectrum s = hamiltonian(d);
        stone = std::max(stone, max_family_diff(stone_reconstruct(s, Tolerance(bound)), d));
        ergodic = std::max(ergodic, max_abs_diff(time_average(d), s.projectors.front()));
        for (int E = 0; E < N; ++E) {
            for (int t = 0; t < N; ++t) {
                eigen = std::max(
                    eigen, max_abs_diff(d.at(t) * s.projectors[static_cast<std::size_t>(E)],
                                        root_of_unity(static_cast<long long>(E) * t, N) *
                                            s.projectors[static_cast<std::size_t>(E)]));
            }
        }
        const Vector psi = random_unit_vector(dim, rng);
        const History h = history_from_state(d, psi);
        em = std::max(em, is_em_morphism(h, d).max_error);
        const History back = reconstruct_history(schrodinger_solve(d, psi));
        for (int t = 0; t < N; ++t) {
            spectral = std::max(spectral,
                                max_abs_diff(back.states[static_cast<std::size_t>(t)],
                                             h.states[static_cast<std::size_t>(t)]));
        }
        const ClockStructures cs = make_clock(N);
        observable = std::max(
            observable,
            verify_observable(observable_from_spectrum(s, cs, Tolerance(bound)), cs)
                .max_error());
    }

    double feynman = 0.0;
    bool feynman_dims = true;
    for (int k = 0; k < 5; ++k) {
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const auto dim = static_cast<std::size_t>(
            std::uniform_int_distribution<int>(1, 3)(rng));
        std::vector<Matrix> gates;
        for (int i = 0; i < n; ++i) {
            gates.push_back(haar_unitary(dim, rng));
        }
        const FeynmanReport fr = feynman_check(cyclify(gates, Tolerance(bound)), Tolerance(bound));
        feynman = std::max(feynman, fr.max_residual);
        feynman_dims = feynman_dims && fr.ground_dim == fr.expected_dim;
    }

    double conservation = 0.0;
    for (int k = 0; k < 5; ++k) {
        const int N = std::uniform_int_distribution<int>(2, 4)(rng);
        std::vector<UnitaryDynamic> ds;
        std::vector<Vector> psis;
        for (int i = 0; i < 2; ++i) {
            const auto dim = static_cast<std::size_t>(
                std::uniform_int_distribution<int>(1, 3)(rng));
            ds.push_back(dynamic_from_generator(random_generator(dim, N, rng).generator, N,
                                                Tolerance(bound)));
            psis.push_back(random_unit_vector(dim, rng));
        }
        const int chi = std::uniform_int_distribution<int>(0, N - 1)(rng);
        conservation = std::max(conservation, clock_energy_collapse(ds, psis, chi).residual);
    }

    Report r;
    r.add("stone_roundtrip", stone, bound);
    r.add("ergodic", ergodic, bound);
    r.add("eigen_relation", eigen, bound);
    r.add("history_em_morphism", em, bound);
    r.add("spectral_roundtrip", spectral, bound);
    r.add("observable_identities", observable, bound);
    r.add("feynman_residual", feynman, bound);
    r.add(Check{"feynman_ground_dim", feynman_dims, 0.0, {}});
    r.add("energy_collapse", conservation, bound);
    Json j = header(cfg);
    j["seed"] = cfg.seed;
    merge_report(j, r);
    return {code_for(r.passed()), std::move(j)};
}

RunResult input_failure(const RunConfig &cfg, const std::string &field,
                        const std::string &message) {
    Json j = header(cfg);
    j["error"] = Json{{"field", field}, {"message", message}};
    return {ExitCode::InputError, std::move(j)};
}

} // namespace

RunResult execute(const RunConfig &config) {
    try {
        CapGuard cap(config.max_dim);
        if (config.command == "axioms") {
            return run_axioms(config);
        }
        if (config.command == "dynamic") {
            return run_dynamic(config);
        }
        if (config.command == "feynman") {
            return run_feynman(config);
        }
        if (config.command == "sync") {
            return run_sync(config);
        }
        if (config.command == "internal-time") {
            return run_internal_time(config);
        }
        if (config.command == "self-test") {
            return run_self_test(config);
        }
        return input_failure(config, "command", "unknown command " + config.command);
    } catch (const InputError &e) {
        return input_failure(config, e.field(), e.what());
    } catch (const CapacityError &e) {
        return input_failure(config, "max-dim", e.what());
    } catch (const InvalidArgument &e) {
        return input_failure(config, "input", e.what());
    } catch (const Error &e) {
        Json j = header(config);
        j["pass"] = false;
        j["error"] = e.what();
        return {ExitCode::CheckFailed, std::move(j)};
    }
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const RunResult result = execute(config);
    const std::string text = dump_canonical(result.report);
    if (result.code == ExitCode::InputError) {
        err << "error: " << result.report["error"]["message"].get<std::string>()
            << "\n";
    }
    if (config.output_path) {
        std::ofstream f(*config.output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << *config.output_path << "\n";
            return static_cast<int>(ExitCode::InputError);
        }
        f << text;
    } else {
        out << text;
    }
    return static_cast<int>(result.code);
}

int cli_main(int argc, const char *const *argv, std::ostream &out,
             std::ostream &err) {
    CLI::App app{"Verification suite for Z/N quantum clocks and their dynamics",
                 "qclock"};
    app.require_subcommand(0, 1);

    double tol = kDefaultEps;
    std::uint64_t seed = 0;
    std::string out_path;
    std::size_t max_dim = std::size_t{1} << 20;
    bool self_test = false;
    app.add_option("--tol", tol, "Absolute per-entry tolerance")->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomised suites")->capture_default_str();
    app.add_option("--out", out_path, "Write the report to this file");
    app.add_option("--max-dim", max_dim, "Cap on total entries of dense objects")
        ->capture_default_str();
    app.add_flag("--self-test", self_test, "Run the randomised property suites");

    int n = 0;
    std::string input;
    auto *axioms = app.add_subcommand("axioms", "Check the clock structure axioms");
    axioms->add_option("N", n, "Clock size")->required();
    CLI::App *file_cmds[4];
    const char *names[4] = {"dynamic", "feynman", "sync", "internal-time"};
    const char *help[4] = {"Validate a dynamic and its Hamiltonian",
                           "Check the history states of a cyclic circuit",
                           "Check conservation of total energy",
                           "Build an internal time observable"};
    for (int i = 0; i < 4; ++i) {
        file_cmds[i] = app.add_subcommand(names[i], help[i]);
        file_cmds[i]->add_option("file", input, "Input JSON document")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::InputError);
    }

    RunConfig cfg;
    try {
        cfg.tol = Tolerance(tol);
    } catch (const Error &e) {
        err << "error: --tol: " << e.what() << "\n";
        return static_cast<int>(ExitCode::InputError);
    }
    if (max_dim == 0) {
        err << "error: --max-dim must be positive\n";
        return static_cast<int>(ExitCode::InputError);
    }
    cfg.seed = seed;
    cfg.max_dim = max_dim;
    if (!out_path.empty()) {
        cfg.output_path = out_path;
    }

    const auto subs = app.get_subcommands();
    if (self_test) {
        if (!subs.empty()) {
            err << "error: --self-test takes no subcommand\n";
            return static_cast<int>(ExitCode::InputError);
        }
        cfg.command = "self-test";
    } else if (subs.empty()) {
        err << app.help();
        return static_cast<int>(ExitCode::InputError);
    } else {
        cfg.command = subs.front()->get_name();
        if (cfg.command == "axioms") {
            cfg.N = n;
        } else {
            cfg.input_path = input;
        }
    }
    return run(cfg, out, err);
}

} // namespace qclock
