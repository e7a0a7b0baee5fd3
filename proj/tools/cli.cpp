#include "cullis/cli.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>

#include "cullis/determinant.hpp"
#include "cullis/io.hpp"
#include "cullis/preserver.hpp"
#include "cullis/radical.hpp"
#include "cullis/reduction.hpp"
#include "cullis/selftest.hpp"

namespace cullis::cli {

namespace {

Status status_for(Errc code) {
    switch (code) {
        case Errc::NotAPreserver:
        case Errc::ConditionViolated:
        case Errc::NotTwoSided:
        case Errc::ZeroOperator:
        case Errc::VerificationFailed:
            return kFailure;
        default:
            return kUsage;
    }
}

Field parse_field_option(const std::string& text) { return Field::parse(text); }

void print_witness(std::ostream& out, const MixedWitness& w) {
    out << "Y columns:";
    for (int j : w.y_slots) out << ' ' << j;
    out << "\nbasis rows:";
    for (std::size_t j = 0; j < w.basis_rows.size(); ++j) {
        if (w.basis_rows[j] != 0) out << " col " << j + 1 << "=e_" << w.basis_rows[j];
    }
    out << "\ndet = " << w.value.to_string() << '\n' << format_matrix(w.matrix);
}

struct BenchShape {
    int n;
    int k;
};

int bench(std::ostream& out, std::uint64_t seed, int samples, const std::vector<std::string>& field_names) {
    const std::vector<BenchShape> shapes{{3, 2}, {4, 2}, {5, 3}, {6, 3}, {6, 4}, {7, 4}, {8, 4}, {8, 5}, {9, 5}};
    out << "n,k,field,algo,evaluations,nanos_total\n";
    for (const auto& name : field_names) {
        const Field f = Field::parse(name);
        for (const auto& s : shapes) {
            Rng rng = Rng::derive(seed, "bench." + f.name() + "." + std::to_string(s.n) + "." + std::to_string(s.k));
            std::vector<RectMatrix> inputs;
            for (int t = 0; t < samples; ++t) inputs.push_back(random_matrix(rng, f, s.n, s.k));
            for (auto algo : {DetAlgorithm::Definition, DetAlgorithm::Subsets, DetAlgorithm::Laplace}) {
                const auto start = std::chrono::steady_clock::now();
                Scalar sink = f.zero();
                for (const auto& x : inputs) sink += det(x, algo);
                const auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
                out << s.n << ',' << s.k << ',' << f.name() << ',' << to_string(algo) << ',' << inputs.size() << ','
                    << nanos << '\n';
            }
        }
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with the Cullis determinant det_{n,k} and its linear preservers", "cullis"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string file, file_b, a_path, b_path, phi_path, out_a, out_b, out_phi, out_path;
    std::string algo_name = "subsets";
    std::string field_name = "Q";
    int column = 1;
    int n = 0, k = 0, i = 0, j = 0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1000;
    std::uint64_t budget = 10'000'000;
    bool exhaustive = false;
    int bench_samples = 50;
    std::vector<std::string> bench_fields{"GF(7)", "Q"};

    auto* det_cmd = app.add_subcommand("det", "det_{n,k} of a matrix file");
    det_cmd->add_option("FILE", file, "matrix file")->required();
    det_cmd->add_option("--algo", algo_name, "def | subsets | laplace")->capture_default_str();
    det_cmd->add_option("--col", column, "expansion column for --algo laplace")->capture_default_str();

    auto* expand_cmd = app.add_subcommand("expand", "coefficients a_0..a_k of det(A + lambda B)");
    expand_cmd->add_option("A", file, "matrix file")->required();
    expand_cmd->add_option("B", file_b, "matrix file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "apply L^- (subtract the last row, drop it)");
    reduce_cmd->add_option("FILE", file, "matrix file")->required();
    auto* lift_cmd = app.add_subcommand("lift", "apply L^+ (append a zero row)");
    lift_cmd->add_option("FILE", file, "matrix file")->required();
    auto* lift_op_cmd = app.add_subcommand("lift-op", "L^+ o S o L^- for an operator file");
    lift_op_cmd->add_option("OP", file, "operator file")->required();
    auto* descend_op_cmd = app.add_subcommand("descend-op", "L^- o T o L^+ for an operator file");
    descend_op_cmd->add_option("OP", file, "operator file")->required();

    auto* check_ab_cmd = app.add_subcommand("check-ab", "test det(A(|d]) det(B) = sgn(d) for every d");
    check_ab_cmd->add_option("--a", a_path, "n x n matrix file")->required();
    check_ab_cmd->add_option("--b", b_path, "k x k matrix file")->required();

    auto* make_op_cmd = app.add_subcommand("make-op", "operator file of X -> AXB + phi(X)");
    make_op_cmd->add_option("--a", a_path, "n x n matrix file")->required();
    make_op_cmd->add_option("--b", b_path, "k x k matrix file")->required();
    make_op_cmd->add_option("--phi", phi_path, "k x nk matrix file (default 0)");
    make_op_cmd->add_option("--out", out_path, "write here instead of stdout");

    auto* scs_cmd = app.add_subcommand("scs", "operator file of SCS_{i,j} on n x k matrices");
    scs_cmd->add_option("n", n)->required();
    scs_cmd->add_option("k", k)->required();
    scs_cmd->add_option("i", i)->required();
    scs_cmd->add_option("j", j)->required();
    scs_cmd->add_option("--field", field_name, "GF(p) or Q")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify-op", "check det(T(X)) = det(X)");
    verify_cmd->add_option("OP", file, "operator file")->required();
    auto* samples_opt = verify_cmd->add_option("--samples", samples, "random draws")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "seed of the draws")->capture_default_str();
    verify_cmd->add_flag("--exhaustive", exhaustive, "enumerate all of M_{n,k}(GF(p))")->excludes(samples_opt);
    verify_cmd->add_option("--budget", budget, "largest space --exhaustive will enumerate")->capture_default_str();

    auto* decompose_cmd = app.add_subcommand("decompose", "recover A, B, phi with T(X) = AXB + phi(X)");
    decompose_cmd->add_option("OP", file, "operator file")->required();
    decompose_cmd->add_option("--out-a", out_a, "write A here");
    decompose_cmd->add_option("--out-b", out_b, "write B here");
    decompose_cmd->add_option("--out-phi", out_phi, "write phi here");
    decompose_cmd->add_option("--samples", samples, "draws for the preservation check")->default_val(200);
    decompose_cmd->add_option("--seed", seed, "seed of the draws")->capture_default_str();

    auto* radical_cmd = app.add_subcommand("radical", "basis of rad(det_{n,k})");
    radical_cmd->add_option("--n", n)->required();
    radical_cmd->add_option("--k", k)->required();
    radical_cmd->add_option("--field", field_name, "GF(p) or Q")->required();

    auto* member_cmd = app.add_subcommand("rad-member", "is the matrix in rad(det_{n,k})?");
    member_cmd->add_option("FILE", file, "matrix file")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the property catalog and acceptance criteria");
    selftest_cmd->add_option("--seed", seed, "catalog seed")->default_val(42);

    auto* bench_cmd = app.add_subcommand("bench", "time the three det algorithms, CSV on stdout");
    bench_cmd->add_option("--samples", bench_samples, "matrices per shape")->capture_default_str();
    bench_cmd->add_option("--seed", seed, "seed of the inputs")->capture_default_str();
    bench_cmd->add_option("--fields", bench_fields, "fields to time")->capture_default_str();

    std::vector<std::string> argv_storage{"cullis"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (det_cmd->parsed()) {
            const RectMatrix x = read_matrix_file(file);
            const auto algo = parse_det_algorithm(algo_name);
            out << (algo == DetAlgorithm::Laplace ? det_laplace(x, column) : det(x, algo)).to_string() << '\n';
            return kSuccess;
        }
        if (expand_cmd->parsed()) {
            const LambdaPoly poly = lambda_expand(read_matrix_file(file), read_matrix_file(file_b));
            for (int d = 0; d <= poly.degree_bound(); ++d) out << "a_" << d << ' ' << poly[d].to_string() << '\n';
            return kSuccess;
        }
        if (reduce_cmd->parsed()) {
            out << format_matrix(l_minus(read_matrix_file(file)));
            return kSuccess;
        }
        if (lift_cmd->parsed()) {
            out << format_matrix(l_plus(read_matrix_file(file)));
            return kSuccess;
        }
        if (lift_op_cmd->parsed()) {
            out << format_operator(lift_operator(read_operator_file(file)));
            return kSuccess;
        }
        if (descend_op_cmd->parsed()) {
            out << format_operator(descend_operator(read_operator_file(file)));
            return kSuccess;
        }
        if (check_ab_cmd->parsed()) {
            const auto report = check_two_sided(read_matrix_file(a_path), read_matrix_file(b_path));
            out << describe(report);
            return report.passed ? kSuccess : kFailure;
        }
        if (make_op_cmd->parsed()) {
            RectMatrix a = read_matrix_file(a_path);
            RectMatrix b = read_matrix_file(b_path);
            const auto report = check_two_sided(a, b);
            if (!report.passed) {
                out << describe(report);
                return kFailure;
            }
            const PreserverSpec spec = phi_path.empty()
                                           ? PreserverSpec::create(std::move(a), std::move(b))
                                           : PreserverSpec::create(std::move(a), std::move(b), read_matrix_file(phi_path));
            const std::string text = format_operator(spec_to_operator(spec));
            if (out_path.empty()) out << text;
            else write_text_file(out_path, text);
            return kSuccess;
        }
        if (scs_cmd->parsed()) {
            out << format_operator(scs(parse_field_option(field_name), n, k, i, j));
            return kSuccess;
        }
        if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.mode = exhaustive ? VerificationReport::Mode::Exhaustive : VerificationReport::Mode::Sampled;
            options.samples = samples;
            options.seed = seed;
            options.budget = budget;
            const auto report = verify_preserver(read_operator_file(file), options);
            out << describe(report);
            return report.passed ? kSuccess : kFailure;
        }
        if (decompose_cmd->parsed()) {
            const LinearOperator t = read_operator_file(file);
            require_decomposition_hypotheses(t.field(), t.n(), t.k());
            VerifyOptions verify;
            verify.samples = samples;
            verify.seed = seed;
            const auto report = verify_preserver(t, verify);
            if (!report.passed) {
                out << describe(report);
                return kFailure;
            }
            DecomposeOptions options;
            options.samples = samples;
            options.seed = seed;
            const PreserverSpec spec = decompose(t, options);
            auto emit = [&out](const std::string& path, const char* name, const RectMatrix& m) {
                if (path.empty()) out << "# " << name << '\n' << format_matrix(m);
                else write_text_file(path, format_matrix(m));
            };
            emit(out_a, "A", spec.a());
            emit(out_b, "B", spec.b());
            emit(out_phi, "phi", spec.phi());
            return kSuccess;
        }
        if (radical_cmd->parsed()) {
            const RadicalReport report = radical_basis(parse_field_option(field_name), n, k);
            out << "dimension " << report.basis.size() << '\n';
            for (const auto& y : report.basis) out << '\n' << format_matrix(y);
            return kSuccess;
        }
        if (member_cmd->parsed()) {
            const auto result = radical_membership(read_matrix_file(file));
            out << (result.member ? "true" : "false") << '\n';
            if (result.witness) print_witness(out, *result.witness);
            return kSuccess;
        }
        if (selftest_cmd->parsed()) {
            const auto report = selftest::run_catalog(seed);
            out << selftest::render(report);
            return report.passed() ? kSuccess : kFailure;
        }
        if (bench_cmd->parsed()) {
            if (bench_samples < 1) throw Error(Errc::BadDimensions, "--samples must be positive");
            return bench(out, seed, bench_samples, bench_fields);
        }
    } catch (const Error& e) {
        err << "cullis: " << e.what() << '\n';
        return status_for(e.code());
    }
    return kUsage;
}

}  // namespace cullis::cli
