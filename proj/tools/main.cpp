// hsub: exact toolkit for Hermite subdivision masks, Taylor operator
// factorizations, and the coefficient tables behind them.
//
// Exit codes: 0 success / property holds, 1 property checked and false,
// 2 input or format error, 3 mathematical hypothesis violated (non-exact
// division, singular symbol, infeasible construction).

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "hsub/combinatorics.hpp"
#include "hsub/errors.hpp"
#include "hsub/factorization.hpp"
#include "hsub/io.hpp"
#include "hsub/operators.hpp"
#include "hsub/printing.hpp"
#include "hsub/remainder.hpp"
#include "hsub/spectral.hpp"
#include "hsub/subdivision.hpp"

namespace {

using namespace hsub;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitFormat = 2;
constexpr int kExitHypothesis = 3;

// Accepts the rational text form and plain decimals ("0.5" -> 1/2).
Rational parse_point(const std::string& s) {
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    if (head.empty()) head = "0";
    if (tail.empty()) throw FormatError("invalid number: '" + s + "'");
    Rational scale = Rational(10).pow(static_cast<int>(tail.size()));
    Rational value = Rational::parse(head) * scale + Rational::parse(tail);
    value /= scale;
    return neg ? -value : value;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty())
        std::cout << payload;
    else
        write_file(out_path, payload);
}

struct CoeffsOpts {
    int n = 0, k = 1, m = 0, p = 0;
    std::string kind;
    bool table = false;
};

int run_coeffs_gregory(const CoeffsOpts& o) {
    if (o.table) {
        for (int n = 0; n <= o.n; ++n) {
            for (int k = 1; k <= o.k; ++k) std::cout << (k > 1 ? "\t" : "") << gregory_g(n, k).str();
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::cout << gregory_g(o.n, o.k).str() << "\n";
    return kExitOk;
}

int run_coeffs_stirling(const CoeffsOpts& o) {
    auto value = [&](int n, int m) -> mpz_class {
        if (o.kind == "second") return stirling2(n, m);
        if (o.kind == "first") return stirling1_unsigned(n, m);
        return stirling1_signed(n, m);
    };
    if (o.table) {
        for (int n = 0; n <= o.n; ++n) {
            for (int m = 0; m <= n; ++m) std::cout << (m ? "\t" : "") << value(n, m).get_str();
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::cout << value(o.n, o.m).get_str() << "\n";
    return kExitOk;
}

int run_coeffs_pcauchy(const CoeffsOpts& o) {
    if (o.table) {
        for (int n = 0; n <= o.n; ++n) {
            for (int p = 0; p <= o.p; ++p) std::cout << (p ? "\t" : "") << p_cauchy(n, p).str();
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::cout << p_cauchy(o.n, o.p).str() << "\n";
    return kExitOk;
}

struct OpOpts {
    int d = 1, n = -1;
    std::string variant;
    std::string format = "delta";
};

int run_op_taylor(const OpOpts& o) {
    DiffOp op = [&] {
        if (o.variant == "augmented") {
            if (o.n < o.d) throw FormatError("--variant augmented needs --n >= d");
            return augmented_taylor(o.d, o.n);
        }
        if (o.variant == "incomplete") return taylor(o.d, TaylorVariant::incomplete);
        if (o.variant == "complete") return taylor(o.d, TaylorVariant::complete);
        return taylor(o.d, TaylorVariant::prime);
    }();
    std::cout << to_string(op, o.format == "symbol" ? OpFormat::symbol : OpFormat::delta);
    return kExitOk;
}

struct SpectralOpts {
    std::string mask_path, polys_path, out_path;
    int order = -1;
};

int run_spectral_check(const SpectralOpts& o) {
    Mask A = mask_from_json(read_file(o.mask_path));
    std::vector<bool> ok;
    if (!o.polys_path.empty()) {
        SpectralSystem sys = spectral_system_from_json(read_file(o.polys_path));
        if (sys.d != A.d()) throw FormatError("spectral system dimension does not match the mask");
        if (o.order >= 0 && o.order < sys.order) {
            sys.order = o.order;
            sys.polys.resize(static_cast<std::size_t>(o.order) + 1);
        }
        ok = spectral_check(A, sys).ok;
    } else {
        if (o.order < 0) throw FormatError("spectral check needs --order (or --polys)");
        SpectralSolveResult res = spectral_solve(A, o.order);
        for (int k = 0; k <= o.order; ++k) ok.push_back(res.ok() || k < res.failed_order);
    }
    bool all = true;
    for (std::size_t k = 0; k < ok.size(); ++k) {
        std::cout << k << "\t" << (ok[k] ? "true" : "false") << "\n";
        all = all && ok[k];
    }
    return all ? kExitOk : kExitFalse;
}

int run_spectral_solve(const SpectralOpts& o) {
    Mask A = mask_from_json(read_file(o.mask_path));
    SpectralSolveResult res = spectral_solve(A, o.order);
    if (!res.ok()) {
        std::cerr << "no spectral polynomial of order " << res.failed_order << " exists for this mask\n";
        return kExitFalse;
    }
    emit(spectral_system_to_json(*res.system), o.out_path);
    return kExitOk;
}

struct FactorOpts {
    std::string mask_path, out_path;
    std::string method = "direct";
    int order = 0;
    bool verify = false;
};

int run_factor(const FactorOpts& o) {
    Mask A = mask_from_json(read_file(o.mask_path));
    if (o.order < A.d()) throw FormatError("--order must be >= d");
    FactorizationResult result = [&] {
        if (o.method == "chain") return factor_chain(A, o.order).back();
        return factor_direct(A, augmented_taylor(A.d(), o.order), o.order);
    }();
    std::string payload = mask_to_json(result.factor);
    emit(payload, o.out_path);
    std::cerr << "order " << result.order_j << ": identity " << (result.verified ? "verified" : "FAILED")
              << ", dim E_B = " << result.eigenspace_1.size() << ", dim E_2B = " << result.eigenspace_2.size()
              << (result.rank_one_flagged ? " (flagged: dim E_2B != 1)" : "") << "\n";
    if (!result.verified) return kExitHypothesis;
    if (o.verify) {
        Mask reparsed = mask_from_json(o.out_path.empty() ? payload : read_file(o.out_path));
        DiffOp T = augmented_taylor(A.d(), o.order);
        LaurentMatrix lhs = T.symbol() * A.symbol();
        LaurentMatrix rhs = Rational::pow2(-o.order) * (reparsed.symbol() * T.symbol().substitute_square());
        if (lhs != rhs) {
            std::cerr << "verification of the emitted factor failed\n";
            return kExitHypothesis;
        }
        std::cerr << "emitted factor re-verified\n";
    }
    return kExitOk;
}

struct SubdivideOpts {
    std::string mask_path, data_path, out_path;
    int levels = 1;
    bool normalized = false;
};

int run_subdivide(const SubdivideOpts& o) {
    Mask A = mask_from_json(read_file(o.mask_path));
    VecSeq c0 = vecseq_from_json(read_file(o.data_path));
    VecSeq out = hermite_iterate(A, c0, o.levels, o.normalized);
    emit(vecseq_to_json(out), o.out_path);
    return kExitOk;
}

struct RemainderOpts {
    int d = 1, n = 1;
    std::string function = "exp";
    std::string x0 = "0";
    double tol = 1e-10;
};

int run_remainder_check(const RemainderOpts& o) {
    AnalyticFn f = AnalyticFn::parse(o.function);
    InterpretReport report = interpret_check(f, o.d, o.n, parse_point(o.x0), o.tol);
    std::cout << "row\toperator\tremainder\tdiscrepancy\n";
    for (const auto& r : report.rows)
        std::cout << r.row << "\t" << fmt_double(r.operator_side) << "\t" << fmt_double(r.remainder_side) << "\t"
                  << fmt_double(r.discrepancy) << "\n";
    return kExitOk;
}

struct MaskConstructOpts {
    int d = 1, order = 1;
    std::string support, out_path;
};

int run_mask_construct(const MaskConstructOpts& o) {
    std::size_t colon = o.support.find(':');
    if (colon == std::string::npos) throw FormatError("--support must be LO:HI");
    int lo, hi;
    try {
        lo = std::stoi(o.support.substr(0, colon));
        hi = std::stoi(o.support.substr(colon + 1));
    } catch (const std::exception&) {
        throw FormatError("--support must be LO:HI with integers");
    }
    Mask m = mask_construct(o.d, o.order, lo, hi);
    emit(mask_to_json(m), o.out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hermite subdivision toolkit: coefficient tables, Taylor operators, spectral conditions,"
                 " mask factorizations, subdivision iteration, remainder checks"};
    app.require_subcommand(1);

    CoeffsOpts coeffs;
    auto* cmd_coeffs = app.add_subcommand("coeffs", "print coefficient values or tables");
    cmd_coeffs->require_subcommand(1);
    auto* cmd_gregory = cmd_coeffs->add_subcommand("gregory", "G_n^k, repeated-integration coefficients");
    cmd_gregory->add_option("--n", coeffs.n, "row index n")->required()->check(CLI::NonNegativeNumber);
    cmd_gregory->add_option("--k", coeffs.k, "integration depth k")->check(CLI::PositiveNumber);
    cmd_gregory->add_flag("--table", coeffs.table, "print the full grid up to (n, k)");
    auto* cmd_stirling = cmd_coeffs->add_subcommand("stirling", "Stirling numbers");
    cmd_stirling->add_option("--kind", coeffs.kind, "first | first-signed | second")
        ->required()
        ->check(CLI::IsMember({"first", "first-signed", "second"}));
    cmd_stirling->add_option("--n", coeffs.n, "n")->required()->check(CLI::NonNegativeNumber);
    cmd_stirling->add_option("--m", coeffs.m, "m")->check(CLI::NonNegativeNumber);
    cmd_stirling->add_flag("--table", coeffs.table, "print the triangle up to n");
    auto* cmd_pcauchy = cmd_coeffs->add_subcommand("pcauchy", "p-Cauchy numbers C_{n,p}");
    cmd_pcauchy->add_option("--n", coeffs.n, "n")->required()->check(CLI::NonNegativeNumber);
    cmd_pcauchy->add_option("--p", coeffs.p, "p")->check(CLI::NonNegativeNumber);
    cmd_pcauchy->add_flag("--table", coeffs.table, "print the grid up to (n, p)");

    OpOpts op_opts;
    auto* cmd_op = app.add_subcommand("op", "print difference operators");
    cmd_op->require_subcommand(1);
    auto* cmd_taylor = cmd_op->add_subcommand("taylor", "Taylor operator family");
    cmd_taylor->add_option("--d", op_opts.d, "dimension parameter d")->required()->check(CLI::PositiveNumber);
    cmd_taylor->add_option("--n", op_opts.n, "order (augmented variant)");
    cmd_taylor->add_option("--variant", op_opts.variant, "incomplete | complete | prime | augmented")
        ->required()
        ->check(CLI::IsMember({"incomplete", "complete", "prime", "augmented"}));
    cmd_taylor->add_option("--format", op_opts.format, "delta | symbol")
        ->check(CLI::IsMember({"delta", "symbol"}));

    SpectralOpts spectral_opts;
    auto* cmd_spectral = app.add_subcommand("spectral", "spectral condition checks and solves");
    cmd_spectral->require_subcommand(1);
    auto* cmd_scheck = cmd_spectral->add_subcommand("check", "verify the spectral condition per order");
    cmd_scheck->add_option("--mask", spectral_opts.mask_path, "mask file")->required();
    cmd_scheck->add_option("--order", spectral_opts.order, "highest order to check");
    cmd_scheck->add_option("--polys", spectral_opts.polys_path, "spectral system file (otherwise solved)");
    auto* cmd_ssolve = cmd_spectral->add_subcommand("solve", "solve for spectral polynomials");
    cmd_ssolve->add_option("--mask", spectral_opts.mask_path, "mask file")->required();
    cmd_ssolve->add_option("--max-order", spectral_opts.order, "highest order to solve")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_ssolve->add_option("--out", spectral_opts.out_path, "output file (stdout otherwise)");

    FactorOpts factor_opts;
    auto* cmd_factor = app.add_subcommand("factor", "factor a mask through the augmented Taylor operator");
    cmd_factor->add_option("--mask", factor_opts.mask_path, "mask file")->required();
    cmd_factor->add_option("--order", factor_opts.order, "factorization order j")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_factor->add_option("--method", factor_opts.method, "direct | chain")
        ->check(CLI::IsMember({"direct", "chain"}));
    cmd_factor->add_option("--out", factor_opts.out_path, "output file (stdout otherwise)");
    cmd_factor->add_flag("--verify", factor_opts.verify, "re-verify the emitted factor file");

    SubdivideOpts subdivide_opts;
    auto* cmd_subdivide = app.add_subcommand("subdivide", "iterate the level-dependent Hermite scheme");
    cmd_subdivide->add_option("--mask", subdivide_opts.mask_path, "mask file")->required();
    cmd_subdivide->add_option("--data", subdivide_opts.data_path, "initial data file")->required();
    cmd_subdivide->add_option("--levels", subdivide_opts.levels, "iteration levels")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_subdivide->add_flag("--normalized", subdivide_opts.normalized,
                            "multiply the result by Dil^levels (stationary-operator view)");
    cmd_subdivide->add_option("--out", subdivide_opts.out_path, "output file (stdout otherwise)");

    RemainderOpts remainder_opts;
    auto* cmd_remainder = app.add_subcommand("remainder", "remainder interpretation of the augmented operator");
    cmd_remainder->require_subcommand(1);
    auto* cmd_rcheck = cmd_remainder->add_subcommand("check", "per-row operator vs remainder table");
    cmd_rcheck->add_option("--d", remainder_opts.d, "dimension parameter d")->required()->check(CLI::PositiveNumber);
    cmd_rcheck->add_option("--n", remainder_opts.n, "operator order n >= d")->required();
    cmd_rcheck->add_option("--function", remainder_opts.function, "exp | sin | poly:c0,c1,...")->required();
    cmd_rcheck->add_option("--x0", remainder_opts.x0, "evaluation point (rational or decimal)");
    cmd_rcheck->add_option("--tol", remainder_opts.tol, "quadrature tolerance")->check(CLI::PositiveNumber);

    MaskConstructOpts construct_opts;
    auto* cmd_mask = app.add_subcommand("mask", "mask utilities");
    cmd_mask->require_subcommand(1);
    auto* cmd_construct = cmd_mask->add_subcommand("construct", "build a mask of prescribed spectral order");
    cmd_construct->add_option("--d", construct_opts.d, "dimension parameter d")->required()->check(CLI::PositiveNumber);
    cmd_construct->add_option("--order", construct_opts.order, "spectral order n >= d")->required();
    cmd_construct->add_option("--support", construct_opts.support, "support interval LO:HI")->required();
    cmd_construct->add_option("--out", construct_opts.out_path, "output file (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitFormat;
    }

    try {
        if (cmd_gregory->parsed()) return run_coeffs_gregory(coeffs);
        if (cmd_stirling->parsed()) return run_coeffs_stirling(coeffs);
        if (cmd_pcauchy->parsed()) return run_coeffs_pcauchy(coeffs);
        if (cmd_taylor->parsed()) return run_op_taylor(op_opts);
        if (cmd_scheck->parsed()) return run_spectral_check(spectral_opts);
        if (cmd_ssolve->parsed()) return run_spectral_solve(spectral_opts);
        if (cmd_factor->parsed()) return run_factor(factor_opts);
        if (cmd_subdivide->parsed()) return run_subdivide(subdivide_opts);
        if (cmd_rcheck->parsed()) return run_remainder_check(remainder_opts);
        if (cmd_construct->parsed()) return run_mask_construct(construct_opts);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const NotExactlyDivisible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const SingularMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const InfeasibleConstruction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const SpectralOrderInsufficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return kExitOk;
}
