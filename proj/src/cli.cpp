#include "z2z4/cli.hpp"

#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "z2z4/codefile.hpp"
#include "z2z4/cyclicgen.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/howell.hpp"
#include "z2z4/oracle.hpp"

namespace z2z4::cli {

namespace {

AdditiveCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

/// Small deterministic generating set in the original column order.
MixedMatrix reduced_generators(const AdditiveCode& c) {
    auto h = detail::howell_xy(c.gens);
    MixedMatrix out;
    out.alpha = c.alpha();
    out.beta = c.beta();
    for (const auto& r : h.rows)
        out.rows.push_back(detail::unembed_xy(r, c.alpha(), c.beta()));
    return out;
}

void print_tuple(std::ostream& out, const CyclicGenerators& g, bool pretty) {
    if (pretty) {
        out << "b: " << g.b.to_pretty_string() << "\n";
        out << "l: " << g.l.to_pretty_string() << "\n";
        out << "f: " << g.f.to_pretty_string() << "\n";
        out << "h: " << g.h.to_pretty_string() << "\n";
    } else {
        out << "b: " << g.b.to_coeff_string() << "\n";
        out << "l: " << g.l.to_coeff_string() << "\n";
        out << "f: " << g.f.to_coeff_string() << "\n";
        out << "h: " << g.h.to_coeff_string() << "\n";
    }
}

std::string cardinality_string(std::size_t log2_size) {
    if (log2_size < 64) return std::to_string(std::uint64_t{1} << log2_size);
    return "2^" + std::to_string(log2_size);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z2Z4-additive cyclic code toolkit"};
    app.require_subcommand(1);
    // --h is a polynomial option below, so help must not claim -h.
    app.set_help_flag("--help", "Print help");

    std::string file;
    bool pretty = false;
    bool closure = false;
    std::size_t alpha = 0, beta = 0;
    std::uint64_t seed = 0;
    std::string b_str = "0", l_str = "0", f_str, h_str;

    auto* cmd_gen = app.add_subcommand("generators",
                                       "Compute the generator polynomials b, l, f, h");
    cmd_gen->add_option("file", file, "code file")->required();
    cmd_gen->add_flag("--pretty", pretty, "print polynomials in display form");
    cmd_gen->add_flag("--closure", closure, "close the code under shifts first");

    auto* cmd_verify = app.add_subcommand("verify", "Cyclicity, type and round-trip check");
    cmd_verify->add_option("file", file, "code file")->required();

    auto* cmd_rec = app.add_subcommand("reconstruct", "Build a code from a polynomial tuple");
    cmd_rec->add_option("--alpha", alpha, "binary length")->required();
    cmd_rec->add_option("--beta", beta, "quaternary length (odd)")->required();
    cmd_rec->add_option("--b", b_str, "b coefficients, ascending");
    cmd_rec->add_option("--l", l_str, "l coefficients, ascending");
    cmd_rec->add_option("--f", f_str, "f coefficients, ascending")->required();
    cmd_rec->add_option("--h", h_str, "h coefficients, ascending")->required();

    auto* cmd_type = app.add_subcommand("type", "Print the type (alpha, beta; gamma, delta; kappa)");
    cmd_type->add_option("file", file, "code file")->required();

    auto* cmd_sf = app.add_subcommand("standard-form", "Standard generator matrix and permutations");
    cmd_sf->add_option("file", file, "code file")->required();

    auto* cmd_info = app.add_subcommand("info", "Cardinality, torsion and residue of C_Y");
    cmd_info->add_option("file", file, "code file")->required();

    auto* cmd_sample = app.add_subcommand("sample", "Sample a valid generator tuple");
    cmd_sample->add_option("--alpha", alpha, "binary length")->required();
    cmd_sample->add_option("--beta", beta, "quaternary length (odd)")->required();
    cmd_sample->add_option("--seed", seed, "RNG seed")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_gen->parsed()) {
            AdditiveCode c = load_code(file);
            if (closure) {
                MixedMatrix closed = c.gens;
                for (const auto& r : c.gens.rows) {
                    MixedWord w = shift(r);
                    std::size_t period =
                        c.alpha() == 0 ? c.beta()
                                       : (c.beta() == 0 ? c.alpha() : std::lcm(c.alpha(), c.beta()));
                    for (std::size_t i = 1; i < period; ++i) {
                        closed.rows.push_back(w);
                        w = shift(w);
                    }
                }
                c = AdditiveCode{std::move(closed)};
            }
            print_tuple(out, compute_generators(c), pretty);
        } else if (cmd_verify->parsed()) {
            AdditiveCode c = load_code(file);
            bool cyc = is_cyclic(c);
            out << "cyclic: " << (cyc ? "yes" : "no") << "\n";
            out << "type: " << code_type(c.gens).to_string() << "\n";
            if (!cyc || c.beta() == 0 || c.beta() % 2 == 0) {
                out << "roundtrip: skipped\n";
            } else {
                CyclicGenerators g = compute_generators(c);
                if (!verify_conditions(g).all_pass() || !equals(reconstruct(g), c)) {
                    out << "roundtrip: FAILED\n";
                    return 3;
                }
                out << "roundtrip: ok\n";
            }
        } else if (cmd_rec->parsed()) {
            CyclicGenerators g{alpha, beta, BinaryPoly::from_coeff_string(b_str),
                               BinaryPoly::from_coeff_string(l_str),
                               QuatPoly::from_coeff_string(f_str),
                               QuatPoly::from_coeff_string(h_str)};
            out << print_code_file(reduced_generators(reconstruct(g)));
        } else if (cmd_type->parsed()) {
            out << code_type(load_code(file).gens).to_string() << "\n";
        } else if (cmd_sf->parsed()) {
            StandardForm sf = standard_form(load_code(file).gens);
            out << "gamma: " << sf.gamma << "\n";
            out << "delta: " << sf.delta << "\n";
            out << "kappa: " << sf.kappa << "\n";
            out << "matrix:\n";
            std::istringstream rows(print_code_file(sf.matrix));
            std::string line;
            std::getline(rows, line);  // rows of the matrix only, no header
            while (std::getline(rows, line)) out << line << "\n";
            out << "perm_x:";
            for (auto i : sf.perm_x) out << " " << i;
            out << "\n";
            out << "perm_y:";
            for (auto j : sf.perm_y) out << " " << j;
            out << "\n";
        } else if (cmd_info->parsed()) {
            AdditiveCode c = load_code(file);
            auto h = detail::howell_xy(c.gens);
            out << "cardinality: " << cardinality_string(h.log2_size()) << "\n";
            if (c.beta() > 0) {
                auto cy = puncture_y(c);
                out << "torsion: "
                    << gen_poly_binary_cyclic(torsion(cy, c.beta()), c.beta()).to_coeff_string()
                    << "\n";
                out << "residue: "
                    << gen_poly_binary_cyclic(residue(cy, c.beta()), c.beta()).to_coeff_string()
                    << "\n";
            }
        } else if (cmd_sample->parsed()) {
            CyclicGenerators g = sample_valid_generators(alpha, beta, seed);
            print_tuple(out, g, false);
            out << "code:\n";
            out << print_code_file(reduced_generators(reconstruct(g)));
        }
    } catch (const InternalInconsistency& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotCyclic&) {
        err << "error: code is not cyclic\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace z2z4::cli
