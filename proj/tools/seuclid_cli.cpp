#include "seuclid/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    namespace cli = seuclid::cli;
    CLI::App app{"Exact certifier for S-norm-Euclidean complex quadratic fields"};
    app.require_subcommand(1);

    std::string d_text, p_text, s_text, path, format = "text";
    std::optional<std::string> kmax, cert;
    long long d_max = 0, n_max = 4, coeff = 40;

    auto* check = app.add_subcommand("check", "decide whether Q(sqrt(-d)) is S-norm-Euclidean");
    check->add_option("d", d_text, "squarefree positive integer")->required();
    check->add_option("-s,--s", s_text, "comma-separated primes (empty for S = {})");
    check->add_option("--kmax", kmax, "cap on the interval denominators");
    check->add_option("--cert", cert, "write the certificate as JSON");

    auto* table = app.add_subcommand("table", "survey all squarefree d up to a bound");
    table->add_option("-s,--s", s_text, "comma-separated primes");
    table->add_option("--dmax", d_max, "largest d")->required();
    table->add_option("--format", format, "text or json");

    auto* render = app.add_subcommand("render", "draw the certificate as SVG");
    render->add_option("d", d_text)->required();
    render->add_option("-s,--s", s_text, "comma-separated primes");
    render->add_option("-o,--output", path, "output .svg path")->required();

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("cert", path, "certificate JSON")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force minimum of N_S(xi0 - alpha) on a grid");
    oracle->add_option("d", d_text)->required();
    oracle->add_option("p", p_text)->required();
    oracle->add_option("--nmax", n_max, "largest exponent n in p^n");
    oracle->add_option("--coeff", coeff, "bound on |a|, |b|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kInputError;
    }

    if (*check) return cli::cmd_check(d_text, s_text, kmax, cert, std::cout, std::cerr);
    if (*table) return cli::cmd_table(s_text, d_max, format, std::cout, std::cerr);
    if (*render) return cli::cmd_render(d_text, s_text, path, std::cout, std::cerr);
    if (*verify) return cli::cmd_verify(path, std::cout, std::cerr);
    if (*oracle) return cli::cmd_oracle(d_text, p_text, n_max, coeff, std::cout, std::cerr);
    return cli::kInputError;
}
