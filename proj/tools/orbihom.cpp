// Command-line front end: validate, homology, subdivide, product, verify,
// example.  Exit codes: 0 success, 1 validation/verification failure,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "orbihom/cli.hpp"

namespace {

/// "example teardrop:3" and "example:teardrop:3" both name a generated input.
std::string resolve_input(const std::string& first, const std::string& second)
{
    if (first == "example" && !second.empty())
        return "example:" + second;
    return first;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"weighted and stratified simplicial homology of pseudo-orbifolds"};
    app.require_subcommand(1);

    std::string input, input2, out_path;
    std::string theory = "wt";
    std::string coeff = "Z";
    bool witnesses = false;
    int times = 1;
    bool check = false;
    std::string suite = "all";
    std::uint64_t seed = 1;
    int cases = 50;

    CLI::App* validate = app.add_subcommand("validate", "check a complex file against the weight axioms");
    validate->add_option("input", input, "complex file or example:<spec>")->required();
    validate->add_option("spec", input2, "example spec when input is 'example'");

    CLI::App* homology = app.add_subcommand("homology", "compute a homology profile");
    homology->add_option("input", input, "complex file or example:<spec>")->required();
    homology->add_option("spec", input2, "example spec when input is 'example'");
    homology->add_option("--theory", theory, "wt | st | st-stage=N | st-stage=inf");
    homology->add_option("--coeff", coeff, "Z | Q | Fp=<p> | Zm=<m>");
    homology->add_flag("--witnesses", witnesses, "emit representative cycles");

    CLI::App* subdivide = app.add_subcommand("subdivide", "barycentric subdivision Sd^m");
    subdivide->add_option("input", input, "complex file or example:<spec>")->required();
    subdivide->add_option("--times", times, "number of subdivisions (>= 1)");
    subdivide->add_flag("--check", check, "verify subdivision invariance per iteration");
    subdivide->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* product = app.add_subcommand("product", "Cartesian product of two complexes");
    product->add_option("inputA", input, "first factor")->required();
    product->add_option("inputB", input2, "second factor")->required();
    product->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the executable theorem suites");
    verify->add_option("--suite", suite, "simplex | subdivision | coefficients | euler | all");
    verify->add_option("--seed", seed, "base seed for case generation");
    verify->add_option("--cases", cases, "random cases per suite");

    CLI::App* example = app.add_subcommand("example", "print a generated complex file");
    example->add_option("spec", input, "e.g. teardrop:5, sphere:6,12,27,36,108, surface:g=2;k=3,3")
        ->required();
    example->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : orbihom::cli::kExitUsage;
    }

    if (validate->parsed())
        return orbihom::cli::cmd_validate(resolve_input(input, input2), std::cout, std::cerr);
    if (homology->parsed())
        return orbihom::cli::cmd_homology(resolve_input(input, input2), theory, coeff, witnesses,
                                          std::cout, std::cerr);
    if (subdivide->parsed())
        return orbihom::cli::cmd_subdivide(input, times, check, out_path, std::cout, std::cerr);
    if (product->parsed())
        return orbihom::cli::cmd_product(input, input2, out_path, std::cout, std::cerr);
    if (verify->parsed())
        return orbihom::cli::cmd_verify(suite, seed, cases, std::cout, std::cerr);
    if (example->parsed())
        return orbihom::cli::cmd_example(input, out_path, std::cout, std::cerr);
    return orbihom::cli::kExitUsage;
}
