#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chen/verifier.hpp"

int main(int argc, char** argv) {
    CLI::App app{"chenverify: exact verification of idempotent conjugacy in Q[GL_2(F_p)]"};

    unsigned p = 0;
    std::string task = "all";
    std::string output = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    int max_attempts = 50;
    std::optional<unsigned> epsilon;

    app.add_option("--p", p, "odd prime in 3..13")->required();
    app.add_option("--task", task,
                   "what to run: tables, dims, idempotents, conjugacy, certificate, all")
        ->capture_default_str();
    app.add_option("--output", output, "report format: text or json")->capture_default_str();
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_option("--seed", seed, "seed for the conjugator sampling")->capture_default_str();
    app.add_option("--max-attempts", max_attempts, "conjugator samples before giving up")
        ->capture_default_str();
    app.add_option("--epsilon", epsilon,
                   "override the non-residue used to build F_{p^2} (must be a non-residue)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits cleanly, bad usage is exit 2
    }

    chen::Options opt;
    opt.p = p;
    opt.task = task;
    opt.output = output;
    opt.out_path = out_path;
    opt.seed = seed;
    opt.max_attempts = max_attempts;
    opt.epsilon = epsilon;
    return chen::run_verifier(opt, std::cout, std::cerr);
}
