// Command line front end.  Subcommands: solve, verify, oracle, generate, stats.
// Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 input error,
// 3 resource guard tripped.

#include <cstdio>

#include "CLI11.hpp"
#include "teec/io.hpp"
#include "teec/model.hpp"

int main(int argc, char** argv) {
    CLI::App app{"temporal exact edge-cover toolkit"};
    app.require_subcommand(1);
    // Subcommands are registered as the solver stack lands; placeholder build.
    auto* stats = app.add_subcommand("stats", "print instance statistics");
    std::string path;
    stats->add_option("file", path, "instance file")->required();
    CLI11_PARSE(app, argc, argv);
    try {
        teec::Instance inst = teec::load_instance_file(path);
        std::printf("n=%d m=%d\n", inst.graph.n(), inst.graph.m());
    } catch (const teec::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
