#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

// Command bodies behind the CLI, callable directly from tests. Exit codes:
// 0 all checks pass, 1 a check failed (non-monotone map, failing ledger,
// sweep failures, ...), 2 input error. JSON goes to `out`; diagnostics to
// `err`.
namespace fintop::cli {

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

int cmd_info(const std::string& poset_path, bool json, Streams io);
int cmd_homology(const std::string& poset_path, Streams io);
// edge_spec: "UPPER,LOWER" by label.
int cmd_contract(const std::string& poset_path, const std::string& edge_spec, Streams io);
int cmd_decompose(const std::string& dom_path, const std::string& cod_path,
                  const std::string& map_path, Streams io);
int cmd_verify(const std::string& dom_path, const std::string& cod_path,
               const std::string& map_path, Streams io);
int cmd_monotone(const std::string& dom_path, const std::string& cod_path,
                 const std::string& map_path, Streams io);
int cmd_factorize(const std::string& dom_path, const std::string& cod_path,
                  const std::string& map_path, Streams io);
int cmd_gminimal(const std::string& poset_path, Streams io);

struct SweepArgs {
    int max_n = 4;
    std::string checks = "default"; // "default", "all", or comma list
    std::uint64_t seed = 1;
    int jobs = 1;
};

int cmd_sweep(const SweepArgs& args, Streams io);

} // namespace fintop::cli
