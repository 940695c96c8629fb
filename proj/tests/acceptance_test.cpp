// Runs every acceptance check; exit status is nonzero iff one fails.

#include <cstdlib>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
    rmideal::acceptance::Options opts;
    if (argc > 1) opts.only = argv[1];
    if (const char* seed = std::getenv("RMIDEAL_SEED")) opts.seed = std::strtoull(seed, nullptr, 10);
    const auto results = rmideal::acceptance::run(opts, std::cout);
    std::size_t pass = 0, fail = 0, info = 0;
    for (const auto& r : results) {
        switch (r.status) {
            case rmideal::acceptance::Status::Pass: ++pass; break;
            case rmideal::acceptance::Status::Fail: ++fail; break;
            case rmideal::acceptance::Status::Info: ++info; break;
        }
    }
    std::cout << "summary: " << pass << " pass, " << info << " info, " << fail << " fail\n";
    return fail == 0 && !results.empty() ? 0 : 1;
}
